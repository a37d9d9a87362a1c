#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "homeology/abelian_group.hpp"
#include "homeology/chain.hpp"
#include "homeology/coefficients.hpp"
#include "homeology/complex.hpp"
#include "homeology/filtered.hpp"

namespace hml {

using Bidegree = std::pair<int, int>;  // (p, q)

/// (p,q) -> group, zero cells omitted.
struct BigradedTable {
    int page = 2;
    std::map<Bidegree, AbelianGroup> cells;

    AbelianGroup at(int p, int q) const;
    void set(int p, int q, const AbelianGroup& g);
    friend bool operator==(const BigradedTable& a, const BigradedTable& b) { return a.cells == b.cells; }
};

struct PageCell {
    int p = 0;
    int q = 0;
    Subquotient quotient;  // over the complex's basis in degree q - p
    AbelianGroup group;    // after the coefficient rule (Q drops torsion)
};

struct SpectralPage {
    int r = 1;
    std::map<Bidegree, PageCell> cells;
    /// Differential out of each nonzero cell whose target is nonzero, on stored generators.
    std::map<Bidegree, DenseMatrix> differentials;

    BigradedTable table() const;
};

/// Spectral sequence of a FilteredComplex, pages computed from Z_r / B_r lattices.
class SpectralSequence {
public:
    SpectralSequence(FilteredComplex f, Coefficients coeffs = {});

    const FilteredComplex& complex() const { return f_; }
    const Coefficients& coefficients() const { return coeffs_; }
    /// Target bidegree of the page-r differential out of (p,q).
    Bidegree target(int r, int p, int q) const;
    const Subquotient& cell(int r, int p, int q) const;
    AbelianGroup group(int r, int p, int q) const { return coeffs_.finalize(cell(r, p, q).group()); }
    /// Page-r differential out of (p,q) as a (target generators) x (source generators) matrix.
    DenseMatrix differential(int r, int p, int q) const;
    SpectralPage page(int r) const;
    BigradedTable table(int r) const;
    /// Filtration width; pages are stationary for r > width.
    int width() const;
    BigradedTable e_infinity() const;
    /// Homology of the total complex, keyed by total degree q - p.
    GradedGroup total() const;
    /// E_{r+1} equals the homology of (E_r, d_r) at every cell.
    bool check_next_page(int r) const;
    /// Bidegrees that can be nonzero.
    std::vector<Bidegree> support() const;

private:
    const IntMatrix& cycles(int n, int f, int r) const;
    int filtration_of(int p) const { return f_.homological ? -p : p; }

    FilteredComplex f_;
    Coefficients coeffs_;
    Domain dom_;
    mutable std::map<std::tuple<int, int, int>, IntMatrix> cycles_;  // (n, columns, first row)
    mutable std::map<std::tuple<int, int, int>, Subquotient> cells_;
};

/// E_2 of N^{*,*}(K) (or Ñ in reduced mode).
BigradedTable cohomeology(const SimplicialComplex& k, const Coefficients& coeffs = {}, bool reduced = false);
/// E^2 of N_{*,*}(K).
BigradedTable homeology(const SimplicialComplex& k, const Coefficients& coeffs = {}, bool reduced = false);
BigradedTable table_from_filtered(const FilteredComplex& f, const Coefficients& coeffs, int page);

/// Page 1 assembled from link cohomology: E_1^{p,q} = ⊕_{|σ|=p+1} H̃^{q-p-1}(link σ).
struct LinkCell {
    int p = 0;
    int q = 0;
    std::vector<Simplex> simplices;  // σ for each summand (∅ in the reduced column)
    std::vector<LinkCohomology> parts;
    std::vector<std::size_t> offsets;  // first generator of each summand
    Presentation presentation;
    AbelianGroup group;
};

struct LinkPage {
    Coefficients coeffs;
    std::map<Bidegree, LinkCell> cells;
    std::map<Bidegree, DenseMatrix> differentials;  // Δ_1 out of each cell

    BigradedTable e1() const;
    /// Homology of (E_1, Δ_1).
    BigradedTable e2() const;
};

LinkPage e1_via_links(const SimplicialComplex& k, const Coefficients& coeffs = {}, bool reduced = false);

}  // namespace hml
