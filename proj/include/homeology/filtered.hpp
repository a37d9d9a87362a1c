#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "homeology/complex.hpp"
#include "homeology/matrix.hpp"

namespace hml {

/// Oriented cells with a boundary and a containment relation: a simplicial complex
/// or a block complex, whichever feeds the double complex.
struct CellComplex {
    std::vector<int> dims;                 // -1 only for the empty cell
    std::vector<SparseVec> boundary;       // d(cell) over cell indices
    std::vector<std::vector<int>> below;   // cells contained in each cell, itself included
    bool reduced = false;                  // whether the empty cell takes part in N
    std::vector<std::string> names;

    int size() const { return static_cast<int>(dims.size()); }
};

/// Cells = faces of K indexed by face_id; the empty cell is index 0.
CellComplex simplicial_cells(const SimplicialComplex& k, bool reduced);

struct BasisPair {
    int sigma;
    int tau;
};

/// Free graded module with a filtration degree per basis element and a differential
/// d_n : C_n -> C_{n+step}. Within each degree the basis is sorted by filtration,
/// so filtration pieces F_f are column prefixes.
class FilteredComplex {
public:
    struct Degree {
        std::vector<int> filtration;
        std::vector<int> p;
        std::vector<BasisPair> pairs;
        std::unordered_map<std::uint64_t, int> index;
    };

    int step = 1;               // +1: cohomeology (Δ), -1: homeology (D)
    bool homological = false;   // filtration = -p instead of p
    int min_degree = 0;
    std::vector<Degree> degrees;
    std::vector<IntMatrix> differential;  // indexed like degrees

    int max_degree() const { return min_degree + static_cast<int>(degrees.size()) - 1; }
    bool has_degree(int n) const { return n >= min_degree && n <= max_degree(); }
    int size(int n) const { return has_degree(n) ? static_cast<int>(deg(n).filtration.size()) : 0; }
    const Degree& deg(int n) const { return degrees[static_cast<std::size_t>(n - min_degree)]; }
    /// d_n, or a correctly shaped zero matrix outside the stored range.
    IntMatrix d(int n) const;
    /// Basis index of σ⊗τ in degree n, or -1.
    int index_of(int n, int sigma, int tau) const;
    /// Number of basis elements with filtration <= f in degree n.
    int count_upto(int n, int f) const;
    int min_filtration() const;
    int max_filtration() const;

    static std::uint64_t key(int sigma, int tau) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(sigma)) << 32) | static_cast<std::uint32_t>(tau);
    }
};

/// N^{*,*} with Δ(σ⊗τ) = dσ⊗τ + (-1)^{|σ|} σ⊗δτ and filtration by p.
FilteredComplex build_N(const SimplicialComplex& k, bool reduced);
FilteredComplex build_N_cells(const CellComplex& cells);
/// N_{*,*} with D = Δ^T and the opposite filtration.
FilteredComplex build_N_dual(const SimplicialComplex& k, bool reduced);
FilteredComplex dual(const FilteredComplex& f);

}  // namespace hml
