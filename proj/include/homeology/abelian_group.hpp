#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homeology/lattice.hpp"
#include "homeology/matrix.hpp"

namespace hml {

/// Finitely generated abelian group Z^rank ⊕ Z/d1 ⊕ ... ⊕ Z/dk, d1 | d2 | ... , every di >= 2.
/// Over a field the same type holds a vector space: rank = dimension, no torsion.
struct AbelianGroup {
    long rank = 0;
    std::vector<Integer> torsion;

    AbelianGroup() = default;
    explicit AbelianGroup(long free_rank, std::vector<Integer> factors = {});

    /// Canonical group from arbitrary cyclic orders (0 = Z, 1 = trivial).
    static AbelianGroup from_orders(const std::vector<Integer>& orders);

    bool is_zero() const { return rank == 0 && torsion.empty(); }
    bool is_free() const { return torsion.empty(); }
    AbelianGroup free_part() const { return AbelianGroup(rank); }
    std::string to_string() const;

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.rank == b.rank && a.torsion == b.torsion;
    }
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup group_tensor(const AbelianGroup& a, const AbelianGroup& b);
/// Rank of M over Q (p == 0) or over Z/p.
long field_rank(const IntMatrix& m, const Integer& p = 0);

/// Z / B for lattices B ⊆ Z ⊆ ambient (or subspaces over Z/p), with generator lifts
/// and a projection from Z onto generator coordinates.
///
/// Generators are ordered torsion first (orders d1 | d2 | ...), then free (order 0).
class Subquotient {
public:
    Subquotient() = default;
    /// Throws Error(Containment) unless every denominator column lies in the numerator span.
    Subquotient(const IntMatrix& numerator, const IntMatrix& denominator, const Domain& dom = {});

    const AbelianGroup& group() const { return group_; }
    std::size_t num_generators() const { return lifts_.size(); }
    const std::vector<Integer>& orders() const { return orders_; }
    const std::vector<SparseVec>& lifts() const { return lifts_; }
    const Domain& domain() const { return dom_; }
    int ambient() const { return numerator_.ambient(); }

    /// Coordinates of the class of v; throws Error(Containment) if v is outside the numerator.
    std::vector<Integer> project(const SparseVec& v) const;
    bool in_numerator(const SparseVec& v) const { return numerator_.contains(v); }

private:
    struct Pivot {
        int row;
        SparseVec column;  // relation with unit entry at row
    };
    EchelonLattice numerator_;
    Domain dom_;
    std::vector<Pivot> pivots_;
    std::vector<int> residual_rows_;  // numerator coordinates surviving unit elimination
    DenseMatrix u_;                   // SNF row transform on residual rows
    std::vector<std::size_t> kept_;   // indices into the SNF diagonal that survive
    std::vector<Integer> orders_;
    std::vector<SparseVec> lifts_;
    AbelianGroup group_;
};

/// Presented group Z^g / diag(orders), the shape every computed cell takes.
struct Presentation {
    std::vector<Integer> orders;
    std::size_t size() const { return orders.size(); }
    AbelianGroup group() const { return AbelianGroup::from_orders(orders); }
};

/// Homology at the middle of  A --in--> G --out--> H  of presented groups.
/// Matrices are dense with shape (target generators) x (source generators).
AbelianGroup presented_homology(const Presentation& a, const DenseMatrix& in, const Presentation& g,
                                const DenseMatrix& out, const Presentation& h, const Domain& dom = {});
/// True when f : G -> H is well defined and bijective.
bool is_isomorphism(const DenseMatrix& f, const Presentation& g, const Presentation& h, const Domain& dom = {});
/// Equality of two homomorphisms G -> H (coordinates compared modulo H's orders).
bool homs_equal(const DenseMatrix& f, const DenseMatrix& g, const Presentation& h, const Domain& dom = {});

}  // namespace hml
