#pragma once

#include <optional>
#include <vector>

#include "homeology/matrix.hpp"

namespace hml {

/// Low-pivot column reduction R = M·V with V unimodular (Z) or invertible (Z/p).
/// Nonzero columns of R have pairwise distinct lowest rows.
struct ColumnReduction {
    std::vector<SparseVec> reduced;
    std::vector<SparseVec> transform;  // columns of V; empty unless tracked
};

ColumnReduction column_reduce(const IntMatrix& m, const Domain& dom = {}, bool track_transform = false);

/// Lattice basis of {x : Mx = 0}.
IntMatrix kernel_basis(const IntMatrix& m, const Domain& dom = {});
/// Lattice basis of the column span, in echelon form sorted by lowest row.
IntMatrix image_basis(const IntMatrix& m, const Domain& dom = {});

/// Column Hermite form: H = M·U, U unimodular. Nonzero columns of H come first,
/// sorted by lowest row, with positive pivots; entries to the left of a pivot row
/// in later columns lie in [0, pivot). Unique for a given column lattice.
struct HermiteResult {
    IntMatrix h;
    IntMatrix u;
    int rank = 0;
};
HermiteResult hermite_normal_form(const IntMatrix& m);

/// Echelon basis of a lattice (or subspace over Z/p) supporting repeated solves.
class EchelonLattice {
public:
    EchelonLattice() = default;
    EchelonLattice(const IntMatrix& generators, const Domain& dom = {});

    int ambient() const { return basis_.rows(); }
    int rank() const { return basis_.cols(); }
    const IntMatrix& basis() const { return basis_; }
    const Domain& domain() const { return dom_; }

    /// Coordinates c with basis·c = v, indexed by basis column; nullopt if v is not in the lattice.
    std::optional<SparseVec> solve(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return solve(v).has_value(); }

private:
    IntMatrix basis_;
    Domain dom_;
    std::vector<int> pivot_;  // row -> basis column with that lowest row, or -1
};

/// Coefficients expressing v in the columns of L (columns may be dependent), or nullopt.
std::optional<std::vector<Integer>> lattice_member(const IntMatrix& l, const std::vector<Integer>& v);

}  // namespace hml
