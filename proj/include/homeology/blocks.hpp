#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homeology/complex.hpp"
#include "homeology/filtered.hpp"
#include "homeology/matrix.hpp"

namespace hml {

/// Unvalidated block: simplices of the ambient complex (closed downward on validation)
/// and an optional positive chain simplex given as an ordered vertex sequence.
struct BlockSpec {
    std::vector<Simplex> faces;
    std::optional<std::vector<int>> positive;
};

struct Block {
    int dim = 0;
    std::vector<Simplex> simplices;   // every nonempty face, sorted by (dim, lex)
    Simplex positive;                 // sorted top simplex marked positive
    int positive_sign = 1;            // orientation of `positive` relative to its sorted order
    std::map<Simplex, int> orientation;  // coherent sign of each top simplex
};

class BlockComplex {
public:
    const SimplicialComplex& ambient() const { return ambient_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    int size() const { return static_cast<int>(blocks_.size()); }
    /// Blocks contained in block i, i included.
    const std::vector<int>& below(int i) const { return below_[static_cast<std::size_t>(i)]; }
    /// Block owning each ambient face id (the empty face maps to -1).
    int owner(int face_id) const { return owner_[static_cast<std::size_t>(face_id)]; }
    /// d(b_i) = Σ [b_i : b_j] b_j.
    const SparseVec& boundary(int i) const { return boundary_[static_cast<std::size_t>(i)]; }

private:
    friend BlockComplex validate_block_complex(const SimplicialComplex&, const std::vector<BlockSpec>&);
    SimplicialComplex ambient_;
    std::vector<Block> blocks_;
    std::vector<std::vector<int>> below_;
    std::vector<int> owner_;
    std::vector<SparseVec> boundary_;
};

/// Checks, in order: subcomplex, purity, acyclicity, orientability, spherical boundary,
/// interior partition, connecting coefficients. Each failure raises its own ErrorKind.
/// Blocks are reordered by dimension (stable).
BlockComplex validate_block_complex(const SimplicialComplex& k, const std::vector<BlockSpec>& blocks);

/// [b_i : b_j] from each admissible chain simplex; all choices must agree.
int connecting_coefficient(const BlockComplex& b, int i, int j);

/// Blocks as cells: index 0 is the empty cell, block i is cell i + 1.
CellComplex block_cells(const BlockComplex& b, bool reduced);
/// d_k on blocks of dimension k (reduced mode adds the empty block in degree -1).
IntMatrix block_boundary_matrix(const BlockComplex& b, int degree, bool reduced);
FilteredComplex block_N(const BlockComplex& b, bool reduced);
FilteredComplex block_N_dual(const BlockComplex& b, bool reduced);

/// {2^σ : σ ∈ K}.
BlockComplex trivial_block_complex(const SimplicialComplex& k);

struct BlockedComplex {
    SimplicialComplex complex;
    BlockComplex blocks;
};
/// S_σK with one block per face of K.
BlockedComplex subdivision_block_complex(const SimplicialComplex& k, const Simplex& sigma, const std::string& new_label);
/// K1 x K2 with one staircase block per pair of faces.
BlockedComplex product_block_complex(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// Blocks listed by dimension with their facets, for serialization.
std::vector<BlockSpec> block_specs(const BlockComplex& b);

}  // namespace hml
