#pragma once

#include <map>
#include <string>
#include <vector>

#include "homeology/abelian_group.hpp"
#include "homeology/coefficients.hpp"
#include "homeology/complex.hpp"
#include "homeology/filtered.hpp"
#include "homeology/spectral.hpp"

namespace hml {

/// Vertex map sending faces of the source to faces of the target.
struct SimplicialMap {
    SimplicialComplex source;
    SimplicialComplex target;
    std::vector<int> vertex_map;  // source ord -> target ord

    /// Throws Error(InvalidInput) if the map is partial, names unknown vertices, or is not simplicial.
    static SimplicialMap from_labels(const SimplicialComplex& source, const SimplicialComplex& target,
                                     const std::map<std::string, std::string>& vertex_map);
    static SimplicialMap identity(const SimplicialComplex& k);
    /// Inclusion of a subcomplex by label.
    static SimplicialMap inclusion(const SimplicialComplex& sub, const SimplicialComplex& k);

    /// Image as an ordered sequence (not sorted).
    std::vector<int> image(const Simplex& s) const;
};

/// f∘g: apply g first.
SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g);

bool is_non_degenerate(const SimplicialMap& f);

/// Chain map per total degree, indexed by n - min_degree, in the bases of the given complexes.
using ChainMap = std::vector<IntMatrix>;

/// f^* : N^{*,*}(L) -> N^{*,*}(K). Bases are those of build_N / build_N_dual.
ChainMap pullback_on_N(const SimplicialMap& f, bool reduced);
/// f_* : N_{*,*}(K) -> N_{*,*}(L).
ChainMap pushforward_on_N(const SimplicialMap& f, bool reduced);

/// Homomorphisms between page cells, on the stored generators.
struct InducedMap {
    int page = 2;
    std::map<Bidegree, DenseMatrix> cells;         // (target generators) x (source generators)
    std::map<Bidegree, Presentation> source, target;
};

/// Map on page r induced by a chain map from the complex of `from` to the complex of `to`.
InducedMap induced_on_page(const SpectralSequence& from, const SpectralSequence& to, const ChainMap& map, int r);

/// ℋ^{p,q}(L) -> ℋ^{p,q}(K).
InducedMap induced_on_cohomeology(const SimplicialMap& f, const Coefficients& coeffs = {}, bool reduced = false);
/// ℋ_{p,q}(K) -> ℋ_{p,q}(L).
InducedMap induced_on_homeology(const SimplicialMap& f, const Coefficients& coeffs = {}, bool reduced = false);

/// outer∘inner per cell.
InducedMap compose(const InducedMap& outer, const InducedMap& inner);
/// Same homomorphism on every cell (coordinates compared modulo target orders).
bool maps_equal(const InducedMap& a, const InducedMap& b, const Coefficients& coeffs = {});
bool is_identity(const InducedMap& a, const Coefficients& coeffs = {});
bool is_isomorphism_at(const InducedMap& a, int p, int q, const Coefficients& coeffs = {});

}  // namespace hml
