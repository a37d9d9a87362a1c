#pragma once

#include <cstddef>
#include <vector>

#include "homeology/complex.hpp"

namespace hml {

/// Same-dimension simplices of L are chained through shared codimension-one faces of L.
/// Vertices count as adjacent when they span an edge of L.
bool is_completely_connected(const SimplicialComplex& l);

/// L ⊆ K is completely connected and no strictly larger subcomplex of K containing it is.
bool is_maximal_completely_connected(const SimplicialComplex& l, const SimplicialComplex& k);

/// Maximal completely connected subcomplexes of K, each checked against the definition.
/// Throws Error(Budget) when K has more than face_budget nonempty faces.
std::vector<SimplicialComplex> completely_connected_components(const SimplicialComplex& k,
                                                               std::size_t face_budget = 64);

/// Number of n-dimensional components: classes of n-simplices under sharing an (n-1)-face
/// (an edge when n = 0) whose members are all facets of K.
long count_top_components(const SimplicialComplex& k, int n);

}  // namespace hml
