#pragma once

#include <map>

#include "homeology/abelian_group.hpp"
#include "homeology/coefficients.hpp"
#include "homeology/complex.hpp"
#include "homeology/matrix.hpp"

namespace hml {

using GradedGroup = std::map<int, AbelianGroup>;

/// d_k : C_k -> C_{k-1} in the lexicographic face bases, d = Σ_{i=0..k} (-1)^i ∂_i.
/// Reduced mode adds C_{-1} = Z(∅) with d(v) = ∅. Valid k: [0, dim K] (reduced: [-1, dim K]).
IntMatrix boundary_matrix(const SimplicialComplex& k, int degree, bool reduced);
/// δ^k : C^k -> C^{k+1}, the transpose of d_{k+1}. Valid k as for boundary_matrix.
IntMatrix coboundary_matrix(const SimplicialComplex& k, int degree, bool reduced);

/// Every degree from the lowest chain degree to dim K, zero groups included.
GradedGroup homology(const SimplicialComplex& k, const Coefficients& coeffs = {}, bool reduced = false);
GradedGroup cohomology(const SimplicialComplex& k, const Coefficients& coeffs = {}, bool reduced = false);

/// H̃^{q-|σ|}(link_K σ) with generator lifts as cochains on the link.
struct LinkCohomology {
    SimplicialComplex link;
    int degree = 0;
    Subquotient group;
};
LinkCohomology reduced_link_cohomology(const SimplicialComplex& k, const Simplex& sigma, int q,
                                       const Coefficients& coeffs = {});

/// Reduced cohomology of K in one degree, with lifts; degree may be -1.
Subquotient reduced_cohomology_group(const SimplicialComplex& k, int degree, const Domain& dom);

}  // namespace hml
