#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homeology/complex.hpp"

namespace hml {

struct NamedComplex {
    std::string name;
    SimplicialComplex complex;
};

namespace shapes {
SimplicialComplex sphere0();
SimplicialComplex cylinder();        // I x ∂Δ², staircase triangulation
SimplicialComplex moebius();         // 5 vertices
SimplicialComplex projective_plane();  // 6 vertices
SimplicialComplex edge_wedge();      // two triangles sharing an edge
SimplicialComplex cone3_triangle();  // C_3 ∂Δ²
SimplicialComplex suspension_wedge();  // S∂Δ² ∨ S∂Δ²
}  // namespace shapes

/// Named examples: disks and spheres up to dimension 4, surfaces, wedges, cones.
std::vector<NamedComplex> named_corpus();
/// Seeded random complexes on at most 8 vertices and dimension at most 3.
std::vector<NamedComplex> random_corpus(std::uint64_t seed, int count);
/// named_corpus() followed by random_corpus(seed, count).
std::vector<NamedComplex> full_corpus(std::uint64_t seed = 2024, int count = 20);

}  // namespace hml
