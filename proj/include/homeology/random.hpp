#pragma once

#include <cstdint>
#include <random>

#include "homeology/complex.hpp"

namespace hml {

/// Seeded generator with platform-independent bounded sampling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n);
    /// True with probability num / den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

struct RandomComplexParams {
    int vertices = 6;
    int dim = 2;
    double density = 0.3;  // probability of each (dim+1)-subset becoming a facet
};

/// Facets sampled independently at a fixed dimension, then closed downward. At least one
/// facet is kept; vertices outside every facet stay as isolated points.
SimplicialComplex random_complex(const RandomComplexParams& params, Rng& rng);

/// A face of dimension >= 1 chosen uniformly; K itself has none when dim K < 1.
Simplex random_positive_face(const SimplicialComplex& k, Rng& rng);

}  // namespace hml
