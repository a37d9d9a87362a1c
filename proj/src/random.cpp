#include "homeology/random.hpp"

#include <string>
#include <vector>

#include "homeology/error.hpp"

namespace hml {

std::uint64_t Rng::below(std::uint64_t n) {
    ensure(n > 0, "empty sampling range");
    // Rejection keeps every residue equally likely.
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % n;
}

SimplicialComplex random_complex(const RandomComplexParams& params, Rng& rng) {
    if (params.vertices < 1 || params.dim < 0 || params.dim >= params.vertices || params.dim > 8) {
        throw Error(ErrorKind::InvalidInput, "random complex needs 0 <= dim < vertices");
    }
    const std::uint64_t scale = 1u << 20;
    const auto threshold = static_cast<std::uint64_t>(params.density * static_cast<double>(scale));
    std::vector<std::string> labels;
    for (int v = 0; v < params.vertices; ++v) labels.push_back(std::to_string(v));

    std::vector<Simplex> facets;
    std::vector<Simplex> all;
    Simplex s;
    // Enumerate (dim+1)-subsets in lexicographic order.
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(s.size()) == params.dim + 1) {
            all.push_back(s);
            if (rng.below(scale) < threshold) facets.push_back(s);
            return;
        }
        for (int v = start; v < params.vertices; ++v) {
            s.push_back(v);
            self(self, v + 1);
            s.pop_back();
        }
    };
    rec(rec, 0);
    if (facets.empty()) facets.push_back(all[rng.below(all.size())]);
    return SimplicialComplex::from_simplices(labels, facets);
}

Simplex random_positive_face(const SimplicialComplex& k, Rng& rng) {
    if (k.dim() < 1) return {};
    const int first = k.id_offset(1);
    const int count = k.total_ids() - first;
    return k.face_by_id(first + static_cast<int>(rng.below(static_cast<std::uint64_t>(count))));
}

}  // namespace hml
