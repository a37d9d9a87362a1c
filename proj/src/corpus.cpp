#include "homeology/corpus.hpp"

#include "homeology/random.hpp"

namespace hml {

namespace shapes {

SimplicialComplex sphere0() { return disjoint_union(point(), point()); }

SimplicialComplex cylinder() { return cartesian_product(path(1), simplex_boundary(2)); }

SimplicialComplex moebius() {
    return SimplicialComplex::from_facets({"0", "1", "2", "3", "4"},
                                          {{"0", "1", "2"}, {"1", "2", "3"}, {"2", "3", "4"}, {"0", "3", "4"}, {"0", "1", "4"}});
}

SimplicialComplex projective_plane() {
    return SimplicialComplex::from_facets({"0", "1", "2", "3", "4", "5"},
                                          {{"0", "1", "2"}, {"0", "2", "3"}, {"0", "3", "4"}, {"0", "4", "5"}, {"0", "1", "5"},
                                           {"1", "2", "4"}, {"2", "3", "5"}, {"1", "3", "4"}, {"2", "4", "5"}, {"1", "3", "5"}});
}

SimplicialComplex edge_wedge() { return glue(simplex(2), simplex(2), {{"0", "0"}, {"1", "1"}}).complex; }

SimplicialComplex cone3_triangle() { return cone_points(simplex_boundary(2), 3); }

SimplicialComplex suspension_wedge() {
    const SimplicialComplex s = cone_points(simplex_boundary(2), 2);
    return wedge(s, s);
}

}  // namespace shapes

std::vector<NamedComplex> named_corpus() {
    std::vector<NamedComplex> out{
        {"point", shapes::point()},
        {"S0", shapes::sphere0()},
        {"I3", shapes::path(3)},
        {"C4", shapes::cycle(4)},
    };
    for (int n = 1; n <= 4; ++n) out.push_back({"D" + std::to_string(n), shapes::simplex(n)});
    for (int n = 1; n <= 4; ++n) out.push_back({"S" + std::to_string(n), shapes::simplex_boundary(n + 1)});
    out.push_back({"torus", shapes::torus()});
    out.push_back({"cylinder", shapes::cylinder()});
    out.push_back({"moebius", shapes::moebius()});
    out.push_back({"RP2", shapes::projective_plane()});
    out.push_back({"wedge_D2_D2", shapes::wedge(shapes::simplex(2), shapes::simplex(2))});
    out.push_back({"edge_wedge", shapes::edge_wedge()});
    out.push_back({"C3_S1", shapes::cone3_triangle()});
    out.push_back({"SS1_v_SS1", shapes::suspension_wedge()});
    out.push_back({"edge_plus_point", disjoint_union(shapes::simplex(1), shapes::point())});
    return out;
}

std::vector<NamedComplex> random_corpus(std::uint64_t seed, int count) {
    Rng rng(seed);
    std::vector<NamedComplex> out;
    for (int i = 0; i < count; ++i) {
        RandomComplexParams params;
        params.dim = 1 + static_cast<int>(rng.below(3));
        params.vertices = params.dim + 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(7 - params.dim)));
        params.density = params.dim == 1 ? 0.4 : params.dim == 2 ? 0.3 : 0.2;
        out.push_back({"random" + std::to_string(i), random_complex(params, rng)});
    }
    return out;
}

std::vector<NamedComplex> full_corpus(std::uint64_t seed, int count) {
    std::vector<NamedComplex> out = named_corpus();
    for (auto& c : random_corpus(seed, count)) out.push_back(std::move(c));
    return out;
}

}  // namespace hml
