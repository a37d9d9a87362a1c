#include <gtest/gtest.h>

#include "homeology/chain.hpp"
#include "homeology/complex.hpp"
#include "homeology/corpus.hpp"
#include "homeology/error.hpp"
#include "homeology/random.hpp"

using namespace hml;

namespace {

long reduced_euler(const SimplicialComplex& k) { return euler_characteristic(k) - 1; }

std::size_t count(const SimplicialComplex& k, int d) { return k.faces(d).size(); }

}  // namespace

TEST(Complex, PermutationSign) {
    EXPECT_EQ(permutation_sign({0, 1, 2}), 1);
    EXPECT_EQ(permutation_sign({1, 0, 2}), -1);
    EXPECT_EQ(permutation_sign({2, 0, 1}), 1);
    EXPECT_EQ(permutation_sign({3, 1, 1}), 0);
    EXPECT_EQ(permutation_sign({}), 1);
}

TEST(Complex, ClosureAndIndexing) {
    const auto k = SimplicialComplex::from_facets({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"c", "d"}});
    EXPECT_EQ(k.dim(), 2);
    EXPECT_EQ(count(k, -1), 1u);
    EXPECT_EQ(count(k, 0), 4u);
    EXPECT_EQ(count(k, 1), 4u);
    EXPECT_EQ(count(k, 2), 1u);
    EXPECT_EQ(k.num_faces(), 9u);
    EXPECT_EQ(k.facets().size(), 2u);
    EXPECT_EQ(k.face_id({}), 0);
    for (int id = 0; id < k.total_ids(); ++id) EXPECT_EQ(k.face_id(k.face_by_id(id)), id);
    EXPECT_EQ(k.simplex_of({"c", "a"}), (Simplex{0, 2}));
    EXPECT_THROW(k.simplex_of({"a", "z"}), Error);
    EXPECT_THROW(k.simplex_of({"a", "a"}), Error);
    EXPECT_FALSE(k.contains({0, 3}));
    EXPECT_EQ(k.vertex_index("d"), 3);
    EXPECT_EQ(k.vertex_index("e"), -1);
}

TEST(Complex, EmptyComplexAndIsolatedVertices) {
    const SimplicialComplex empty;
    EXPECT_EQ(empty.dim(), -1);
    EXPECT_EQ(empty.num_faces(), 0u);
    EXPECT_EQ(euler_characteristic(empty), 0);
    const auto k = SimplicialComplex::from_simplices({"x", "y", "z"}, {{0, 1}});
    EXPECT_EQ(count(k, 0), 3u);
    EXPECT_EQ(euler_characteristic(k), 2);
}

TEST(Complex, StandardShapes) {
    EXPECT_EQ(euler_characteristic(shapes::torus()), 0);
    EXPECT_EQ(count(shapes::torus(), 0), 9u);
    EXPECT_EQ(count(shapes::torus(), 1), 27u);
    EXPECT_EQ(count(shapes::torus(), 2), 18u);
    EXPECT_EQ(euler_characteristic(shapes::projective_plane()), 1);
    EXPECT_EQ(euler_characteristic(shapes::moebius()), 0);
    EXPECT_EQ(euler_characteristic(shapes::cylinder()), 0);
    EXPECT_EQ(euler_characteristic(shapes::sphere0()), 2);
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(euler_characteristic(shapes::simplex(n)), 1);
        EXPECT_EQ(euler_characteristic(shapes::simplex_boundary(n + 1)), n % 2 == 0 ? 2 : 0);
    }
    EXPECT_EQ(count(shapes::path(4), 1), 4u);
    EXPECT_EQ(count(shapes::cycle(5), 0), 5u);
    EXPECT_EQ(shapes::edge_wedge().num_faces(), 11u);
    EXPECT_EQ(count(shapes::wedge(shapes::simplex(2), shapes::simplex(2)), 0), 5u);
}

TEST(Complex, LinkStarSkeleton) {
    const auto s = shapes::simplex_boundary(3);
    const auto l = link(s, {0});
    EXPECT_EQ(l.num_vertices(), 3);
    EXPECT_EQ(euler_characteristic(l), 0);
    EXPECT_EQ(link(s, {0, 1}).num_faces(), 2u);
    EXPECT_TRUE(is_subcomplex_of(star(s, {0}), s));
    EXPECT_EQ(count(star(s, {0}), 2), 3u);
    EXPECT_EQ(skeleton(s, 1).dim(), 1);
    EXPECT_EQ(count(skeleton(s, 1), 1), 6u);
    // The link of the empty simplex is K.
    EXPECT_EQ(link(s, {}).num_faces(), s.num_faces());
}

TEST(Complex, StellarSubdivision) {
    const auto d2 = shapes::simplex(2);
    const auto s = stellar_subdivide(d2, {0, 1, 2}, fresh_label(d2));
    EXPECT_EQ(count(s, 2), 3u);
    EXPECT_EQ(count(s, 0), 4u);
    EXPECT_EQ(euler_characteristic(s), 1);
    const auto e = stellar_subdivide(d2, {0, 1}, "m");
    EXPECT_EQ(count(e, 2), 2u);
    EXPECT_EQ(e.vertex_index("m"), 3);
    EXPECT_THROW(stellar_subdivide(d2, {0, 1}, "0"), Error);
    EXPECT_EQ(fresh_label(e), "w0");
    Rng rng(4);
    auto k = shapes::torus();
    for (int i = 0; i < 10; ++i) {
        k = stellar_subdivide(k, random_positive_face(k, rng), fresh_label(k));
        ASSERT_EQ(euler_characteristic(k), 0);
    }
}

TEST(Complex, JoinAndProductEuler) {
    Rng rng(8);
    for (int t = 0; t < 20; ++t) {
        RandomComplexParams p;
        p.vertices = 4;
        p.dim = 1 + static_cast<int>(rng.below(2));
        const auto a = random_complex(p, rng);
        p.dim = 1;
        const auto b = random_complex(p, rng);
        EXPECT_EQ(reduced_euler(join(a, b)), -reduced_euler(a) * reduced_euler(b));
        EXPECT_EQ(euler_characteristic(cartesian_product(a, b)), euler_characteristic(a) * euler_characteristic(b));
        EXPECT_EQ(euler_characteristic(disjoint_union(a, b)), euler_characteristic(a) + euler_characteristic(b));
    }
    const auto sq = cartesian_product(shapes::simplex(1), shapes::simplex(1));
    EXPECT_EQ(count(sq, 2), 2u);
    EXPECT_EQ(sq.vertex_index(product_label("0", "1")), 1);
    EXPECT_EQ(count(cartesian_product(shapes::simplex(2), shapes::simplex(1)), 3), 3u);
    EXPECT_EQ(join(shapes::sphere0(), shapes::sphere0()).num_faces(), 8u);
}

TEST(Complex, GlueAndCones) {
    const auto r = glue(shapes::simplex(2), shapes::simplex(2), {{"0", "0"}});
    EXPECT_EQ(count(r.complex, 0), 5u);
    EXPECT_EQ(r.intersection.num_faces(), 1u);
    const auto e = glue(shapes::simplex(2), shapes::simplex(2), {{"0", "0"}, {"1", "1"}});
    EXPECT_EQ(e.intersection.num_faces(), 3u);
    const auto c = cone_points(shapes::simplex_boundary(2), 3);
    EXPECT_EQ(count(c, 2), 9u);
    EXPECT_EQ(euler_characteristic(cone_points(shapes::simplex_boundary(2), 2)), 2);
    EXPECT_EQ(shapes::cone3_triangle().num_faces(), c.num_faces());
}

TEST(Complex, SimplicialHomology) {
    const auto h = homology(shapes::projective_plane());
    EXPECT_EQ(h.at(0), AbelianGroup(1));
    EXPECT_EQ(h.at(1), AbelianGroup::from_orders({Integer(2)}));
    EXPECT_EQ(h.at(2), AbelianGroup());
    const auto c = cohomology(shapes::projective_plane());
    EXPECT_EQ(c.at(1), AbelianGroup());
    EXPECT_EQ(c.at(2), AbelianGroup::from_orders({Integer(2)}));
    EXPECT_EQ(cohomology(shapes::projective_plane(), Coefficients::mod(2)).at(1), AbelianGroup(1));
    EXPECT_EQ(homology(shapes::torus()).at(1), AbelianGroup(2));
    const auto red = homology(shapes::simplex(3), {}, true);
    for (const auto& [d, g] : red) EXPECT_TRUE(g.is_zero()) << d;
    EXPECT_EQ(cohomology(shapes::sphere0(), {}, true).at(0), AbelianGroup(1));
    EXPECT_EQ(homology(shapes::moebius()).at(1), AbelianGroup(1));
}
