#include <gtest/gtest.h>

#include "homeology/checks.hpp"
#include "homeology/corpus.hpp"
#include "homeology/error.hpp"
#include "homeology/io.hpp"

using namespace hml;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

// Reports one extra Z at (0,0) once the complex has more than `threshold` vertices.
TableEngine corrupted_engine(int threshold) {
    return [threshold](const SimplicialComplex& k, const Coefficients& c, bool reduced, bool homological) {
        BigradedTable t = default_table_engine(k, c, reduced, homological);
        if (!homological && !reduced && k.num_vertices() > threshold) {
            AbelianGroup g = t.at(0, 0);
            g.rank += 1;
            t.set(0, 0, g);
        }
        return t;
    };
}

}  // namespace

TEST(Checks, TableArithmetic) {
    BigradedTable a, b;
    a.set(0, 1, AbelianGroup(1));
    a.set(1, 1, AbelianGroup(1));
    b.set(0, 1, AbelianGroup(1));
    EXPECT_EQ(table_sum(a, b).at(0, 1), AbelianGroup(2));
    const auto t = table_tensor(a, b, 1);
    EXPECT_EQ(t.at(1, 3), AbelianGroup(1));
    EXPECT_EQ(t.at(2, 3), AbelianGroup(1));
    EXPECT_EQ(t.cells.size(), 2u);
    EXPECT_TRUE(table_is_free(a));
    BigradedTable tors;
    tors.set(1, 2, AbelianGroup::from_orders({Integer(2)}));
    EXPECT_FALSE(table_is_free(tors));
}

TEST(Checks, EulerAndComponents) {
    for (const auto& c : named_corpus()) {
        EXPECT_TRUE(check_euler(c.complex).pass) << c.name;
        EXPECT_TRUE(check_components(c.complex, 64).pass) << c.name;
    }
    const auto big = check_components(shapes::simplex(5), 16);
    EXPECT_TRUE(big.pass);
}

TEST(Checks, KunnethJoin) {
    const auto r = check_kunneth_join(shapes::sphere0(), shapes::sphere0());
    EXPECT_TRUE(r.pass) << r.lhs << " vs " << r.rhs;
    EXPECT_TRUE(check_kunneth_join(shapes::simplex_boundary(2), shapes::sphere0()).pass);
    EXPECT_TRUE(check_kunneth_join(shapes::path(2), shapes::point()).pass);
    // The reduced table of RP2 is torsion-free, so the join form applies.
    EXPECT_TRUE(check_kunneth_join(shapes::projective_plane(), shapes::sphere0()).pass);
    EXPECT_EQ(kind_of([] { check_kunneth_product(shapes::projective_plane(), shapes::sphere0()); }), ErrorKind::Hypothesis);
}

TEST(Checks, KunnethProduct) {
    const auto r = check_kunneth_product(shapes::simplex_boundary(2), shapes::simplex_boundary(2));
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.lhs, "(0,2)=Z (1,2)=Z^2 (2,2)=Z");
    EXPECT_TRUE(check_kunneth_product(shapes::simplex(1), shapes::path(2)).pass);
    EXPECT_TRUE(check_kunneth_product(shapes::sphere0(), shapes::simplex_boundary(2)).pass);
}

TEST(Checks, GlueCases) {
    const auto d2 = shapes::simplex(2);
    const auto wedge = check_glue(d2, d2, {{"0", "0"}});
    EXPECT_TRUE(wedge.pass) << wedge.lhs << " vs " << wedge.rhs;
    ASSERT_FALSE(wedge.notes.empty());
    EXPECT_NE(wedge.notes.front().find("case c(ii)"), std::string::npos);
    const auto edge = check_glue(d2, d2, {{"0", "0"}, {"1", "1"}});
    EXPECT_TRUE(edge.pass) << edge.lhs << " vs " << edge.rhs;
    const auto facet = check_glue(d2, d2, {{"0", "0"}, {"1", "1"}, {"2", "2"}});
    EXPECT_TRUE(facet.pass) << facet.lhs << " vs " << facet.rhs;
    const auto path = check_glue(shapes::path(2), shapes::path(2), {{"0", "2"}});
    EXPECT_TRUE(path.pass) << path.lhs << " vs " << path.rhs;
    // Two separate vertices do not form one closed simplex.
    EXPECT_EQ(kind_of([] { check_glue(shapes::path(2), shapes::path(2), {{"0", "0"}, {"2", "2"}}); }), ErrorKind::Hypothesis);
    EXPECT_EQ(kind_of([] { check_glue(shapes::point(), shapes::point(), {}); }), ErrorKind::Hypothesis);
}

TEST(Checks, InvariancePasses) {
    const auto r = verify_invariance(shapes::torus(), 3, 11);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.steps, 3);
    EXPECT_EQ(r.log.size(), 3u);
    const auto zero = verify_invariance(shapes::torus(), 0, 11);
    EXPECT_TRUE(zero.pass);
    EXPECT_EQ(zero.steps, 0);
    EXPECT_TRUE(zero.log.empty());
    // Nothing to subdivide on a point.
    const auto pt = verify_invariance(shapes::point(), 2, 1);
    EXPECT_TRUE(pt.pass);
    EXPECT_EQ(pt.steps, 2);
}

TEST(Checks, InvarianceIsDeterministic) {
    const auto a = verify_invariance(shapes::simplex_boundary(3), 4, 99);
    const auto b = verify_invariance(shapes::simplex_boundary(3), 4, 99);
    EXPECT_EQ(a.log, b.log);
    const auto c = verify_invariance(shapes::simplex_boundary(3), 4, 100);
    EXPECT_NE(a.log, c.log);
}

TEST(Checks, CorruptedEngineIsCaught) {
    const auto k = shapes::simplex(2);
    const auto r = verify_invariance(k, 3, 5, {}, 4000, corrupted_engine(k.num_vertices()));
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.steps, 1);
    EXPECT_NE(r.failure.find("step 1: cohomeology (0,0): 0 became Z"), std::string::npos) << r.failure;
    EXPECT_NE(invariance_to_json(r).dump().find("(0,0)"), std::string::npos);
}

TEST(Checks, InvarianceBudget) {
    EXPECT_EQ(kind_of([] { verify_invariance(shapes::torus(), 5, 1, {}, 60); }), ErrorKind::Budget);
    EXPECT_NO_THROW(verify_invariance(shapes::simplex(1), 1, 1, {}, 5));
}
