#include <gtest/gtest.h>

#include "homeology/chain.hpp"
#include "homeology/corpus.hpp"
#include "homeology/filtered.hpp"
#include "homeology/random.hpp"

using namespace hml;

namespace {

// Pairs σ ⊆ τ with dim τ - dim σ = n: Σ_τ C(|τ|, n).
long expected_pairs(const SimplicialComplex& k, int n, bool reduced) {
    long total = 0;
    for (int d = reduced ? -1 : 0; d <= k.dim(); ++d) {
        const long m = d + 1;
        long c = 1;
        for (long i = 0; i < n; ++i) c = c * (m - i) / (i + 1);
        if (!reduced && n == m) c = 0;  // σ = ∅ only in reduced mode
        total += c * static_cast<long>(k.faces(d).size());
    }
    return total;
}

}  // namespace

TEST(Chain, BoundaryMatricesOfTriangle) {
    const auto k = shapes::simplex(2);
    EXPECT_EQ(boundary_matrix(k, 1, false), IntMatrix::from_dense({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}}));
    EXPECT_EQ(boundary_matrix(k, 2, false), IntMatrix::from_dense({{1}, {-1}, {1}}));
    EXPECT_EQ(boundary_matrix(k, 0, true), IntMatrix::from_dense({{1, 1, 1}}));
    EXPECT_EQ(boundary_matrix(k, 0, false).rows(), 0);
    EXPECT_EQ(coboundary_matrix(k, 1, false), boundary_matrix(k, 2, false).transpose());
}

TEST(Chain, BoundarySquaresToZeroOnCorpus) {
    for (const auto& c : full_corpus(5, 10)) {
        for (bool reduced : {false, true}) {
            for (int d = reduced ? 0 : 1; d <= c.complex.dim(); ++d) {
                EXPECT_TRUE((boundary_matrix(c.complex, d - 1, reduced) * boundary_matrix(c.complex, d, reduced)).is_zero())
                    << c.name << " " << d;
            }
        }
    }
}

TEST(Filtered, BasisShapeAndOrder) {
    for (const auto& k : {shapes::simplex(3), shapes::torus(), shapes::sphere0()}) {
        for (bool reduced : {false, true}) {
            const auto f = build_N(k, reduced);
            EXPECT_EQ(f.step, 1);
            for (int n = f.min_degree; n <= f.max_degree(); ++n) {
                EXPECT_EQ(f.size(n), expected_pairs(k, n, reduced)) << n;
                const auto& filt = f.deg(n).filtration;
                EXPECT_TRUE(std::is_sorted(filt.begin(), filt.end()));
                EXPECT_EQ(f.count_upto(n, k.dim()), f.size(n));
            }
            EXPECT_EQ(f.min_filtration(), reduced ? -1 : 0);
        }
    }
}

// Δ(σ⊗τ) = dσ⊗τ + (-1)^{|σ|} σ⊗δτ with |σ| the vertex count.
TEST(Filtered, SignConvention) {
    const auto k = shapes::simplex(1);
    const auto f = build_N(k, false);
    const int v0 = k.face_id({0});
    const int v1 = k.face_id({1});
    const int e = k.face_id({0, 1});
    const IntMatrix d0 = f.d(0);
    // δ(0) = -[01], δ(1) = [01].
    EXPECT_EQ(d0.at(f.index_of(1, v0, e), f.index_of(0, v0, v0)), Integer(1));
    EXPECT_EQ(d0.at(f.index_of(1, v1, e), f.index_of(0, v1, v1)), Integer(-1));
    // Δ(01⊗01) = d(01)⊗01 = 1⊗01 - 0⊗01.
    EXPECT_EQ(d0.at(f.index_of(1, v1, e), f.index_of(0, e, e)), Integer(1));
    EXPECT_EQ(d0.at(f.index_of(1, v0, e), f.index_of(0, e, e)), Integer(-1));
    // Reduced: d(v) = ∅, and ∅⊗v picks up δv with sign +1.
    const auto r = build_N(k, true);
    EXPECT_EQ(r.d(1).at(r.index_of(2, 0, e), r.index_of(1, v0, e)), Integer(1));
    EXPECT_EQ(r.d(1).at(r.index_of(2, 0, e), r.index_of(1, 0, v1)), Integer(1));
}

TEST(Filtered, DualIsTranspose) {
    Rng rng(12);
    for (int t = 0; t < 20; ++t) {
        RandomComplexParams p;
        p.vertices = 5;
        p.dim = 1 + static_cast<int>(rng.below(2));
        const auto k = random_complex(p, rng);
        for (bool reduced : {false, true}) {
            const auto n = build_N(k, reduced);
            const auto nd = build_N_dual(k, reduced);
            EXPECT_EQ(nd.step, -1);
            EXPECT_TRUE(nd.homological);
            for (int deg = n.min_degree; deg < n.max_degree(); ++deg) {
                const IntMatrix a = n.d(deg);
                const IntMatrix b = nd.d(deg + 1);
                ASSERT_EQ(b.rows(), a.cols());
                ASSERT_EQ(b.cols(), a.rows());
                for (int i = 0; i < a.rows(); ++i) {
                    const auto& pi = n.deg(deg + 1).pairs[static_cast<std::size_t>(i)];
                    const int bi = nd.index_of(deg + 1, pi.sigma, pi.tau);
                    for (int j = 0; j < a.cols(); ++j) {
                        const auto& pj = n.deg(deg).pairs[static_cast<std::size_t>(j)];
                        const int bj = nd.index_of(deg, pj.sigma, pj.tau);
                        ASSERT_EQ(a.at(i, j), b.at(bj, bi));
                    }
                }
            }
        }
    }
}

TEST(Chain, LinkCohomology) {
    const auto s = shapes::simplex_boundary(3);
    const auto lc = reduced_link_cohomology(s, {0}, 2);
    EXPECT_EQ(lc.degree, 1);
    EXPECT_EQ(lc.group.group(), AbelianGroup(1));
    const auto top = reduced_link_cohomology(s, {0, 1, 2}, 2);
    EXPECT_EQ(top.degree, -1);
    EXPECT_EQ(top.group.group(), AbelianGroup(1));
    EXPECT_EQ(reduced_cohomology_group(shapes::simplex(2), 0, Domain{}).group(), AbelianGroup());
    EXPECT_EQ(reduced_cohomology_group(SimplicialComplex(), -1, Domain{}).group(), AbelianGroup(1));
}
