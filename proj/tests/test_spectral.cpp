#include <gtest/gtest.h>

#include "homeology/chain.hpp"
#include "homeology/corpus.hpp"
#include "homeology/spectral.hpp"

using namespace hml;

namespace {

BigradedTable table_of(std::initializer_list<std::pair<Bidegree, AbelianGroup>> cells) {
    BigradedTable t;
    for (const auto& [pq, g] : cells) t.set(pq.first, pq.second, g);
    return t;
}

BigradedTable free_part(const BigradedTable& t) {
    BigradedTable out;
    for (const auto& [pq, g] : t.cells) out.set(pq.first, pq.second, g.free_part());
    return out;
}

}  // namespace

TEST(Spectral, TableBasics) {
    BigradedTable t;
    t.set(1, 2, AbelianGroup(1));
    t.set(0, 0, AbelianGroup());
    EXPECT_EQ(t.cells.size(), 1u);
    EXPECT_EQ(t.at(1, 2), AbelianGroup(1));
    EXPECT_TRUE(t.at(5, 5).is_zero());
}

TEST(Spectral, DisksAndSpheres) {
    for (int n = 1; n <= 3; ++n) {
        EXPECT_EQ(cohomeology(shapes::simplex(n)), table_of({{{n, n}, AbelianGroup(1)}}));
        EXPECT_EQ(homeology(shapes::simplex_boundary(n + 1)), table_of({{{0, n}, AbelianGroup(1)}, {{n, n}, AbelianGroup(1)}}));
    }
    EXPECT_EQ(cohomeology(shapes::point()), table_of({{{0, 0}, AbelianGroup(1)}}));
    EXPECT_EQ(cohomeology(shapes::sphere0()), table_of({{{0, 0}, AbelianGroup(2)}}));
}

TEST(Spectral, ReducedVariants) {
    EXPECT_EQ(cohomeology(shapes::cone3_triangle(), {}, true).at(2, 2), AbelianGroup(1));
    EXPECT_EQ(cohomeology(shapes::suspension_wedge(), {}, true).at(2, 2), AbelianGroup(2));
    // The reduced total of any nonempty complex is Z.
    for (const auto& c : named_corpus()) {
        AbelianGroup sum;
        for (const auto& [n, g] : SpectralSequence(build_N(c.complex, true)).total()) sum = direct_sum(sum, g);
        EXPECT_EQ(sum, AbelianGroup(1)) << c.name;
    }
}

// E_1 and E_2 assembled from link cohomology against the lattice engine.
TEST(Spectral, LinksAgreeWithEngine) {
    for (const auto& c : full_corpus(31, 8)) {
        if (c.complex.num_faces() > 120) continue;
        for (bool reduced : {false, true}) {
            for (const auto& coeffs : {Coefficients::integers(), Coefficients::mod(2)}) {
                const SpectralSequence ss(build_N(c.complex, reduced), coeffs);
                const LinkPage lp = e1_via_links(c.complex, coeffs, reduced);
                EXPECT_EQ(lp.e1(), ss.table(1)) << c.name << " E1 " << coeffs.name();
                EXPECT_EQ(lp.e2(), ss.table(2)) << c.name << " E2 " << coeffs.name();
            }
        }
    }
}

TEST(Spectral, PagesAreHomologyOfPreviousPage) {
    for (const auto& c : full_corpus(3, 6)) {
        if (c.complex.num_faces() > 100) continue;
        const SpectralSequence ss(build_N(c.complex, false));
        for (int r = 1; r <= ss.width() + 1; ++r) EXPECT_TRUE(ss.check_next_page(r)) << c.name << " r=" << r;
        EXPECT_EQ(ss.table(ss.width() + 1), ss.e_infinity()) << c.name;
        EXPECT_EQ(ss.table(ss.width() + 3), ss.e_infinity()) << c.name;
        const SpectralSequence hs(build_N_dual(c.complex, false));
        for (int r = 1; r <= hs.width() + 1; ++r) EXPECT_TRUE(hs.check_next_page(r)) << c.name << " r=" << r;
    }
}

// d_r moves r columns and raises (cohomeology) or lowers (homeology) total degree by one.
TEST(Spectral, DifferentialTargets) {
    for (const auto& f : {build_N(shapes::simplex(2), false), build_N_dual(shapes::simplex(2), false)}) {
        const SpectralSequence ss(f);
        for (int r = 1; r <= 3; ++r) {
            for (const auto& [p, q] : ss.support()) {
                const auto [tp, tq] = ss.target(r, p, q);
                EXPECT_EQ(std::abs(tp - p), r);
                EXPECT_EQ((tq - tp) - (q - p), f.step);
            }
        }
        EXPECT_FALSE(ss.support().empty());
    }
}

TEST(Spectral, FieldCoefficientsAndDuality) {
    const auto rp2 = shapes::projective_plane();
    const auto z = cohomeology(rp2);
    const auto q = cohomeology(rp2, Coefficients::rationals());
    EXPECT_EQ(q, free_part(z));
    EXPECT_FALSE(z == q);
    // Over a field, homeology and cohomeology are dual and have equal dimensions.
    for (const auto& c : named_corpus()) {
        if (c.complex.num_faces() > 120) continue;
        EXPECT_EQ(homeology(c.complex, Coefficients::rationals()), cohomeology(c.complex, Coefficients::rationals()))
            << c.name;
        EXPECT_EQ(homeology(c.complex, Coefficients::mod(2)), cohomeology(c.complex, Coefficients::mod(2))) << c.name;
    }
    const auto z2 = cohomeology(rp2, Coefficients::mod(2));
    long total_z2 = 0, total_q = 0;
    for (const auto& [pq, g] : z2.cells) total_z2 += g.rank;
    for (const auto& [pq, g] : q.cells) total_q += g.rank;
    EXPECT_GT(total_z2, total_q);
}

TEST(Spectral, TotalMatchesCohomology) {
    for (const auto& c : full_corpus(9, 6)) {
        const SpectralSequence ss(build_N(c.complex, false));
        const auto total = ss.total();
        const auto h = cohomology(c.complex);
        for (const auto& [n, g] : h) EXPECT_EQ(total.count(n) ? total.at(n) : AbelianGroup(), g) << c.name << " " << n;
        // E_∞ along each antidiagonal sums to the ranks of the total.
        const auto einf = ss.e_infinity();
        std::map<int, long> ranks;
        for (const auto& [pq, g] : einf.cells) ranks[pq.second - pq.first] += g.rank;
        for (const auto& [n, g] : total) EXPECT_EQ(ranks[n], g.rank) << c.name << " " << n;
    }
}
