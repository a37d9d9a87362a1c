#include <gtest/gtest.h>

#include "homeology/abelian_group.hpp"
#include "homeology/coefficients.hpp"
#include "homeology/error.hpp"
#include "homeology/random.hpp"
#include "oracles.hpp"

using namespace hml;

namespace {

IntMatrix dense(const DenseMatrix& rows) { return IntMatrix::from_dense(rows); }

}  // namespace

TEST(AbelianGroup, CanonicalForm) {
    const auto g = AbelianGroup::from_orders({Integer(0), Integer(2), Integer(1), Integer(3), Integer(4)});
    EXPECT_EQ(g.rank, 1);
    EXPECT_EQ(g.torsion, (std::vector<Integer>{Integer(2), Integer(12)}));
    EXPECT_EQ(g.to_string(), "Z + Z/2 + Z/12");
    EXPECT_EQ(AbelianGroup().to_string(), "0");
    EXPECT_EQ(AbelianGroup(3).to_string(), "Z^3");
    EXPECT_EQ(AbelianGroup::from_orders({Integer(1), Integer(1)}), AbelianGroup());
}

TEST(AbelianGroup, SumAndTensor) {
    const AbelianGroup z2 = AbelianGroup::from_orders({Integer(2)});
    const AbelianGroup z3 = AbelianGroup::from_orders({Integer(3)});
    EXPECT_EQ(direct_sum(z2, z3), AbelianGroup::from_orders({Integer(6)}));
    EXPECT_EQ(group_tensor(AbelianGroup(2), z3), AbelianGroup(0, {Integer(3), Integer(3)}));
    EXPECT_EQ(group_tensor(z2, z3), AbelianGroup());
    EXPECT_EQ(group_tensor(AbelianGroup::from_orders({Integer(4)}), AbelianGroup::from_orders({Integer(6)})), z2);
    EXPECT_EQ(group_tensor(AbelianGroup(2), AbelianGroup(3)), AbelianGroup(6));
}

TEST(Subquotient, SimpleQuotients) {
    // Z^2 / <(2,0),(0,3)> = Z/6.
    const Subquotient a(IntMatrix::identity(2), dense({{2, 0}, {0, 3}}));
    EXPECT_EQ(a.group(), AbelianGroup::from_orders({Integer(6)}));
    // 2Z / 6Z = Z/3 inside Z.
    const Subquotient b(dense({{2}}), dense({{6}}));
    EXPECT_EQ(b.group(), AbelianGroup::from_orders({Integer(3)}));
    EXPECT_THROW(Subquotient(dense({{2}}), dense({{3}})), Error);
    EXPECT_THROW(b.project({{0, Integer(1)}}), Error);
    const auto coords = b.project({{0, Integer(8)}});
    ASSERT_EQ(coords.size(), 1u);
    EXPECT_FALSE(floor_mod(coords[0], Integer(3)).is_zero());
    EXPECT_TRUE(floor_mod(b.project({{0, Integer(6)}})[0], Integer(3)).is_zero());
}

TEST(Subquotient, OverPrimeField) {
    const Domain z2{Integer(2)};
    const Subquotient a(IntMatrix::identity(3), dense({{1, 1}, {1, 1}, {0, 0}}), z2);
    EXPECT_EQ(a.group(), AbelianGroup(2));
    const Subquotient b(IntMatrix::identity(1), dense({{2}}), z2);
    EXPECT_EQ(b.group(), AbelianGroup(1));
}

TEST(Subquotient, MatchesCosetEnumeration) {
    Rng rng(17);
    int tested = 0;
    for (int t = 0; t < 300; ++t) {
        const int k = 1 + static_cast<int>(rng.below(3));
        const int cols = static_cast<int>(rng.below(4));
        std::vector<std::vector<long long>> m(static_cast<std::size_t>(k), std::vector<long long>(static_cast<std::size_t>(cols)));
        DenseMatrix md(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < cols; ++j) {
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<long long>(rng.below(9)) - 4;
                md[static_cast<std::size_t>(i)].push_back(Integer(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
            }
        }
        const auto counts = oracle::coset_enumeration(m, k, cols);
        if (!counts) continue;
        ++tested;
        const Subquotient sq(IntMatrix::identity(k), IntMatrix::from_dense(k, cols, md));
        ASSERT_EQ(oracle::predicted_counts(sq.group(), counts->e), counts->counts) << sq.group().to_string();
    }
    EXPECT_GT(tested, 100);
}

TEST(Presented, HomologyAndIsomorphism) {
    // Z --2--> Z --> 0
    const Presentation z{{Integer(0)}};
    const Presentation zero{};
    EXPECT_EQ(presented_homology(z, {{Integer(2)}}, z, {}, zero), AbelianGroup::from_orders({Integer(2)}));
    // Z/4 --2--> Z/4 --2--> Z/4: kernel {0,2}, image {0,2}.
    const Presentation z4{{Integer(4)}};
    EXPECT_EQ(presented_homology(z4, {{Integer(2)}}, z4, {{Integer(2)}}, z4), AbelianGroup());
    EXPECT_TRUE(is_isomorphism({{Integer(3)}}, z4, z4));
    EXPECT_FALSE(is_isomorphism({{Integer(2)}}, z4, z4));
    EXPECT_TRUE(is_isomorphism({{Integer(-1)}}, z, z));
    EXPECT_FALSE(is_isomorphism({{Integer(2)}}, z, z));
    EXPECT_TRUE(homs_equal({{Integer(1)}}, {{Integer(5)}}, z4));
    EXPECT_FALSE(homs_equal({{Integer(1)}}, {{Integer(5)}}, z));
}

TEST(Coefficients, ParseAndPrimes) {
    EXPECT_EQ(Coefficients::parse("z"), Coefficients::integers());
    EXPECT_EQ(Coefficients::parse("q"), Coefficients::rationals());
    EXPECT_EQ(Coefficients::parse("zp:5"), Coefficients::mod(5));
    EXPECT_THROW(Coefficients::parse("zp:6"), Error);
    EXPECT_THROW(Coefficients::parse("r"), Error);
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(97));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(91));
    EXPECT_EQ(Coefficients::rationals().finalize(AbelianGroup(1, {Integer(2)})), AbelianGroup(1));
}
