#include <gtest/gtest.h>

#include <gmpxx.h>

#include <limits>
#include <random>

#include "homeology/integer.hpp"

using hml::Integer;

namespace {

mpz_class mpz(const Integer& v) { return v.to_mpz(); }

Integer random_integer(std::mt19937_64& rng) {
    switch (rng() % 4) {
        case 0: return Integer(static_cast<long long>(rng() % 2001) - 1000);
        case 1: return Integer(static_cast<long long>(rng()));
        case 2: return Integer(std::numeric_limits<long long>::max() - static_cast<long long>(rng() % 3));
        default: {
            mpz_class big(std::to_string(rng()) + std::to_string(rng()) + std::to_string(rng() % 1000));
            if (rng() % 2) big = -big;
            return Integer(big);
        }
    }
}

}  // namespace

TEST(Integer, SmallArithmetic) {
    EXPECT_EQ(Integer(7) + Integer(-3), Integer(4));
    EXPECT_EQ(Integer(7) * Integer(-3), Integer(-21));
    EXPECT_EQ(-Integer(5), Integer(-5));
    EXPECT_TRUE(Integer(0).is_zero());
    EXPECT_TRUE(Integer(-1).is_unit());
    EXPECT_FALSE(Integer(2).is_unit());
    EXPECT_EQ(Integer(-12).sign(), -1);
    EXPECT_LT(Integer(-2), Integer(1));
}

TEST(Integer, OverflowPromotesAndDemotes) {
    const Integer max(std::numeric_limits<long long>::max());
    Integer x = max + Integer(1);
    EXPECT_FALSE(x.is_small());
    EXPECT_EQ(x.to_string(), "9223372036854775808");
    x -= Integer(1);
    EXPECT_TRUE(x.is_small());
    EXPECT_EQ(x, max);
    const Integer min(std::numeric_limits<long long>::min());
    EXPECT_FALSE((-min).is_small());
    EXPECT_EQ((-min).to_string(), "9223372036854775808");
    EXPECT_FALSE((min * Integer(-1)).is_small());
    EXPECT_EQ(hml::abs(min).to_string(), "9223372036854775808");
    EXPECT_THROW((max * max).to_int64(), std::overflow_error);
}

TEST(Integer, StringRoundTrip) {
    const Integer v(std::string_view("-123456789012345678901234567890"));
    EXPECT_EQ(v.to_string(), "-123456789012345678901234567890");
    EXPECT_EQ(Integer(std::string_view("42")), Integer(42));
    EXPECT_THROW(Integer(std::string_view("12x")), std::invalid_argument);
}

TEST(Integer, DivisionRules) {
    EXPECT_EQ(hml::floor_div(Integer(-7), Integer(2)), Integer(-4));
    EXPECT_EQ(hml::floor_mod(Integer(-7), Integer(2)), Integer(1));
    EXPECT_EQ(hml::floor_mod(Integer(7), Integer(-2)), Integer(-1));
    EXPECT_EQ(hml::exact_div(Integer(-21), Integer(7)), Integer(-3));
    EXPECT_THROW(hml::exact_div(Integer(5), Integer(2)), std::domain_error);
    EXPECT_THROW(hml::floor_div(Integer(5), Integer(0)), std::domain_error);
    EXPECT_TRUE(hml::divides(Integer(3), Integer(-12)));
    EXPECT_TRUE(hml::divides(Integer(0), Integer(0)));
    EXPECT_FALSE(hml::divides(Integer(0), Integer(4)));
    EXPECT_EQ(hml::gcd(Integer(-12), Integer(18)), Integer(6));
    EXPECT_EQ(hml::gcd(Integer(0), Integer(-5)), Integer(5));
    EXPECT_EQ(hml::lcm(Integer(4), Integer(6)), Integer(12));
}

TEST(Integer, ExtendedGcd) {
    const auto r = hml::extended_gcd(Integer(240), Integer(46));
    EXPECT_EQ(r.g, Integer(2));
    EXPECT_EQ(r.x * Integer(240) + r.y * Integer(46), r.g);
    const auto z = hml::extended_gcd(Integer(0), Integer(-3));
    EXPECT_EQ(z.g, Integer(3));
    EXPECT_EQ(z.x * Integer(0) + z.y * Integer(-3), z.g);
}

TEST(Integer, RandomOpsMatchGmp) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 3000; ++i) {
        const Integer a = random_integer(rng);
        const Integer b = random_integer(rng);
        ASSERT_EQ(mpz(a + b), mpz(a) + mpz(b));
        ASSERT_EQ(mpz(a - b), mpz(a) - mpz(b));
        ASSERT_EQ(mpz(a * b), mpz(a) * mpz(b));
        Integer c = a;
        Integer::add_mul(c, a, b);
        ASSERT_EQ(mpz(c), mpz(a) + mpz(a) * mpz(b));
        ASSERT_EQ(a == b, mpz(a) == mpz(b));
        ASSERT_EQ(a < b, mpz(a) < mpz(b));
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), mpz(a).get_mpz_t(), mpz(b).get_mpz_t());
        ASSERT_EQ(mpz(hml::gcd(a, b)), g);
        if (!b.is_zero()) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), mpz(a).get_mpz_t(), mpz(b).get_mpz_t());
            ASSERT_EQ(mpz(hml::floor_div(a, b)), q);
        }
        // One representation per value.
        ASSERT_EQ(Integer(mpz(a)).is_small(), a.is_small());
        ASSERT_EQ(Integer(mpz(a)).hash(), a.hash());
    }
}
