#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace hml {

/// Arbitrary-precision integer with an inline 64-bit fast path.
///
/// Values that fit in int64 are stored inline; arithmetic detects overflow
/// and promotes to a heap-allocated GMP integer. Results are demoted again
/// whenever they fit, so equality and hashing only ever see one
/// representation per value.
class Integer {
public:
    Integer() noexcept = default;
    Integer(int v) noexcept : small_(v) {}
    Integer(long v) noexcept : small_(v) {}
    Integer(long long v) noexcept : small_(v) {}
    explicit Integer(const mpz_class& v);
    explicit Integer(std::string_view decimal);

    Integer(const Integer& other);
    Integer(Integer&& other) noexcept : small_(other.small_), big_(other.big_) { other.big_ = nullptr; other.small_ = 0; }
    Integer& operator=(const Integer& other);
    Integer& operator=(Integer&& other) noexcept {
        std::swap(small_, other.small_);
        std::swap(big_, other.big_);
        return *this;
    }
    ~Integer() { delete big_; }

    bool is_small() const noexcept { return big_ == nullptr; }
    /// Only meaningful when is_small().
    std::int64_t small_value() const noexcept { return small_; }
    bool fits_int64() const noexcept { return is_small(); }

    bool is_zero() const noexcept { return is_small() && small_ == 0; }
    bool is_one() const noexcept { return is_small() && small_ == 1; }
    bool is_unit() const noexcept { return is_small() && (small_ == 1 || small_ == -1); }
    int sign() const noexcept;

    mpz_class to_mpz() const;
    std::string to_string() const;
    /// Throws std::overflow_error if the value does not fit.
    std::int64_t to_int64() const;

    Integer operator-() const;
    Integer& operator+=(const Integer& rhs);
    Integer& operator-=(const Integer& rhs);
    Integer& operator*=(const Integer& rhs);

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

    friend bool operator==(const Integer& a, const Integer& b) noexcept;
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

    /// a += b * c, the inner loop of every elimination.
    static void add_mul(Integer& a, const Integer& b, const Integer& c);

    std::size_t hash() const noexcept;

private:
    void normalize();
    void promote();

    std::int64_t small_ = 0;
    mpz_class* big_ = nullptr;
};

Integer abs(const Integer& a);
/// Floor division; throws std::domain_error on division by zero.
Integer floor_div(const Integer& a, const Integer& b);
/// Remainder of floor division (same sign as b).
Integer floor_mod(const Integer& a, const Integer& b);
/// Exact division; throws std::domain_error if b does not divide a.
Integer exact_div(const Integer& a, const Integer& b);
bool divides(const Integer& b, const Integer& a);
/// Non-negative gcd.
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

struct ExtendedGcd {
    Integer g;  // non-negative
    Integer x;
    Integer y;  // g == x*a + y*b
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

std::ostream& operator<<(std::ostream& os, const Integer& v);

}  // namespace hml

template <>
struct std::hash<hml::Integer> {
    std::size_t operator()(const hml::Integer& v) const noexcept { return v.hash(); }
};
