#include "homeology/integer.hpp"

#include <functional>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace hml {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

void set_mpz_from_int64(mpz_class& z, std::int64_t v) {
    // mpz_set_si takes a long, which is 64-bit on every supported target.
    static_assert(sizeof(long) == sizeof(std::int64_t));
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
}

}  // namespace

Integer::Integer(const mpz_class& v) : big_(new mpz_class(v)) { normalize(); }

Integer::Integer(std::string_view decimal) {
    mpz_class z;
    if (z.set_str(std::string(decimal), 10) != 0) {
        throw std::invalid_argument("not a decimal integer: " + std::string(decimal));
    }
    big_ = new mpz_class(std::move(z));
    normalize();
}

Integer::Integer(const Integer& other) : small_(other.small_) {
    if (other.big_) big_ = new mpz_class(*other.big_);
}

Integer& Integer::operator=(const Integer& other) {
    if (this == &other) return *this;
    if (other.big_) {
        if (big_) {
            *big_ = *other.big_;
        } else {
            big_ = new mpz_class(*other.big_);
        }
    } else {
        delete big_;
        big_ = nullptr;
        small_ = other.small_;
    }
    return *this;
}

int Integer::sign() const noexcept {
    if (is_small()) return (small_ > 0) - (small_ < 0);
    return sgn(*big_);
}

void Integer::normalize() {
    if (big_ && mpz_fits_slong_p(big_->get_mpz_t())) {
        small_ = mpz_get_si(big_->get_mpz_t());
        delete big_;
        big_ = nullptr;
    }
}

void Integer::promote() {
    if (!big_) {
        big_ = new mpz_class;
        set_mpz_from_int64(*big_, small_);
        small_ = 0;
    }
}

mpz_class Integer::to_mpz() const {
    if (big_) return *big_;
    mpz_class z;
    set_mpz_from_int64(z, small_);
    return z;
}

std::string Integer::to_string() const {
    if (is_small()) return std::to_string(small_);
    return big_->get_str(10);
}

std::int64_t Integer::to_int64() const {
    if (!is_small()) throw std::overflow_error("integer does not fit in 64 bits: " + to_string());
    return small_;
}

Integer Integer::operator-() const {
    if (is_small() && small_ != kMin) return Integer(-small_);
    Integer r(to_mpz());
    r.promote();
    mpz_neg(r.big_->get_mpz_t(), r.big_->get_mpz_t());
    r.normalize();
    return r;
}

Integer& Integer::operator+=(const Integer& rhs) {
    if (is_small() && rhs.is_small()) {
        std::int64_t out;
        if (!__builtin_add_overflow(small_, rhs.small_, &out)) {
            small_ = out;
            return *this;
        }
    }
    promote();
    if (rhs.is_small()) {
        mpz_class t;
        set_mpz_from_int64(t, rhs.small_);
        *big_ += t;
    } else {
        *big_ += *rhs.big_;
    }
    normalize();
    return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
    if (is_small() && rhs.is_small()) {
        std::int64_t out;
        if (!__builtin_sub_overflow(small_, rhs.small_, &out)) {
            small_ = out;
            return *this;
        }
    }
    promote();
    if (rhs.is_small()) {
        mpz_class t;
        set_mpz_from_int64(t, rhs.small_);
        *big_ -= t;
    } else {
        *big_ -= *rhs.big_;
    }
    normalize();
    return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
    if (is_small() && rhs.is_small()) {
        std::int64_t out;
        if (!__builtin_mul_overflow(small_, rhs.small_, &out)) {
            small_ = out;
            return *this;
        }
    }
    if (is_zero() || rhs.is_zero()) {
        *this = Integer(0);
        return *this;
    }
    promote();
    if (rhs.is_small()) {
        mpz_class t;
        set_mpz_from_int64(t, rhs.small_);
        *big_ *= t;
    } else {
        *big_ *= *rhs.big_;
    }
    normalize();
    return *this;
}

void Integer::add_mul(Integer& a, const Integer& b, const Integer& c) {
    if (a.is_small() && b.is_small() && c.is_small()) {
        std::int64_t prod;
        std::int64_t sum;
        if (!__builtin_mul_overflow(b.small_, c.small_, &prod) &&
            !__builtin_add_overflow(a.small_, prod, &sum)) {
            a.small_ = sum;
            return;
        }
    }
    a += b * c;
}

bool operator==(const Integer& a, const Integer& b) noexcept {
    if (a.is_small() != b.is_small()) return false;  // normalized representations
    if (a.is_small()) return a.small_ == b.small_;
    return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
    if (a.is_small() && b.is_small()) return a.small_ <=> b.small_;
    int c = 0;
    if (a.is_small()) {
        c = -mpz_cmp_si(b.big_->get_mpz_t(), static_cast<long>(a.small_));
    } else if (b.is_small()) {
        c = mpz_cmp_si(a.big_->get_mpz_t(), static_cast<long>(b.small_));
    } else {
        c = mpz_cmp(a.big_->get_mpz_t(), b.big_->get_mpz_t());
    }
    return c <=> 0;
}

std::size_t Integer::hash() const noexcept {
    if (is_small()) return std::hash<std::int64_t>{}(small_);
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    const std::size_t n = mpz_size(big_->get_mpz_t());
    for (std::size_t i = 0; i < n; ++i) {
        h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(big_->get_mpz_t(), i)) + 0x9e3779b9 + (h << 6) + (h >> 2);
    }
    return h ^ static_cast<std::size_t>(sign() + 1);
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer floor_div(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.is_small() && b.is_small() && !(a.small_value() == kMin && b.small_value() == -1)) {
        std::int64_t q = a.small_value() / b.small_value();
        std::int64_t r = a.small_value() % b.small_value();
        if (r != 0 && ((r < 0) != (b.small_value() < 0))) --q;
        return Integer(q);
    }
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
}

Integer floor_mod(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.is_small() && b.is_small()) {
        if (b.small_value() == -1) return Integer(0);
        std::int64_t r = a.small_value() % b.small_value();
        if (r != 0 && ((r < 0) != (b.small_value() < 0))) r += b.small_value();
        return Integer(r);
    }
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(r);
}

Integer exact_div(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (!divides(b, a)) throw std::domain_error("inexact division " + a.to_string() + " / " + b.to_string());
    if (a.is_small() && b.is_small() && !(a.small_value() == kMin && b.small_value() == -1)) {
        return Integer(a.small_value() / b.small_value());
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
}

bool divides(const Integer& b, const Integer& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_small() && b.is_small()) {
        if (b.small_value() == -1) return true;
        return a.small_value() % b.small_value() == 0;
    }
    return mpz_divisible_p(a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t()) != 0;
}

Integer gcd(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small() && a.small_value() != kMin && b.small_value() != kMin) {
        std::int64_t x = a.small_value() < 0 ? -a.small_value() : a.small_value();
        std::int64_t y = b.small_value() < 0 ? -b.small_value() : b.small_value();
        while (y != 0) {
            std::int64_t t = x % y;
            x = y;
            y = t;
        }
        return Integer(x);
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(g);
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a.is_zero() || b.is_zero()) return Integer(0);
    return abs(exact_div(a, gcd(a, b)) * b);
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small() && a.small_value() != kMin && b.small_value() != kMin) {
        std::int64_t old_r = a.small_value(), r = b.small_value();
        std::int64_t old_s = 1, s = 0;
        std::int64_t old_t = 0, t = 1;
        while (r != 0) {
            const std::int64_t q = old_r / r;
            std::int64_t tmp = old_r - q * r;
            old_r = r;
            r = tmp;
            tmp = old_s - q * s;
            old_s = s;
            s = tmp;
            tmp = old_t - q * t;
            old_t = t;
            t = tmp;
        }
        if (old_r < 0) {
            old_r = -old_r;
            old_s = -old_s;
            old_t = -old_t;
        }
        return {Integer(old_r), Integer(old_s), Integer(old_t)};
    }
    mpz_class g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return {Integer(g), Integer(x), Integer(y)};
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

}  // namespace hml
