#pragma once

#include <string>

#include "homeology/abelian_group.hpp"
#include "homeology/matrix.hpp"

namespace hml {

/// Coefficient choice: Z, Q, or Z/p for a prime p.
/// Q is computed over Z and reported torsion-free; Z/p runs elimination mod p.
struct Coefficients {
    enum class Kind { Z, Q, Zp };
    Kind kind = Kind::Z;
    long prime = 0;

    static Coefficients integers() { return {}; }
    static Coefficients rationals() { return {Kind::Q, 0}; }
    /// Throws Error(InvalidInput) unless p is prime.
    static Coefficients mod(long p);
    /// "z", "q" or "zp:<prime>".
    static Coefficients parse(const std::string& text);

    Domain domain() const { return kind == Kind::Zp ? Domain{Integer(prime)} : Domain{}; }
    AbelianGroup finalize(const AbelianGroup& g) const { return kind == Kind::Q ? g.free_part() : g; }
    std::string name() const;

    friend bool operator==(const Coefficients& a, const Coefficients& b) {
        return a.kind == b.kind && a.prime == b.prime;
    }
};

bool is_prime(long p);

}  // namespace hml
