#include "homeology/coefficients.hpp"

#include <charconv>

#include "homeology/error.hpp"

namespace hml {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

Coefficients Coefficients::mod(long p) {
    if (!is_prime(p) || p > (1L << 31)) {
        throw Error(ErrorKind::InvalidInput, "coefficient modulus " + std::to_string(p) + " is not a supported prime");
    }
    return {Kind::Zp, p};
}

Coefficients Coefficients::parse(const std::string& text) {
    if (text == "z" || text == "Z") return integers();
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("zp:", 0) == 0) {
        long p = 0;
        const char* first = text.data() + 3;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, p);
        if (ec != std::errc() || ptr != last) throw Error(ErrorKind::InvalidInput, "bad modulus in '" + text + "'");
        return mod(p);
    }
    throw Error(ErrorKind::InvalidInput, "unknown coefficients '" + text + "' (expected z, q or zp:<prime>)");
}

std::string Coefficients::name() const {
    switch (kind) {
        case Kind::Z:
            return "z";
        case Kind::Q:
            return "q";
        case Kind::Zp:
            return "zp:" + std::to_string(prime);
    }
    return "z";
}

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "invalid input";
        case ErrorKind::Parse: return "parse error";
        case ErrorKind::NotInComplex: return "simplex not in complex";
        case ErrorKind::LabelCollision: return "label collision";
        case ErrorKind::Budget: return "budget exceeded";
        case ErrorKind::Hypothesis: return "hypothesis violation";
        case ErrorKind::Containment: return "containment violation";
        case ErrorKind::NotSubcomplex: return "block is not a subcomplex";
        case ErrorKind::NotPure: return "block is not pure";
        case ErrorKind::NonOrientable: return "block is not orientable";
        case ErrorKind::MissingChainSimplex: return "missing chain simplex";
        case ErrorKind::PartitionViolation: return "partition violation";
        case ErrorKind::HomologyViolation: return "homology violation";
        case ErrorKind::DegenerateMap: return "degenerate map";
        case ErrorKind::Internal: return "internal error";
    }
    return "error";
}

}  // namespace hml
