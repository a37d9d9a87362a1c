#pragma once

#include <stdexcept>
#include <string>

namespace hml {

enum class ErrorKind {
    InvalidInput,
    Parse,
    NotInComplex,
    LabelCollision,
    Budget,
    Hypothesis,
    Containment,
    NotSubcomplex,
    NotPure,
    NonOrientable,
    MissingChainSimplex,
    PartitionViolation,
    HomologyViolation,
    DegenerateMap,
    Internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Internal consistency check that stays on in release builds.
inline void ensure(bool cond, const char* what) {
    if (!cond) throw Error(ErrorKind::Internal, what);
}

}  // namespace hml
