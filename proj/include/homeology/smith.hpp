#pragma once

#include <vector>

#include "homeology/matrix.hpp"

namespace hml {

/// U·M·V = D with U, V unimodular; D diagonal, non-negative, d1 | d2 | ... .
/// u_inv is U^{-1}, kept because its columns lift quotient generators.
struct SmithResult {
    DenseMatrix u;
    DenseMatrix u_inv;
    DenseMatrix d;
    DenseMatrix v;
    std::vector<Integer> diagonal;  // length min(rows, cols)
    std::size_t rows = 0;
    std::size_t cols = 0;
};

SmithResult smith_normal_form(const DenseMatrix& m, std::size_t rows, std::size_t cols, bool track = true);
inline SmithResult smith_normal_form(const IntMatrix& m, bool track = true) {
    return smith_normal_form(m.to_dense(), static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()), track);
}

/// Nonzero invariant factors (including 1s) of an integer matrix.
std::vector<Integer> invariant_factors(const IntMatrix& m);

}  // namespace hml
