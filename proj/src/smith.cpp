#include "homeology/smith.hpp"

#include <utility>

namespace hml {

namespace {

struct SmithState {
    DenseMatrix a;
    DenseMatrix u;
    DenseMatrix u_inv;
    DenseMatrix v;
    std::size_t rows;
    std::size_t cols;
    bool track;

    // row_i += c * row_t
    void add_row(std::size_t i, std::size_t t, const Integer& c) {
        for (std::size_t j = 0; j < cols; ++j) Integer::add_mul(a[i][j], c, a[t][j]);
        if (!track) return;
        for (std::size_t j = 0; j < rows; ++j) Integer::add_mul(u[i][j], c, u[t][j]);
        const Integer neg = -c;
        for (std::size_t k = 0; k < rows; ++k) Integer::add_mul(u_inv[k][t], neg, u_inv[k][i]);
    }
    void swap_rows(std::size_t i, std::size_t t) {
        if (i == t) return;
        std::swap(a[i], a[t]);
        if (!track) return;
        std::swap(u[i], u[t]);
        for (std::size_t k = 0; k < rows; ++k) std::swap(u_inv[k][i], u_inv[k][t]);
    }
    void negate_row(std::size_t i) {
        for (auto& x : a[i]) x = -x;
        if (!track) return;
        for (auto& x : u[i]) x = -x;
        for (std::size_t k = 0; k < rows; ++k) u_inv[k][i] = -u_inv[k][i];
    }
    // col_j += c * col_t
    void add_col(std::size_t j, std::size_t t, const Integer& c) {
        for (std::size_t i = 0; i < rows; ++i) Integer::add_mul(a[i][j], c, a[i][t]);
        if (!track) return;
        for (std::size_t i = 0; i < cols; ++i) Integer::add_mul(v[i][j], c, v[i][t]);
    }
    void swap_cols(std::size_t j, std::size_t t) {
        if (j == t) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][j], a[i][t]);
        if (!track) return;
        for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][j], v[i][t]);
    }
};

}  // namespace

SmithResult smith_normal_form(const DenseMatrix& m, std::size_t rows, std::size_t cols, bool track) {
    SmithState s{m, {}, {}, {}, rows, cols, track};
    if (s.a.empty()) s.a.assign(rows, std::vector<Integer>(cols));
    if (track) {
        s.u = dense_identity(rows);
        s.u_inv = dense_identity(rows);
        s.v = dense_identity(cols);
    }
    const std::size_t n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        std::size_t pi = rows;
        std::size_t pj = cols;
        Integer best;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (s.a[i][j].is_zero()) continue;
                Integer mag = abs(s.a[i][j]);
                if (pi == rows || mag < best) {
                    best = std::move(mag);
                    pi = i;
                    pj = j;
                    if (best.is_one()) break;
                }
            }
            if (pi != rows && best.is_one()) break;
        }
        if (pi == rows) break;
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (s.a[i][t].is_zero()) continue;
                s.add_row(i, t, -floor_div(s.a[i][t], s.a[t][t]));
                if (!s.a[i][t].is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (s.a[t][j].is_zero()) continue;
                s.add_col(j, t, -floor_div(s.a[t][j], s.a[t][t]));
                if (!s.a[t][j].is_zero()) clean = false;
            }
            if (!clean) {
                // Move the smallest remainder in row/column t to the pivot.
                Integer b = abs(s.a[t][t]);
                std::size_t bi = t;
                std::size_t bj = t;
                for (std::size_t i = t + 1; i < rows; ++i) {
                    if (!s.a[i][t].is_zero() && abs(s.a[i][t]) < b) {
                        b = abs(s.a[i][t]);
                        bi = i;
                        bj = t;
                    }
                }
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (!s.a[t][j].is_zero() && abs(s.a[t][j]) < b) {
                        b = abs(s.a[t][j]);
                        bi = t;
                        bj = j;
                    }
                }
                s.swap_rows(t, bi);
                s.swap_cols(t, bj);
                continue;
            }
            bool divisible = true;
            for (std::size_t i = t + 1; i < rows && divisible; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (!divides(s.a[t][t], s.a[i][j])) {
                        s.add_row(t, i, 1);
                        divisible = false;
                        break;
                    }
                }
            }
            if (divisible) break;
        }
        if (s.a[t][t].sign() < 0) s.negate_row(t);
    }
    SmithResult out;
    out.rows = rows;
    out.cols = cols;
    out.diagonal.resize(n);
    for (std::size_t t = 0; t < n; ++t) out.diagonal[t] = s.a[t][t];
    out.d = std::move(s.a);
    out.u = std::move(s.u);
    out.u_inv = std::move(s.u_inv);
    out.v = std::move(s.v);
    return out;
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
    auto r = smith_normal_form(m, false);
    std::vector<Integer> out;
    for (auto& d : r.diagonal) {
        if (!d.is_zero()) out.push_back(d);
    }
    return out;
}

}  // namespace hml
