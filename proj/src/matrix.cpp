#include "homeology/matrix.hpp"

#include <algorithm>

#include "homeology/error.hpp"

namespace hml {

Integer Domain::inverse(const Integer& v) const {
    ensure(is_field(), "inverse outside a field domain");
    auto eg = extended_gcd(reduce(v), modulus);
    ensure(eg.g.is_one(), "non-invertible element mod p");
    return reduce(eg.x);
}

SparseVec axpy(const SparseVec& y, const Integer& a, const SparseVec& x, const Domain& dom) {
    if (a.is_zero() || x.empty()) return y;
    SparseVec out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].row < x[j].row)) {
            out.push_back(y[i++]);
        } else if (i == y.size() || x[j].row < y[i].row) {
            Integer v = dom.reduce(a * x[j].value);
            if (!v.is_zero()) out.push_back({x[j].row, std::move(v)});
            ++j;
        } else {
            Integer v = y[i].value;
            Integer::add_mul(v, a, x[j].value);
            v = dom.reduce(v);
            if (!v.is_zero()) out.push_back({y[i].row, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec scale(const SparseVec& x, const Integer& a, const Domain& dom) {
    SparseVec out;
    if (a.is_zero()) return out;
    out.reserve(x.size());
    for (const auto& e : x) {
        Integer v = dom.reduce(e.value * a);
        if (!v.is_zero()) out.push_back({e.row, std::move(v)});
    }
    return out;
}

SparseVec reduce(const SparseVec& x, const Domain& dom) {
    if (!dom.is_field()) return x;
    SparseVec out;
    for (const auto& e : x) {
        Integer v = dom.reduce(e.value);
        if (!v.is_zero()) out.push_back({e.row, std::move(v)});
    }
    return out;
}

Integer coefficient(const SparseVec& v, int row) {
    auto it = std::lower_bound(v.begin(), v.end(), row, [](const Entry& e, int r) { return e.row < r; });
    if (it != v.end() && it->row == row) return it->value;
    return 0;
}

std::vector<Integer> to_dense(const SparseVec& v, int size) {
    std::vector<Integer> out(static_cast<std::size_t>(size));
    for (const auto& e : v) out[static_cast<std::size_t>(e.row)] = e.value;
    return out;
}

SparseVec from_dense(const std::vector<Integer>& v) {
    SparseVec out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) out.push_back({static_cast<int>(i), v[i]});
    }
    return out;
}

IntMatrix::IntMatrix(int rows, std::vector<SparseVec> columns) : rows_(rows), cols_(std::move(columns)) {}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.col(i).push_back({i, 1});
    return m;
}

IntMatrix IntMatrix::from_dense(const DenseMatrix& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int j = 0; j < c; ++j) {
        for (int i = 0; i < r; ++i) {
            const auto& v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (!v.is_zero()) m.col(j).push_back({i, v});
        }
    }
    return m;
}

void IntMatrix::set(int r, int c, const Integer& v) {
    auto& cv = col(c);
    auto it = std::lower_bound(cv.begin(), cv.end(), r, [](const Entry& e, int row) { return e.row < row; });
    if (it != cv.end() && it->row == r) {
        if (v.is_zero()) {
            cv.erase(it);
        } else {
            it->value = v;
        }
    } else if (!v.is_zero()) {
        cv.insert(it, {r, v});
    }
}

DenseMatrix IntMatrix::to_dense() const {
    DenseMatrix out(static_cast<std::size_t>(rows_), std::vector<Integer>(cols_.size()));
    for (std::size_t j = 0; j < cols_.size(); ++j) {
        for (const auto& e : cols_[j]) out[static_cast<std::size_t>(e.row)][j] = e.value;
    }
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols(), rows_);
    for (int j = 0; j < cols(); ++j) {
        for (const auto& e : col(j)) t.col(e.row).push_back({j, e.value});
    }
    return t;
}

bool IntMatrix::is_zero() const {
    return std::all_of(cols_.begin(), cols_.end(), [](const SparseVec& v) { return v.empty(); });
}

std::size_t IntMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

SparseVec IntMatrix::apply(const SparseVec& x, const Domain& dom) const {
    SparseVec out;
    for (const auto& e : x) out = axpy(out, e.value, col(e.row), dom);
    return out;
}

IntMatrix IntMatrix::rows_from(int first_row) const {
    IntMatrix m(rows_, cols());
    for (int j = 0; j < cols(); ++j) {
        const auto& src = col(j);
        auto it = std::lower_bound(src.begin(), src.end(), first_row,
                                   [](const Entry& e, int r) { return e.row < r; });
        m.col(j).assign(it, src.end());
    }
    return m;
}

IntMatrix IntMatrix::first_cols(int n) const {
    return IntMatrix(rows_, std::vector<SparseVec>(cols_.begin(), cols_.begin() + n));
}

IntMatrix IntMatrix::reduced(const Domain& dom) const {
    IntMatrix m(rows_, cols());
    for (int j = 0; j < cols(); ++j) m.col(j) = hml::reduce(col(j), dom);
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    ensure(a.cols() == b.rows(), "matrix product dimension mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (int j = 0; j < b.cols(); ++j) out.col(j) = a.apply(b.col(j));
    return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int j = 0; j < a.cols(); ++j) {
        const auto& x = a.col(j);
        const auto& y = b.col(j);
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].row != y[i].row || x[i].value != y[i].value) return false;
        }
    }
    return true;
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
    ensure(a.rows() == b.rows(), "hconcat row mismatch");
    std::vector<SparseVec> cols = a.columns();
    cols.insert(cols.end(), b.columns().begin(), b.columns().end());
    return IntMatrix(a.rows(), std::move(cols));
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    const auto d = m.to_dense();
    os << "[";
    for (std::size_t i = 0; i < d.size(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < d[i].size(); ++j) os << (j ? " " : "") << d[i][j];
    }
    return os << "]";
}

DenseMatrix dense_identity(std::size_t n) {
    DenseMatrix m(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

DenseMatrix dense_multiply(const DenseMatrix& a, const DenseMatrix& b, std::size_t inner) {
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    DenseMatrix out(a.size(), std::vector<Integer>(cols));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) Integer::add_mul(out[i][j], a[i][k], b[k][j]);
        }
    }
    return out;
}

Integer dense_determinant(const DenseMatrix& m) {
    // Bareiss fraction-free elimination.
    const std::size_t n = m.size();
    if (n == 0) return 1;
    DenseMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace hml
