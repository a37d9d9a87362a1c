#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "homeology/integer.hpp"

namespace hml {

struct Entry {
    int row;
    Integer value;
};

/// Sparse column vector: entries sorted by row, no explicit zeros.
using SparseVec = std::vector<Entry>;

/// Scalar domain for elimination. modulus == 0 is Z, otherwise Z/p for a prime p.
struct Domain {
    Integer modulus = 0;

    bool is_field() const { return !modulus.is_zero(); }
    Integer reduce(const Integer& v) const { return is_field() ? floor_mod(v, modulus) : v; }
    /// Multiplicative inverse mod p; only valid in a field domain.
    Integer inverse(const Integer& v) const;
    bool is_unit(const Integer& v) const { return is_field() ? !reduce(v).is_zero() : v.is_unit(); }

    friend bool operator==(const Domain& a, const Domain& b) { return a.modulus == b.modulus; }
};

/// y + a*x, reduced in the domain.
SparseVec axpy(const SparseVec& y, const Integer& a, const SparseVec& x, const Domain& dom = {});
SparseVec scale(const SparseVec& x, const Integer& a, const Domain& dom = {});
SparseVec reduce(const SparseVec& x, const Domain& dom);
Integer coefficient(const SparseVec& v, int row);
inline int low(const SparseVec& v) { return v.empty() ? -1 : v.back().row; }
std::vector<Integer> to_dense(const SparseVec& v, int size);
SparseVec from_dense(const std::vector<Integer>& v);

using DenseMatrix = std::vector<std::vector<Integer>>;  // row-major

/// Column-sparse integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(static_cast<std::size_t>(cols)) {}
    IntMatrix(int rows, std::vector<SparseVec> columns);

    static IntMatrix identity(int n);
    static IntMatrix from_dense(const DenseMatrix& rows);
    static IntMatrix from_dense(int rows, int cols, const DenseMatrix& data) {
        return data.empty() ? IntMatrix(rows, cols) : from_dense(data);
    }

    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(cols_.size()); }
    const SparseVec& col(int j) const { return cols_[static_cast<std::size_t>(j)]; }
    SparseVec& col(int j) { return cols_[static_cast<std::size_t>(j)]; }
    const std::vector<SparseVec>& columns() const { return cols_; }
    void append_col(SparseVec v) { cols_.push_back(std::move(v)); }

    Integer at(int r, int c) const { return coefficient(col(c), r); }
    void set(int r, int c, const Integer& v);

    DenseMatrix to_dense() const;
    IntMatrix transpose() const;
    bool is_zero() const;
    std::size_t nonzeros() const;
    SparseVec apply(const SparseVec& x, const Domain& dom = {}) const;
    /// Keep only rows >= first_row; row indices unchanged.
    IntMatrix rows_from(int first_row) const;
    IntMatrix first_cols(int n) const;
    IntMatrix reduced(const Domain& dom) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

private:
    int rows_ = 0;
    std::vector<SparseVec> cols_;
};

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

DenseMatrix dense_identity(std::size_t n);
DenseMatrix dense_multiply(const DenseMatrix& a, const DenseMatrix& b, std::size_t inner);
Integer dense_determinant(const DenseMatrix& m);

}  // namespace hml
