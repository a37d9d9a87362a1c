#include "homeology/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "homeology/error.hpp"

namespace hml {

namespace {

// Makes the pivot of column k divide-or-combine with column j so that j loses its lowest entry.
void eliminate(std::vector<SparseVec>& r, std::vector<SparseVec>* v, int k, SparseVec& col, SparseVec* vcol,
               const Domain& dom) {
    const Integer& a = r[static_cast<std::size_t>(k)].back().value;
    const Integer b = col.back().value;
    if (dom.is_field()) {
        Integer c = dom.reduce(-b * dom.inverse(a));
        col = axpy(col, c, r[static_cast<std::size_t>(k)], dom);
        if (v) *vcol = axpy(*vcol, c, (*v)[static_cast<std::size_t>(k)], dom);
        return;
    }
    if (divides(a, b)) {
        Integer c = -exact_div(b, a);
        col = axpy(col, c, r[static_cast<std::size_t>(k)]);
        if (v) *vcol = axpy(*vcol, c, (*v)[static_cast<std::size_t>(k)]);
        return;
    }
    auto eg = extended_gcd(a, b);
    const Integer ka = exact_div(a, eg.g);
    const Integer kb = -exact_div(b, eg.g);
    auto& rk = r[static_cast<std::size_t>(k)];
    SparseVec new_k = axpy(scale(rk, eg.x), eg.y, col);
    SparseVec new_j = axpy(scale(rk, kb), ka, col);
    rk = std::move(new_k);
    col = std::move(new_j);
    if (v) {
        auto& vk = (*v)[static_cast<std::size_t>(k)];
        SparseVec nvk = axpy(scale(vk, eg.x), eg.y, *vcol);
        SparseVec nvj = axpy(scale(vk, kb), ka, *vcol);
        vk = std::move(nvk);
        *vcol = std::move(nvj);
    }
}

}  // namespace

ColumnReduction column_reduce(const IntMatrix& m, const Domain& dom, bool track_transform) {
    ColumnReduction out;
    const int n = m.cols();
    out.reduced.resize(static_cast<std::size_t>(n));
    if (track_transform) out.transform.resize(static_cast<std::size_t>(n));
    std::vector<int> pivot(static_cast<std::size_t>(m.rows()), -1);
    std::vector<SparseVec>* v = track_transform ? &out.transform : nullptr;
    for (int j = 0; j < n; ++j) {
        SparseVec col = reduce(m.col(j), dom);
        SparseVec vcol;
        if (track_transform) vcol.push_back({j, 1});
        while (!col.empty()) {
            const int i = low(col);
            const int k = pivot[static_cast<std::size_t>(i)];
            if (k < 0) {
                pivot[static_cast<std::size_t>(i)] = j;
                break;
            }
            eliminate(out.reduced, v, k, col, track_transform ? &vcol : nullptr, dom);
        }
        out.reduced[static_cast<std::size_t>(j)] = std::move(col);
        if (track_transform) out.transform[static_cast<std::size_t>(j)] = std::move(vcol);
    }
    return out;
}

IntMatrix kernel_basis(const IntMatrix& m, const Domain& dom) {
    auto red = column_reduce(m, dom, true);
    IntMatrix k(m.cols(), 0);
    for (int j = 0; j < m.cols(); ++j) {
        if (red.reduced[static_cast<std::size_t>(j)].empty()) k.append_col(std::move(red.transform[static_cast<std::size_t>(j)]));
    }
    return k;
}

IntMatrix image_basis(const IntMatrix& m, const Domain& dom) {
    auto red = column_reduce(m, dom, false);
    std::vector<SparseVec> cols;
    for (auto& c : red.reduced) {
        if (!c.empty()) cols.push_back(std::move(c));
    }
    std::sort(cols.begin(), cols.end(), [](const SparseVec& a, const SparseVec& b) { return low(a) < low(b); });
    return IntMatrix(m.rows(), std::move(cols));
}

HermiteResult hermite_normal_form(const IntMatrix& m) {
    auto red = column_reduce(m, {}, true);
    const int n = m.cols();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& ca = red.reduced[static_cast<std::size_t>(a)];
        const auto& cb = red.reduced[static_cast<std::size_t>(b)];
        if (ca.empty() != cb.empty()) return cb.empty();
        return low(ca) < low(cb);
    });
    std::vector<SparseVec> h;
    std::vector<SparseVec> u;
    int rank = 0;
    for (int j : order) {
        SparseVec c = std::move(red.reduced[static_cast<std::size_t>(j)]);
        SparseVec t = std::move(red.transform[static_cast<std::size_t>(j)]);
        if (!c.empty()) {
            ++rank;
            if (c.back().value.sign() < 0) {
                c = scale(c, -1);
                t = scale(t, -1);
            }
        }
        h.push_back(std::move(c));
        u.push_back(std::move(t));
    }
    // Reduce entries in pivot rows, highest pivot row first so later steps leave them alone.
    for (int k = rank - 1; k >= 0; --k) {
        const int prow = low(h[static_cast<std::size_t>(k)]);
        const Integer p = h[static_cast<std::size_t>(k)].back().value;
        for (int c = k + 1; c < rank; ++c) {
            const Integer e = coefficient(h[static_cast<std::size_t>(c)], prow);
            if (e.is_zero()) continue;
            const Integer q = floor_div(e, p);
            if (q.is_zero()) continue;
            h[static_cast<std::size_t>(c)] = axpy(h[static_cast<std::size_t>(c)], -q, h[static_cast<std::size_t>(k)]);
            u[static_cast<std::size_t>(c)] = axpy(u[static_cast<std::size_t>(c)], -q, u[static_cast<std::size_t>(k)]);
        }
    }
    return {IntMatrix(m.rows(), std::move(h)), IntMatrix(n, std::move(u)), rank};
}

EchelonLattice::EchelonLattice(const IntMatrix& generators, const Domain& dom)
    : basis_(image_basis(generators, dom)), dom_(dom), pivot_(static_cast<std::size_t>(generators.rows()), -1) {
    for (int k = 0; k < basis_.cols(); ++k) pivot_[static_cast<std::size_t>(low(basis_.col(k)))] = k;
}

std::optional<SparseVec> EchelonLattice::solve(const SparseVec& v) const {
    SparseVec x = reduce(v, dom_);
    std::vector<Entry> coeffs;
    while (!x.empty()) {
        const int i = low(x);
        const int k = pivot_[static_cast<std::size_t>(i)];
        if (k < 0) return std::nullopt;
        const Integer& a = basis_.col(k).back().value;
        const Integer& b = x.back().value;
        Integer c;
        if (dom_.is_field()) {
            c = dom_.reduce(b * dom_.inverse(a));
        } else {
            if (!divides(a, b)) return std::nullopt;
            c = exact_div(b, a);
        }
        x = axpy(x, -c, basis_.col(k), dom_);
        coeffs.push_back({k, std::move(c)});
    }
    // Pivot rows were visited in decreasing order, so columns come out decreasing.
    std::reverse(coeffs.begin(), coeffs.end());
    return coeffs;
}

std::optional<std::vector<Integer>> lattice_member(const IntMatrix& l, const std::vector<Integer>& v) {
    ensure(static_cast<int>(v.size()) == l.rows(), "lattice_member dimension mismatch");
    auto red = column_reduce(l, {}, true);
    std::vector<int> pivot(static_cast<std::size_t>(l.rows()), -1);
    for (int j = 0; j < l.cols(); ++j) {
        const auto& c = red.reduced[static_cast<std::size_t>(j)];
        if (!c.empty()) pivot[static_cast<std::size_t>(low(c))] = j;
    }
    SparseVec x = from_dense(v);
    SparseVec coeffs;  // indexed by column, in V coordinates
    while (!x.empty()) {
        const int k = pivot[static_cast<std::size_t>(low(x))];
        if (k < 0) return std::nullopt;
        const auto& col = red.reduced[static_cast<std::size_t>(k)];
        if (!divides(col.back().value, x.back().value)) return std::nullopt;
        Integer c = exact_div(x.back().value, col.back().value);
        x = axpy(x, -c, col);
        coeffs = axpy(coeffs, c, red.transform[static_cast<std::size_t>(k)]);
    }
    return to_dense(coeffs, l.cols());
}

}  // namespace hml
