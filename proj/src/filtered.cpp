#include "homeology/filtered.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "homeology/error.hpp"

namespace hml {

CellComplex simplicial_cells(const SimplicialComplex& k, bool reduced) {
    CellComplex c;
    c.reduced = reduced;
    const int total = k.total_ids();
    c.dims.resize(static_cast<std::size_t>(total));
    c.boundary.resize(static_cast<std::size_t>(total));
    c.below.resize(static_cast<std::size_t>(total));
    c.names.resize(static_cast<std::size_t>(total));
    for (int id = 0; id < total; ++id) {
        const Simplex& s = k.face_by_id(id);
        const std::size_t m = s.size();
        c.dims[static_cast<std::size_t>(id)] = static_cast<int>(m) - 1;
        c.names[static_cast<std::size_t>(id)] = k.to_string(s);
        auto& bd = c.boundary[static_cast<std::size_t>(id)];
        if (m >= 2 || (m == 1 && reduced)) {
            for (std::size_t i = 0; i < m; ++i) {
                Simplex f = s;
                f.erase(f.begin() + static_cast<long>(i));
                bd.push_back({k.face_id(f), i % 2 == 0 ? 1 : -1});
            }
            std::sort(bd.begin(), bd.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
        }
        auto& below = c.below[static_cast<std::size_t>(id)];
        for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
            Simplex sub;
            for (std::size_t i = 0; i < m; ++i) {
                if (mask & (1ul << i)) sub.push_back(s[i]);
            }
            below.push_back(k.face_id(sub));
        }
        std::sort(below.begin(), below.end());
    }
    return c;
}

IntMatrix FilteredComplex::d(int n) const {
    if (has_degree(n)) return differential[static_cast<std::size_t>(n - min_degree)];
    return IntMatrix(size(n + step), size(n));
}

int FilteredComplex::index_of(int n, int sigma, int tau) const {
    if (!has_degree(n)) return -1;
    const auto& idx = deg(n).index;
    auto it = idx.find(key(sigma, tau));
    return it == idx.end() ? -1 : it->second;
}

int FilteredComplex::count_upto(int n, int f) const {
    if (!has_degree(n)) return 0;
    const auto& filt = deg(n).filtration;
    return static_cast<int>(std::upper_bound(filt.begin(), filt.end(), f) - filt.begin());
}

int FilteredComplex::min_filtration() const {
    int m = 0;
    bool any = false;
    for (const auto& dg : degrees) {
        if (dg.filtration.empty()) continue;
        m = any ? std::min(m, dg.filtration.front()) : dg.filtration.front();
        any = true;
    }
    return m;
}

int FilteredComplex::max_filtration() const {
    int m = 0;
    bool any = false;
    for (const auto& dg : degrees) {
        if (dg.filtration.empty()) continue;
        m = any ? std::max(m, dg.filtration.back()) : dg.filtration.back();
        any = true;
    }
    return m;
}

namespace {

void finish_degree(FilteredComplex::Degree& dg) {
    std::vector<std::size_t> order(dg.pairs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::make_tuple(dg.filtration[a], dg.pairs[a].sigma, dg.pairs[a].tau) <
               std::make_tuple(dg.filtration[b], dg.pairs[b].sigma, dg.pairs[b].tau);
    });
    FilteredComplex::Degree out;
    for (std::size_t i : order) {
        out.filtration.push_back(dg.filtration[i]);
        out.p.push_back(dg.p[i]);
        out.pairs.push_back(dg.pairs[i]);
    }
    for (std::size_t i = 0; i < out.pairs.size(); ++i) {
        out.index.emplace(FilteredComplex::key(out.pairs[i].sigma, out.pairs[i].tau), static_cast<int>(i));
    }
    dg = std::move(out);
}

void assert_square_zero(const FilteredComplex& f) {
    for (int n = f.min_degree; n <= f.max_degree(); ++n) {
        if (!f.has_degree(n + f.step)) continue;
        ensure((f.d(n + f.step) * f.d(n)).is_zero(), "differential does not square to zero");
    }
}

}  // namespace

FilteredComplex build_N_cells(const CellComplex& cells) {
    FilteredComplex f;
    f.step = 1;
    f.homological = false;
    f.min_degree = 0;
    auto wanted = [&](int c) { return cells.reduced || cells.dims[static_cast<std::size_t>(c)] >= 0; };
    int max_n = 0;
    for (int tau = 0; tau < cells.size(); ++tau) {
        if (!wanted(tau)) continue;
        for (int sigma : cells.below[static_cast<std::size_t>(tau)]) {
            if (!wanted(sigma)) continue;
            max_n = std::max(max_n, cells.dims[static_cast<std::size_t>(tau)] - cells.dims[static_cast<std::size_t>(sigma)]);
        }
    }
    f.degrees.resize(static_cast<std::size_t>(max_n + 1));
    for (int tau = 0; tau < cells.size(); ++tau) {
        if (!wanted(tau)) continue;
        for (int sigma : cells.below[static_cast<std::size_t>(tau)]) {
            if (!wanted(sigma)) continue;
            const int p = cells.dims[static_cast<std::size_t>(sigma)];
            const int n = cells.dims[static_cast<std::size_t>(tau)] - p;
            auto& dg = f.degrees[static_cast<std::size_t>(n)];
            dg.filtration.push_back(p);
            dg.p.push_back(p);
            dg.pairs.push_back({sigma, tau});
        }
    }
    for (auto& dg : f.degrees) finish_degree(dg);

    std::vector<SparseVec> coboundary(static_cast<std::size_t>(cells.size()));
    for (int c = 0; c < cells.size(); ++c) {
        if (!wanted(c)) continue;
        for (const auto& e : cells.boundary[static_cast<std::size_t>(c)]) {
            if (wanted(e.row)) coboundary[static_cast<std::size_t>(e.row)].push_back({c, e.value});
        }
    }
    f.differential.resize(f.degrees.size());
    for (int n = 0; n <= max_n; ++n) {
        const auto& dg = f.deg(n);
        IntMatrix m(f.size(n + 1), f.size(n));
        for (int j = 0; j < f.size(n); ++j) {
            const auto [sigma, tau] = dg.pairs[static_cast<std::size_t>(j)];
            SparseVec col;
            for (const auto& e : cells.boundary[static_cast<std::size_t>(sigma)]) {
                if (!wanted(e.row)) continue;
                const int row = f.index_of(n + 1, e.row, tau);
                ensure(row >= 0, "boundary face missing from N");
                col.push_back({row, e.value});
            }
            const int sign = (cells.dims[static_cast<std::size_t>(sigma)] + 1) % 2 == 0 ? 1 : -1;
            for (const auto& e : coboundary[static_cast<std::size_t>(tau)]) {
                const int row = f.index_of(n + 1, sigma, e.row);
                ensure(row >= 0, "coboundary coface missing from N");
                col.push_back({row, sign * e.value});
            }
            std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
            SparseVec merged;
            for (auto& e : col) {
                if (!merged.empty() && merged.back().row == e.row) {
                    merged.back().value += e.value;
                    if (merged.back().value.is_zero()) merged.pop_back();
                } else {
                    merged.push_back(std::move(e));
                }
            }
            m.col(j) = std::move(merged);
        }
        f.differential[static_cast<std::size_t>(n)] = std::move(m);
    }
    assert_square_zero(f);
    return f;
}

FilteredComplex build_N(const SimplicialComplex& k, bool reduced) { return build_N_cells(simplicial_cells(k, reduced)); }

FilteredComplex dual(const FilteredComplex& f) {
    FilteredComplex g;
    g.step = -f.step;
    g.homological = !f.homological;
    g.min_degree = f.min_degree;
    g.degrees = f.degrees;
    std::vector<std::vector<int>> new_pos(f.degrees.size());
    for (std::size_t i = 0; i < g.degrees.size(); ++i) {
        auto& dg = g.degrees[i];
        for (std::size_t j = 0; j < dg.filtration.size(); ++j) dg.filtration[j] = g.homological ? -dg.p[j] : dg.p[j];
        finish_degree(dg);
        new_pos[i].resize(dg.pairs.size());
        for (std::size_t j = 0; j < dg.pairs.size(); ++j) {
            const auto& pr = dg.pairs[j];
            new_pos[i][static_cast<std::size_t>(f.index_of(f.min_degree + static_cast<int>(i), pr.sigma, pr.tau))] =
                static_cast<int>(j);
        }
    }
    g.differential.resize(g.degrees.size());
    for (int n = g.min_degree; n <= g.max_degree(); ++n) {
        // D_n is the transpose of d_{n - f.step} : C_{n - f.step} -> C_n.
        const int src = n - f.step;
        IntMatrix m(g.size(n + g.step), g.size(n));
        if (f.has_degree(src)) {
            const IntMatrix t = f.d(src).transpose();
            const auto& row_pos = new_pos[static_cast<std::size_t>(src - f.min_degree)];
            const auto& col_pos = new_pos[static_cast<std::size_t>(n - f.min_degree)];
            for (int j = 0; j < t.cols(); ++j) {
                SparseVec col;
                for (const auto& e : t.col(j)) col.push_back({row_pos[static_cast<std::size_t>(e.row)], e.value});
                std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
                m.col(col_pos[static_cast<std::size_t>(j)]) = std::move(col);
            }
        }
        g.differential[static_cast<std::size_t>(n - g.min_degree)] = std::move(m);
    }
    assert_square_zero(g);
    return g;
}

FilteredComplex build_N_dual(const SimplicialComplex& k, bool reduced) { return dual(build_N(k, reduced)); }

}  // namespace hml
