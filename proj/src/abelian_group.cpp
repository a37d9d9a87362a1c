#include "homeology/abelian_group.hpp"

#include <algorithm>
#include <sstream>

#include "homeology/error.hpp"
#include "homeology/smith.hpp"

namespace hml {

namespace {

std::vector<Integer> canonical_factors(const std::vector<Integer>& orders) {
    std::vector<Integer> nz;
    for (const auto& d : orders) {
        Integer a = abs(d);
        if (!a.is_zero() && !a.is_one()) nz.push_back(std::move(a));
    }
    if (nz.size() <= 1) return nz;
    DenseMatrix diag(nz.size(), std::vector<Integer>(nz.size()));
    for (std::size_t i = 0; i < nz.size(); ++i) diag[i][i] = nz[i];
    auto s = smith_normal_form(diag, nz.size(), nz.size(), false);
    std::vector<Integer> out;
    for (auto& d : s.diagonal) {
        if (!d.is_one()) out.push_back(std::move(d));
    }
    return out;
}

}  // namespace

AbelianGroup::AbelianGroup(long free_rank, std::vector<Integer> factors)
    : rank(free_rank), torsion(canonical_factors(factors)) {
    ensure(free_rank >= 0, "negative free rank");
}

AbelianGroup AbelianGroup::from_orders(const std::vector<Integer>& orders) {
    long r = 0;
    for (const auto& d : orders) r += d.is_zero() ? 1 : 0;
    return AbelianGroup(r, orders);
}

std::string AbelianGroup::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank > 0) {
        os << "Z";
        if (rank > 1) os << "^" << rank;
        first = false;
    }
    for (const auto& d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return os.str();
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<Integer> t = a.torsion;
    t.insert(t.end(), b.torsion.begin(), b.torsion.end());
    return AbelianGroup(a.rank + b.rank, std::move(t));
}

AbelianGroup group_tensor(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<Integer> t;
    for (long i = 0; i < b.rank; ++i) t.insert(t.end(), a.torsion.begin(), a.torsion.end());
    for (long i = 0; i < a.rank; ++i) t.insert(t.end(), b.torsion.begin(), b.torsion.end());
    for (const auto& x : a.torsion) {
        for (const auto& y : b.torsion) t.push_back(gcd(x, y));
    }
    return AbelianGroup(a.rank * b.rank, std::move(t));
}

long field_rank(const IntMatrix& m, const Integer& p) {
    auto red = column_reduce(m, Domain{p}, false);
    long r = 0;
    for (const auto& c : red.reduced) r += c.empty() ? 0 : 1;
    return r;
}

Subquotient::Subquotient(const IntMatrix& numerator, const IntMatrix& denominator, const Domain& dom)
    : numerator_(numerator, dom), dom_(dom) {
    const int k = numerator_.rank();
    std::vector<SparseVec> residual;
    residual.reserve(static_cast<std::size_t>(denominator.cols()));
    for (int j = 0; j < denominator.cols(); ++j) {
        auto c = numerator_.solve(denominator.col(j));
        if (!c) throw Error(ErrorKind::Containment, "denominator generator outside numerator lattice");
        if (!c->empty()) residual.push_back(std::move(*c));
    }

    // Unit pivots remove one generator and one relation each, without touching the lifts.
    auto apply_pivots = [&](SparseVec x, std::size_t from) {
        for (std::size_t i = from; i < pivots_.size(); ++i) {
            const auto& pv = pivots_[i];
            Integer e = coefficient(x, pv.row);
            if (e.is_zero()) continue;
            Integer u = coefficient(pv.column, pv.row);
            Integer factor = dom_.is_field() ? dom_.reduce(-e * dom_.inverse(u)) : -e * u;
            x = axpy(x, factor, pv.column, dom_);
        }
        return x;
    };
    std::vector<std::size_t> applied(residual.size(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<SparseVec> next;
        std::vector<std::size_t> next_applied;
        for (std::size_t idx = 0; idx < residual.size(); ++idx) {
            SparseVec x = apply_pivots(std::move(residual[idx]), applied[idx]);
            if (x.empty()) continue;
            auto unit = std::find_if(x.begin(), x.end(), [&](const Entry& e) { return dom_.is_unit(e.value); });
            if (unit != x.end()) {
                pivots_.push_back({unit->row, std::move(x)});
                changed = true;
            } else {
                next.push_back(std::move(x));
                next_applied.push_back(pivots_.size());
            }
        }
        residual = std::move(next);
        applied = std::move(next_applied);
    }
    for (std::size_t idx = 0; idx < residual.size(); ++idx) {
        residual[idx] = apply_pivots(std::move(residual[idx]), applied[idx]);
    }

    std::vector<char> is_pivot(static_cast<std::size_t>(k), 0);
    for (const auto& pv : pivots_) is_pivot[static_cast<std::size_t>(pv.row)] = 1;
    std::vector<char> supported(static_cast<std::size_t>(k), 0);
    for (const auto& x : residual) {
        for (const auto& e : x) supported[static_cast<std::size_t>(e.row)] = 1;
    }
    std::vector<int> free_rows;
    std::vector<int> pos(static_cast<std::size_t>(k), -1);
    for (int r = 0; r < k; ++r) {
        if (is_pivot[static_cast<std::size_t>(r)]) continue;
        if (supported[static_cast<std::size_t>(r)]) {
            pos[static_cast<std::size_t>(r)] = static_cast<int>(residual_rows_.size());
            residual_rows_.push_back(r);
        } else {
            free_rows.push_back(r);
        }
    }
    ensure(!dom_.is_field() || residual_rows_.empty(), "non-unit residue over a field");

    const std::size_t s = residual_rows_.size();
    std::vector<SparseVec> coord_lifts;
    if (s > 0) {
        DenseMatrix rel(s, std::vector<Integer>(residual.size()));
        for (std::size_t j = 0; j < residual.size(); ++j) {
            for (const auto& e : residual[j]) {
                const int p = pos[static_cast<std::size_t>(e.row)];
                ensure(p >= 0, "residual relation on eliminated row");
                rel[static_cast<std::size_t>(p)][j] = e.value;
            }
        }
        auto snf = smith_normal_form(rel, s, residual.size(), true);
        u_ = std::move(snf.u);
        std::vector<std::size_t> torsion_idx;
        std::vector<std::size_t> free_idx;
        for (std::size_t t = 0; t < s; ++t) {
            const Integer d = t < snf.diagonal.size() ? snf.diagonal[t] : Integer(0);
            if (d.is_one()) continue;
            (d.is_zero() ? free_idx : torsion_idx).push_back(t);
        }
        for (auto* list : {&torsion_idx, &free_idx}) {
            for (std::size_t t : *list) {
                kept_.push_back(t);
                orders_.push_back(t < snf.diagonal.size() ? snf.diagonal[t] : Integer(0));
                SparseVec lift;
                for (std::size_t r = 0; r < s; ++r) {
                    const auto& x = snf.u_inv[r][t];
                    if (!x.is_zero()) lift.push_back({residual_rows_[r], x});
                }
                coord_lifts.push_back(std::move(lift));
            }
        }
    }
    for (int r : free_rows) {
        kept_.push_back(static_cast<std::size_t>(-1) - static_cast<std::size_t>(r));  // direct row, encoded from the top
        orders_.push_back(0);
        coord_lifts.push_back({{r, 1}});
    }
    for (const auto& c : coord_lifts) lifts_.push_back(numerator_.basis().apply(c, dom_));
    group_ = AbelianGroup::from_orders(orders_);
    if (dom_.is_field()) group_ = AbelianGroup(static_cast<long>(orders_.size()));
}

std::vector<Integer> Subquotient::project(const SparseVec& v) const {
    auto c = numerator_.solve(v);
    if (!c) throw Error(ErrorKind::Containment, "vector outside numerator lattice");
    SparseVec x = std::move(*c);
    for (const auto& pv : pivots_) {
        Integer e = coefficient(x, pv.row);
        if (e.is_zero()) continue;
        Integer u = coefficient(pv.column, pv.row);
        Integer factor = dom_.is_field() ? dom_.reduce(-e * dom_.inverse(u)) : -e * u;
        x = axpy(x, factor, pv.column, dom_);
    }
    const auto dense = to_dense(x, numerator_.rank());
    std::vector<Integer> out(kept_.size());
    for (std::size_t g = 0; g < kept_.size(); ++g) {
        const std::size_t t = kept_[g];
        if (t < residual_rows_.size()) {
            Integer y;
            for (std::size_t r = 0; r < residual_rows_.size(); ++r) {
                Integer::add_mul(y, u_[t][r], dense[static_cast<std::size_t>(residual_rows_[r])]);
            }
            out[g] = orders_[g].is_zero() ? y : floor_mod(y, orders_[g]);
        } else {
            const std::size_t row = static_cast<std::size_t>(-1) - t;
            out[g] = dom_.reduce(dense[row]);
        }
    }
    return out;
}

namespace {

IntMatrix relations(const Presentation& p) {
    IntMatrix r(static_cast<int>(p.size()), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!p.orders[i].is_zero()) r.append_col({{static_cast<int>(i), p.orders[i]}});
    }
    return r;
}

IntMatrix as_matrix(const DenseMatrix& m, std::size_t rows, std::size_t cols) {
    return IntMatrix::from_dense(static_cast<int>(rows), static_cast<int>(cols), m);
}

}  // namespace

AbelianGroup presented_homology(const Presentation& a, const DenseMatrix& in, const Presentation& g,
                                const DenseMatrix& out, const Presentation& h, const Domain& dom) {
    const int m = static_cast<int>(g.size());
    if (m == 0) return AbelianGroup();
    IntMatrix out_m = as_matrix(out, h.size(), g.size());
    IntMatrix stacked = hconcat(out_m, relations(h));
    IntMatrix ker = kernel_basis(stacked, dom);
    IntMatrix num(m, 0);
    for (int j = 0; j < ker.cols(); ++j) {
        SparseVec c;
        for (const auto& e : ker.col(j)) {
            if (e.row < m) c.push_back(e);
        }
        num.append_col(std::move(c));
    }
    IntMatrix den = hconcat(as_matrix(in, g.size(), a.size()), relations(g));
    return Subquotient(num, den, dom).group();
}

bool is_isomorphism(const DenseMatrix& f, const Presentation& g, const Presentation& h, const Domain& dom) {
    if (!presented_homology(Presentation{}, {}, g, f, h, dom).is_zero()) return false;
    IntMatrix den = hconcat(as_matrix(f, h.size(), g.size()), relations(h));
    return Subquotient(IntMatrix::identity(static_cast<int>(h.size())), den, dom).group().is_zero();
}

bool homs_equal(const DenseMatrix& f, const DenseMatrix& g, const Presentation& h, const Domain& dom) {
    if (f.size() != g.size()) return false;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].size() != g[i].size()) return false;
        for (std::size_t j = 0; j < f[i].size(); ++j) {
            Integer d = dom.reduce(f[i][j] - g[i][j]);
            if (h.orders[i].is_zero() ? !d.is_zero() : !divides(h.orders[i], d)) return false;
        }
    }
    return true;
}

}  // namespace hml
