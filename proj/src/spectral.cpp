#include "homeology/spectral.hpp"

#include <algorithm>
#include <set>

#include "homeology/error.hpp"
#include "homeology/lattice.hpp"

namespace hml {

AbelianGroup BigradedTable::at(int p, int q) const {
    auto it = cells.find({p, q});
    return it == cells.end() ? AbelianGroup() : it->second;
}

void BigradedTable::set(int p, int q, const AbelianGroup& g) {
    if (g.is_zero()) {
        cells.erase({p, q});
    } else {
        cells[{p, q}] = g;
    }
}

BigradedTable SpectralPage::table() const {
    BigradedTable t;
    t.page = r;
    for (const auto& [pq, c] : cells) t.set(pq.first, pq.second, c.group);
    return t;
}

SpectralSequence::SpectralSequence(FilteredComplex f, Coefficients coeffs)
    : f_(std::move(f)), coeffs_(coeffs), dom_(coeffs.domain()) {}

Bidegree SpectralSequence::target(int r, int p, int q) const {
    const int f = filtration_of(p) - r;
    const int n = q - p + f_.step;
    const int tp = f_.homological ? -f : f;
    return {tp, n + tp};
}

int SpectralSequence::width() const { return f_.max_filtration() - f_.min_filtration(); }

const IntMatrix& SpectralSequence::cycles(int n, int f, int r) const {
    const int cols = f_.count_upto(n, f);
    const int target_size = f_.size(n + f_.step);
    const int first_row = r <= 0 ? target_size : f_.count_upto(n + f_.step, f - r);
    const auto key = std::make_tuple(n, cols, first_row);
    auto it = cycles_.find(key);
    if (it != cycles_.end()) return it->second;
    IntMatrix z;
    if (first_row >= target_size) {
        std::vector<SparseVec> id(static_cast<std::size_t>(cols));
        for (int j = 0; j < cols; ++j) id[static_cast<std::size_t>(j)] = {{j, 1}};
        z = IntMatrix(f_.size(n), std::move(id));
    } else {
        const IntMatrix block = f_.d(n).first_cols(cols).rows_from(first_row);
        z = IntMatrix(f_.size(n), kernel_basis(block, dom_).columns());
    }
    return cycles_.emplace(key, std::move(z)).first->second;
}

const Subquotient& SpectralSequence::cell(int r, int p, int q) const {
    if (r < 1) throw Error(ErrorKind::InvalidInput, "page index must be at least 1");
    r = std::min(r, width() + 1);
    const int n = q - p;
    const int f = filtration_of(p);
    const auto key = std::make_tuple(r, n, f);
    auto it = cells_.find(key);
    if (it != cells_.end()) return it->second;
    const IntMatrix& num = cycles(n, f, r);
    const IntMatrix& lower = cycles(n, f - 1, r - 1);
    const IntMatrix& source = cycles(n - f_.step, f + r - 1, r - 1);
    const IntMatrix boundaries = f_.d(n - f_.step) * source;
    Subquotient sq(num, hconcat(lower, boundaries), dom_);
    return cells_.emplace(key, std::move(sq)).first->second;
}

DenseMatrix SpectralSequence::differential(int r, int p, int q) const {
    const Subquotient& src = cell(r, p, q);
    const auto [tp, tq] = target(r, p, q);
    const Subquotient& dst = cell(r, tp, tq);
    const std::size_t cols = src.num_generators();
    DenseMatrix m(dst.num_generators(), std::vector<Integer>(cols));
    if (cols == 0 || dst.num_generators() == 0) return m;
    const IntMatrix d = f_.d(q - p);
    for (std::size_t j = 0; j < cols; ++j) {
        const auto coords = dst.project(d.apply(src.lifts()[j], dom_));
        for (std::size_t i = 0; i < coords.size(); ++i) m[i][j] = coords[i];
    }
    return m;
}

std::vector<Bidegree> SpectralSequence::support() const {
    std::vector<Bidegree> out;
    for (int n = f_.min_degree; n <= f_.max_degree(); ++n) {
        std::set<int> filts(f_.deg(n).filtration.begin(), f_.deg(n).filtration.end());
        for (int f : filts) {
            const int p = f_.homological ? -f : f;
            out.emplace_back(p, n + p);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SpectralPage SpectralSequence::page(int r) const {
    SpectralPage pg;
    pg.r = r;
    for (const auto& [p, q] : support()) {
        const Subquotient& sq = cell(r, p, q);
        if (sq.num_generators() == 0) continue;
        pg.cells[{p, q}] = PageCell{p, q, sq, coeffs_.finalize(sq.group())};
    }
    for (const auto& [pq, c] : pg.cells) {
        const Bidegree t = target(r, pq.first, pq.second);
        if (pg.cells.count(t)) pg.differentials[pq] = differential(r, pq.first, pq.second);
    }
    return pg;
}

BigradedTable SpectralSequence::table(int r) const {
    BigradedTable t;
    t.page = r;
    for (const auto& [p, q] : support()) t.set(p, q, group(r, p, q));
    return t;
}

BigradedTable SpectralSequence::e_infinity() const {
    const int r_max = width() + 2;
    BigradedTable t = table(r_max);
    ensure(t == table(r_max - 1), "spectral sequence not stationary at the width bound");
    return t;
}

GradedGroup SpectralSequence::total() const {
    GradedGroup out;
    for (int n = f_.min_degree; n <= f_.max_degree(); ++n) {
        Subquotient h(kernel_basis(f_.d(n), dom_), f_.d(n - f_.step), dom_);
        out[n] = coeffs_.finalize(h.group());
    }
    return out;
}

bool SpectralSequence::check_next_page(int r) const {
    for (const auto& [p, q] : support()) {
        const Subquotient& here = cell(r, p, q);
        const int f_in = filtration_of(p) + r;
        const int p_in = f_.homological ? -f_in : f_in;
        const int q_in = q - p - f_.step + p_in;
        const Subquotient& in = cell(r, p_in, q_in);
        const auto [tp, tq] = target(r, p, q);
        const Subquotient& out = cell(r, tp, tq);
        const AbelianGroup h = presented_homology(Presentation{in.orders()}, differential(r, p_in, q_in),
                                                  Presentation{here.orders()}, differential(r, p, q),
                                                  Presentation{out.orders()}, dom_);
        if (!(h == cell(r + 1, p, q).group())) return false;
    }
    return true;
}

BigradedTable table_from_filtered(const FilteredComplex& f, const Coefficients& coeffs, int page) {
    return SpectralSequence(f, coeffs).table(page);
}

BigradedTable cohomeology(const SimplicialComplex& k, const Coefficients& coeffs, bool reduced) {
    return table_from_filtered(build_N(k, reduced), coeffs, 2);
}

BigradedTable homeology(const SimplicialComplex& k, const Coefficients& coeffs, bool reduced) {
    return table_from_filtered(build_N_dual(k, reduced), coeffs, 2);
}

BigradedTable LinkPage::e1() const {
    BigradedTable t;
    t.page = 1;
    for (const auto& [pq, c] : cells) t.set(pq.first, pq.second, c.group);
    return t;
}

BigradedTable LinkPage::e2() const {
    BigradedTable t;
    const Domain dom = coeffs.domain();
    static const LinkCell none;
    auto find = [&](int p, int q) -> const LinkCell& {
        auto it = cells.find({p, q});
        return it == cells.end() ? none : it->second;
    };
    auto diff = [&](int p, int q, std::size_t rows, std::size_t cols) {
        auto it = differentials.find({p, q});
        return it == differentials.end() ? DenseMatrix(rows, std::vector<Integer>(cols)) : it->second;
    };
    for (const auto& [pq, c] : cells) {
        const auto [p, q] = pq;
        const LinkCell& in = find(p + 1, q);
        const LinkCell& out = find(p - 1, q);
        const AbelianGroup h =
            presented_homology(in.presentation, diff(p + 1, q, c.presentation.size(), in.presentation.size()),
                               c.presentation, diff(p, q, out.presentation.size(), c.presentation.size()),
                               out.presentation, dom);
        t.set(p, q, coeffs.finalize(h));
    }
    return t;
}

LinkPage e1_via_links(const SimplicialComplex& k, const Coefficients& coeffs, bool reduced) {
    LinkPage page;
    page.coeffs = coeffs;
    const Domain dom = coeffs.domain();
    const int top = k.dim();
    for (int p = reduced ? -1 : 0; p <= top; ++p) {
        for (const Simplex& s : k.faces(p)) {
            const SimplicialComplex lk = link(k, s);
            // q - p - 1 ranges over the link's reduced cochain degrees
            for (int q = p; q <= top; ++q) {
                const int degree = q - p - 1;
                if (degree > lk.dim()) break;
                Subquotient g = reduced_cohomology_group(lk, degree, dom);
                if (g.num_generators() == 0) continue;
                LinkCell& c = page.cells[{p, q}];
                c.p = p;
                c.q = q;
                c.simplices.push_back(s);
                c.offsets.push_back(c.presentation.size());
                for (const auto& o : g.orders()) c.presentation.orders.push_back(o);
                c.parts.push_back(LinkCohomology{lk, degree, std::move(g)});
            }
        }
    }
    for (auto& [pq, c] : page.cells) c.group = coeffs.finalize(c.presentation.group());

    for (const auto& [pq, c] : page.cells) {
        const auto [p, q] = pq;
        auto tit = page.cells.find({p - 1, q});
        if (tit == page.cells.end()) continue;
        const LinkCell& t = tit->second;
        std::map<Simplex, std::size_t> summand;
        for (std::size_t i = 0; i < t.simplices.size(); ++i) summand[t.simplices[i]] = i;
        DenseMatrix m(t.presentation.size(), std::vector<Integer>(c.presentation.size()));
        const int sign_q = (q % 2 == 0) ? 1 : -1;
        for (std::size_t s = 0; s < c.simplices.size(); ++s) {
            const Simplex& sigma = c.simplices[s];
            const LinkCohomology& part = c.parts[s];
            const auto& rhos = part.link.faces(part.degree);
            for (std::size_t vi = 0; vi < sigma.size(); ++vi) {
                const int v = sigma[vi];
                Simplex face = sigma;
                face.erase(face.begin() + static_cast<long>(vi));
                if (face.empty() && !reduced) continue;
                auto sit = summand.find(face);
                if (sit == summand.end()) continue;
                const LinkCohomology& tpart = t.parts[sit->second];
                const std::size_t row0 = t.offsets[sit->second];
                for (std::size_t g = 0; g < part.group.num_generators(); ++g) {
                    SparseVec image;
                    for (const auto& e : part.group.lifts()[g]) {
                        Simplex rho = translate(part.link, rhos[static_cast<std::size_t>(e.row)], k);
                        const long above = std::count_if(rho.begin(), rho.end(), [&](int w) { return w > v; });
                        rho.insert(std::lower_bound(rho.begin(), rho.end(), v), v);
                        const Simplex target = translate(k, rho, tpart.link);
                        const int idx = tpart.link.index_of(target);
                        ensure(idx >= 0, "link face missing in Δ_1 assembly");
                        const int sign = sign_q * (above % 2 == 0 ? 1 : -1);
                        image.push_back({idx, e.value * Integer(sign)});
                    }
                    std::sort(image.begin(), image.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
                    const auto coords = tpart.group.project(reduce(image, dom));
                    for (std::size_t i = 0; i < coords.size(); ++i) {
                        m[row0 + i][c.offsets[s] + g] = coords[i];
                    }
                }
            }
        }
        page.differentials[pq] = std::move(m);
    }
    return page;
}

}  // namespace hml
