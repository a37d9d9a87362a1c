#include "homeology/maps.hpp"

#include <algorithm>
#include <set>

#include "homeology/error.hpp"

namespace hml {

namespace {

void check_simplicial(const SimplicialMap& f) {
    for (int d = 0; d <= f.source.dim(); ++d) {
        for (const auto& s : f.source.faces(d)) {
            std::vector<int> img = f.image(s);
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            if (!f.target.contains(img)) {
                throw Error(ErrorKind::InvalidInput, "image of " + f.source.to_string(s) + " is not a face of the target");
            }
        }
    }
}

void require_non_degenerate(const SimplicialMap& f) {
    if (!is_non_degenerate(f)) throw Error(ErrorKind::DegenerateMap, "map collapses a simplex");
}

struct Signed {
    Simplex face;
    int sign;
};

Signed image_of(const SimplicialMap& f, const Simplex& s) {
    std::vector<int> img = f.image(s);
    const int sign = permutation_sign(img);
    std::sort(img.begin(), img.end());
    return {img, sign};
}

// Entries (row in `to`, column in `from`) of σ⊗τ ↦ ε_σ ε_τ f(σ)⊗f(τ) over the basis of `from`.
ChainMap forward(const SimplicialMap& f, const FilteredComplex& from, const FilteredComplex& to) {
    ChainMap out;
    for (int n = from.min_degree; n <= std::max(from.max_degree(), to.max_degree()); ++n) {
        std::vector<SparseVec> cols(static_cast<std::size_t>(from.size(n)));
        for (int j = 0; j < from.size(n); ++j) {
            const auto pr = from.deg(n).pairs[static_cast<std::size_t>(j)];
            const Signed a = image_of(f, f.source.face_by_id(pr.sigma));
            const Signed b = image_of(f, f.source.face_by_id(pr.tau));
            const int row = to.index_of(n, f.target.face_id(a.face), f.target.face_id(b.face));
            ensure(row >= 0, "image pair missing from the target double complex");
            cols[static_cast<std::size_t>(j)] = {{row, a.sign * b.sign}};
        }
        out.push_back(IntMatrix(to.size(n), std::move(cols)));
    }
    return out;
}

}  // namespace

std::vector<int> SimplicialMap::image(const Simplex& s) const {
    std::vector<int> out;
    out.reserve(s.size());
    for (int v : s) out.push_back(vertex_map[static_cast<std::size_t>(v)]);
    return out;
}

SimplicialMap SimplicialMap::from_labels(const SimplicialComplex& source, const SimplicialComplex& target,
                                         const std::map<std::string, std::string>& vertex_map) {
    SimplicialMap f{source, target, std::vector<int>(static_cast<std::size_t>(source.num_vertices()), -1)};
    for (const auto& [a, b] : vertex_map) {
        const int v = source.vertex_index(a);
        const int w = target.vertex_index(b);
        if (v < 0) throw Error(ErrorKind::InvalidInput, "map names unknown source vertex '" + a + "'");
        if (w < 0) throw Error(ErrorKind::InvalidInput, "map names unknown target vertex '" + b + "'");
        f.vertex_map[static_cast<std::size_t>(v)] = w;
    }
    for (int v = 0; v < source.num_vertices(); ++v) {
        if (f.vertex_map[static_cast<std::size_t>(v)] < 0) {
            throw Error(ErrorKind::InvalidInput, "map does not send vertex '" + source.label(v) + "' anywhere");
        }
    }
    check_simplicial(f);
    return f;
}

SimplicialMap SimplicialMap::identity(const SimplicialComplex& k) {
    SimplicialMap f{k, k, {}};
    for (int v = 0; v < k.num_vertices(); ++v) f.vertex_map.push_back(v);
    return f;
}

SimplicialMap SimplicialMap::inclusion(const SimplicialComplex& sub, const SimplicialComplex& k) {
    std::map<std::string, std::string> m;
    for (const auto& l : sub.labels()) m[l] = l;
    return from_labels(sub, k, m);
}

SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
    if (!(g.target == f.source)) throw Error(ErrorKind::InvalidInput, "maps are not composable");
    SimplicialMap h{g.source, f.target, {}};
    for (int w : g.vertex_map) h.vertex_map.push_back(f.vertex_map[static_cast<std::size_t>(w)]);
    return h;
}

bool is_non_degenerate(const SimplicialMap& f) {
    for (const auto& s : f.source.facets()) {
        std::set<int> img;
        for (int v : s) img.insert(f.vertex_map[static_cast<std::size_t>(v)]);
        if (img.size() != s.size()) return false;
    }
    return true;
}

ChainMap pullback_on_N(const SimplicialMap& f, bool reduced) {
    require_non_degenerate(f);
    const FilteredComplex nk = build_N(f.source, reduced);
    const FilteredComplex nl = build_N(f.target, reduced);
    ChainMap out = forward(f, nk, nl);
    for (auto& m : out) m = m.transpose();
    return out;
}

ChainMap pushforward_on_N(const SimplicialMap& f, bool reduced) {
    require_non_degenerate(f);
    return forward(f, build_N_dual(f.source, reduced), build_N_dual(f.target, reduced));
}

InducedMap induced_on_page(const SpectralSequence& from, const SpectralSequence& to, const ChainMap& map, int r) {
    InducedMap out;
    out.page = r;
    std::set<Bidegree> support;
    for (const auto& pq : from.support()) support.insert(pq);
    for (const auto& pq : to.support()) support.insert(pq);
    const Domain dom = from.coefficients().domain();
    const int n0 = from.complex().min_degree;
    for (const auto& [p, q] : support) {
        const Subquotient& src = from.cell(r, p, q);
        const Subquotient& dst = to.cell(r, p, q);
        if (src.num_generators() == 0 && dst.num_generators() == 0) continue;
        DenseMatrix m(dst.num_generators(), std::vector<Integer>(src.num_generators()));
        const std::size_t idx = static_cast<std::size_t>(q - p - n0);
        for (std::size_t j = 0; j < src.num_generators() && dst.num_generators() > 0; ++j) {
            ensure(idx < map.size(), "chain map missing a degree");
            const auto coords = dst.project(map[idx].apply(src.lifts()[j], dom));
            for (std::size_t i = 0; i < coords.size(); ++i) m[i][j] = coords[i];
        }
        out.cells[{p, q}] = std::move(m);
        out.source[{p, q}] = Presentation{src.orders()};
        out.target[{p, q}] = Presentation{dst.orders()};
    }
    return out;
}

InducedMap induced_on_cohomeology(const SimplicialMap& f, const Coefficients& coeffs, bool reduced) {
    const ChainMap m = pullback_on_N(f, reduced);
    SpectralSequence from(build_N(f.target, reduced), coeffs);
    SpectralSequence to(build_N(f.source, reduced), coeffs);
    return induced_on_page(from, to, m, 2);
}

InducedMap induced_on_homeology(const SimplicialMap& f, const Coefficients& coeffs, bool reduced) {
    const ChainMap m = pushforward_on_N(f, reduced);
    SpectralSequence from(build_N_dual(f.source, reduced), coeffs);
    SpectralSequence to(build_N_dual(f.target, reduced), coeffs);
    return induced_on_page(from, to, m, 2);
}

InducedMap compose(const InducedMap& outer, const InducedMap& inner) {
    InducedMap out;
    out.page = outer.page;
    std::set<Bidegree> keys;
    for (const auto& [pq, m] : outer.cells) keys.insert(pq);
    for (const auto& [pq, m] : inner.cells) keys.insert(pq);
    for (const auto& pq : keys) {
        const Presentation src = inner.source.count(pq) ? inner.source.at(pq) : Presentation{};
        const Presentation mid = inner.target.count(pq) ? inner.target.at(pq) : Presentation{};
        const Presentation dst = outer.target.count(pq) ? outer.target.at(pq) : Presentation{};
        if (outer.source.count(pq)) {
            ensure(outer.source.at(pq).orders == mid.orders, "induced maps are not composable");
        }
        DenseMatrix a = outer.cells.count(pq) ? outer.cells.at(pq) : DenseMatrix(dst.size(), std::vector<Integer>(mid.size()));
        DenseMatrix b = inner.cells.count(pq) ? inner.cells.at(pq) : DenseMatrix(mid.size(), std::vector<Integer>(src.size()));
        DenseMatrix c = dst.size() == 0 ? DenseMatrix{} : dense_multiply(a, b, mid.size());
        if (dst.size() > 0 && mid.size() == 0) c.assign(dst.size(), std::vector<Integer>(src.size()));
        out.cells[pq] = std::move(c);
        out.source[pq] = src;
        out.target[pq] = dst;
    }
    return out;
}

bool maps_equal(const InducedMap& a, const InducedMap& b, const Coefficients& coeffs) {
    std::set<Bidegree> keys;
    for (const auto& [pq, m] : a.cells) keys.insert(pq);
    for (const auto& [pq, m] : b.cells) keys.insert(pq);
    const Domain dom = coeffs.domain();
    for (const auto& pq : keys) {
        if (!a.cells.count(pq) || !b.cells.count(pq)) {
            const InducedMap& present = a.cells.count(pq) ? a : b;
            const DenseMatrix& m = present.cells.at(pq);
            const DenseMatrix zero(m.size(), std::vector<Integer>(m.empty() ? 0 : m[0].size()));
            if (!homs_equal(m, zero, present.target.at(pq), dom)) return false;
            continue;
        }
        if (!(a.target.at(pq).orders == b.target.at(pq).orders)) return false;
        if (!homs_equal(a.cells.at(pq), b.cells.at(pq), a.target.at(pq), dom)) return false;
    }
    return true;
}

bool is_identity(const InducedMap& a, const Coefficients& coeffs) {
    for (const auto& [pq, m] : a.cells) {
        if (!(a.source.at(pq).orders == a.target.at(pq).orders)) return false;
        if (!homs_equal(m, dense_identity(a.source.at(pq).size()), a.target.at(pq), coeffs.domain())) return false;
    }
    return true;
}

bool is_isomorphism_at(const InducedMap& a, int p, int q, const Coefficients& coeffs) {
    auto it = a.cells.find({p, q});
    if (it == a.cells.end()) return true;
    return is_isomorphism(it->second, a.source.at({p, q}), a.target.at({p, q}), coeffs.domain());
}

}  // namespace hml
