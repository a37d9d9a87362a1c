#include "homeology/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include "homeology/error.hpp"

namespace hml {

namespace {

const std::vector<Simplex>& empty_face_list() {
    static const std::vector<Simplex> none;
    return none;
}

bool is_subset(const Simplex& a, const Simplex& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Simplex set_minus(const Simplex& a, const Simplex& b) {
    Simplex out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Simplex set_union(const Simplex& a, const Simplex& b) {
    Simplex out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Labels of l renamed away from taken, priming until unique.
std::vector<std::string> rename_away(const std::vector<std::string>& labels, std::unordered_set<std::string>& taken) {
    std::vector<std::string> out;
    for (const auto& s : labels) {
        std::string name = s;
        while (taken.count(name)) name += "'";
        taken.insert(name);
        out.push_back(name);
    }
    return out;
}

Simplex shifted(const Simplex& s, int by) {
    Simplex out = s;
    for (int& v : out) v += by;
    return out;
}

}  // namespace

int permutation_sign(std::vector<int> seq) {
    int sign = 1;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        for (std::size_t j = i; j > 0 && seq[j - 1] >= seq[j]; --j) {
            if (seq[j - 1] == seq[j]) return 0;
            std::swap(seq[j - 1], seq[j]);
            sign = -sign;
        }
    }
    return sign;
}

SimplicialComplex::SimplicialComplex() : faces_{{Simplex{}}}, offsets_{0, 1}, facets_{Simplex{}} {
    index_.resize(1);
    index_[0].emplace(Simplex{}, 0);
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::string>& vertex_order,
                                                 const std::vector<std::vector<std::string>>& facets) {
    std::unordered_map<std::string, int> idx;
    for (std::size_t i = 0; i < vertex_order.size(); ++i) {
        if (!idx.emplace(vertex_order[i], static_cast<int>(i)).second) {
            throw Error(ErrorKind::InvalidInput, "duplicate vertex label '" + vertex_order[i] + "'");
        }
    }
    std::vector<Simplex> simplices;
    for (const auto& f : facets) {
        Simplex s;
        for (const auto& l : f) {
            auto it = idx.find(l);
            if (it == idx.end()) throw Error(ErrorKind::InvalidInput, "unknown vertex label '" + l + "'");
            s.push_back(it->second);
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw Error(ErrorKind::InvalidInput, "repeated vertex in a facet");
        }
        simplices.push_back(std::move(s));
    }
    return from_simplices(vertex_order, simplices);
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<std::string> labels, const std::vector<Simplex>& simplices) {
    SimplicialComplex k;
    k.labels_ = std::move(labels);
    for (std::size_t i = 0; i < k.labels_.size(); ++i) {
        if (!k.label_index_.emplace(k.labels_[i], static_cast<int>(i)).second) {
            throw Error(ErrorKind::InvalidInput, "duplicate vertex label '" + k.labels_[i] + "'");
        }
    }
    const int n = static_cast<int>(k.labels_.size());
    std::vector<std::unordered_set<Simplex, SimplexHash>> sets(1);
    sets[0].insert(Simplex{});
    auto add = [&](const Simplex& s) {
        const std::size_t d = s.size();
        if (sets.size() <= d) sets.resize(d + 1);
        sets[d].insert(s);
    };
    for (int v = 0; v < n; ++v) add(Simplex{v});
    for (const auto& s : simplices) {
        for (int v : s) {
            if (v < 0 || v >= n) throw Error(ErrorKind::InvalidInput, "vertex ord out of range");
        }
        if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw Error(ErrorKind::InvalidInput, "simplex is not strictly increasing");
        }
        if (s.size() > 24) throw Error(ErrorKind::Budget, "simplex dimension too large");
        if (sets.size() > s.size() && sets[s.size()].count(s)) continue;
        const std::size_t m = s.size();
        for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
            Simplex sub;
            for (std::size_t i = 0; i < m; ++i) {
                if (mask & (1ul << i)) sub.push_back(s[i]);
            }
            add(sub);
        }
    }
    while (sets.size() > 1 && sets.back().empty()) sets.pop_back();
    k.faces_.assign(sets.size(), {});
    k.index_.assign(sets.size(), {});
    k.offsets_.assign(1, 0);
    for (std::size_t d = 0; d < sets.size(); ++d) {
        auto& list = k.faces_[d];
        list.assign(sets[d].begin(), sets[d].end());
        std::sort(list.begin(), list.end());
        for (std::size_t i = 0; i < list.size(); ++i) k.index_[d].emplace(list[i], static_cast<int>(i));
        k.offsets_.push_back(k.offsets_.back() + static_cast<int>(list.size()));
    }
    // A face is a facet when no face one dimension up contains it.
    std::vector<std::vector<char>> covered(k.faces_.size());
    for (std::size_t d = 0; d < k.faces_.size(); ++d) covered[d].assign(k.faces_[d].size(), 0);
    for (std::size_t d = 1; d < k.faces_.size(); ++d) {
        for (const auto& s : k.faces_[d]) {
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex f = s;
                f.erase(f.begin() + static_cast<long>(i));
                covered[d - 1][static_cast<std::size_t>(k.index_[d - 1].at(f))] = 1;
            }
        }
    }
    k.facets_.clear();
    for (std::size_t d = 0; d < k.faces_.size(); ++d) {
        for (std::size_t i = 0; i < k.faces_[d].size(); ++i) {
            if (!covered[d][i]) k.facets_.push_back(k.faces_[d][i]);
        }
    }
    return k;
}

int SimplicialComplex::vertex_index(std::string_view label) const {
    auto it = label_index_.find(std::string(label));
    return it == label_index_.end() ? -1 : it->second;
}

const std::vector<Simplex>& SimplicialComplex::faces(int d) const {
    if (d < -1 || d > dim()) return empty_face_list();
    return faces_[static_cast<std::size_t>(d + 1)];
}

int SimplicialComplex::index_of(const Simplex& s) const {
    const std::size_t d = s.size();
    if (d >= index_.size()) return -1;
    auto it = index_[d].find(s);
    return it == index_[d].end() ? -1 : it->second;
}

int SimplicialComplex::face_id(const Simplex& s) const {
    const int i = index_of(s);
    return i < 0 ? -1 : offsets_[s.size()] + i;
}

const Simplex& SimplicialComplex::face_by_id(int id) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), id);
    const std::size_t d = static_cast<std::size_t>(it - offsets_.begin()) - 1;
    return faces_[d][static_cast<std::size_t>(id - offsets_[d])];
}

Simplex SimplicialComplex::simplex_of(const std::vector<std::string>& labels) const {
    Simplex s;
    for (const auto& l : labels) {
        const int v = vertex_index(l);
        if (v < 0) throw Error(ErrorKind::InvalidInput, "unknown vertex label '" + l + "'");
        s.push_back(v);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error(ErrorKind::InvalidInput, "repeated vertex label");
    return s;
}

std::vector<std::string> SimplicialComplex::labels_of(const Simplex& s) const {
    std::vector<std::string> out;
    for (int v : s) out.push_back(label(v));
    return out;
}

std::string SimplicialComplex::to_string(const Simplex& s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + label(s[i]);
    return out + "}";
}

std::string SimplicialComplex::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < facets_.size(); ++i) out += (i ? " " : "") + to_string(facets_[i]);
    return out + "]";
}

SimplicialComplex subcomplex(const SimplicialComplex& k, const std::vector<Simplex>& simplices) {
    std::set<int> used;
    for (const auto& s : simplices) used.insert(s.begin(), s.end());
    std::vector<int> remap(static_cast<std::size_t>(k.num_vertices()), -1);
    std::vector<std::string> labels;
    for (int v : used) {
        remap[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
        labels.push_back(k.label(v));
    }
    std::vector<Simplex> mapped;
    mapped.reserve(simplices.size());
    for (const auto& s : simplices) {
        Simplex t;
        for (int v : s) t.push_back(remap[static_cast<std::size_t>(v)]);
        mapped.push_back(std::move(t));
    }
    return SimplicialComplex::from_simplices(std::move(labels), mapped);
}

Simplex translate(const SimplicialComplex& from, const Simplex& s, const SimplicialComplex& to) {
    Simplex out;
    for (int v : s) {
        const int w = to.vertex_index(from.label(v));
        if (w < 0) throw Error(ErrorKind::NotInComplex, "vertex '" + from.label(v) + "' missing from target complex");
        out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_subcomplex_of(const SimplicialComplex& l, const SimplicialComplex& k) {
    for (int v = 0; v < l.num_vertices(); ++v) {
        if (k.vertex_index(l.label(v)) < 0) return false;
    }
    for (const auto& f : l.facets()) {
        if (!k.contains(translate(l, f, k))) return false;
    }
    return true;
}

namespace {

void require_face(const SimplicialComplex& k, const Simplex& sigma) {
    if (!k.contains(sigma)) throw Error(ErrorKind::NotInComplex, "simplex is not a face of the complex");
}

// Faces ρ ∈ K with σ ⊆ ρ.
std::vector<Simplex> cofaces(const SimplicialComplex& k, const Simplex& sigma) {
    std::vector<Simplex> out;
    for (int d = static_cast<int>(sigma.size()) - 1; d <= k.dim(); ++d) {
        for (const auto& rho : k.faces(d)) {
            if (is_subset(sigma, rho)) out.push_back(rho);
        }
    }
    return out;
}

}  // namespace

SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma) {
    require_face(k, sigma);
    std::vector<Simplex> taus;
    for (const auto& rho : cofaces(k, sigma)) taus.push_back(set_minus(rho, sigma));
    return subcomplex(k, taus);
}

SimplicialComplex star(const SimplicialComplex& k, const Simplex& sigma) {
    require_face(k, sigma);
    return subcomplex(k, cofaces(k, sigma));
}

SimplicialComplex skeleton(const SimplicialComplex& k, int n) {
    if (n < -1) throw Error(ErrorKind::InvalidInput, "skeleton dimension below -1");
    if (n == -1) return SimplicialComplex();
    std::vector<Simplex> keep;
    for (int d = 0; d <= std::min(n, k.dim()); ++d) keep.insert(keep.end(), k.faces(d).begin(), k.faces(d).end());
    return SimplicialComplex::from_simplices(k.labels(), keep);
}

std::string fresh_label(const SimplicialComplex& k) {
    for (int i = 0;; ++i) {
        std::string name = "w" + std::to_string(i);
        if (k.vertex_index(name) < 0) return name;
    }
}

SimplicialComplex stellar_subdivide(const SimplicialComplex& k, const Simplex& sigma, const std::string& new_label) {
    require_face(k, sigma);
    if (sigma.empty()) throw Error(ErrorKind::InvalidInput, "cannot subdivide the empty simplex");
    if (k.vertex_index(new_label) >= 0) throw Error(ErrorKind::LabelCollision, "label '" + new_label + "' already used");
    if (sigma.size() == 1) return k;
    std::vector<std::string> labels = k.labels();
    labels.push_back(new_label);
    const int w = k.num_vertices();
    std::vector<Simplex> simplices;
    for (int d = 0; d <= k.dim(); ++d) {
        for (const auto& f : k.faces(d)) {
            if (!is_subset(sigma, f)) simplices.push_back(f);
        }
    }
    std::vector<Simplex> link_faces;
    for (const auto& rho : cofaces(k, sigma)) link_faces.push_back(set_minus(rho, sigma));
    const std::size_t m = sigma.size();
    for (const auto& beta : link_faces) {
        // w * (proper faces of σ) * β; the maximal ones suffice.
        for (std::size_t skip = 0; skip < m; ++skip) {
            Simplex alpha = sigma;
            alpha.erase(alpha.begin() + static_cast<long>(skip));
            Simplex s = set_union(alpha, beta);
            s.push_back(w);
            simplices.push_back(std::move(s));
        }
    }
    return SimplicialComplex::from_simplices(std::move(labels), simplices);
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
    std::unordered_set<std::string> taken(k.labels().begin(), k.labels().end());
    std::vector<std::string> labels = k.labels();
    auto lnames = rename_away(l.labels(), taken);
    labels.insert(labels.end(), lnames.begin(), lnames.end());
    const int off = k.num_vertices();
    std::vector<Simplex> simplices;
    for (const auto& a : k.facets()) {
        for (const auto& b : l.facets()) {
            Simplex s = a;
            for (int v : b) s.push_back(v + off);
            simplices.push_back(std::move(s));
        }
    }
    return SimplicialComplex::from_simplices(std::move(labels), simplices);
}

SimplicialComplex disjoint_union(const SimplicialComplex& k, const SimplicialComplex& l) {
    std::unordered_set<std::string> taken(k.labels().begin(), k.labels().end());
    std::vector<std::string> labels = k.labels();
    auto lnames = rename_away(l.labels(), taken);
    labels.insert(labels.end(), lnames.begin(), lnames.end());
    std::vector<Simplex> simplices = k.facets();
    for (const auto& b : l.facets()) simplices.push_back(shifted(b, k.num_vertices()));
    return SimplicialComplex::from_simplices(std::move(labels), simplices);
}

GlueResult glue(const SimplicialComplex& k, const SimplicialComplex& l,
                const std::map<std::string, std::string>& identification) {
    std::vector<int> image(static_cast<std::size_t>(l.num_vertices()), -1);
    std::set<int> targets;
    for (const auto& [from, to] : identification) {
        const int a = l.vertex_index(from);
        const int b = k.vertex_index(to);
        if (a < 0 || b < 0) throw Error(ErrorKind::InvalidInput, "glue identification names an unknown vertex");
        if (!targets.insert(b).second) throw Error(ErrorKind::InvalidInput, "glue identification is not injective");
        image[static_cast<std::size_t>(a)] = b;
    }
    std::unordered_set<std::string> taken(k.labels().begin(), k.labels().end());
    std::vector<std::string> labels = k.labels();
    for (int v = 0; v < l.num_vertices(); ++v) {
        if (image[static_cast<std::size_t>(v)] >= 0) continue;
        std::string name = l.label(v);
        while (taken.count(name)) name += "'";
        taken.insert(name);
        image[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
        labels.push_back(name);
    }
    auto map_simplex = [&](const Simplex& s) {
        Simplex t;
        for (int v : s) t.push_back(image[static_cast<std::size_t>(v)]);
        std::sort(t.begin(), t.end());
        return t;
    };
    // Full subcomplexes on the identified vertices must correspond face for face.
    std::vector<Simplex> inter;
    auto identified = [&](const Simplex& s) {
        return std::all_of(s.begin(), s.end(), [&](int v) { return identification.count(l.label(v)) > 0; });
    };
    std::size_t l_count = 0;
    for (int d = 0; d <= l.dim(); ++d) {
        for (const auto& s : l.faces(d)) {
            if (!identified(s)) continue;
            ++l_count;
            Simplex t = map_simplex(s);
            if (!k.contains(t)) throw Error(ErrorKind::InvalidInput, "glue identification is not face-compatible");
            inter.push_back(t);
        }
    }
    std::size_t k_count = 0;
    for (int d = 0; d <= k.dim(); ++d) {
        for (const auto& s : k.faces(d)) {
            if (std::all_of(s.begin(), s.end(), [&](int v) { return targets.count(v) > 0; })) ++k_count;
        }
    }
    if (k_count != l_count) throw Error(ErrorKind::InvalidInput, "glue identification is not face-compatible");
    std::vector<Simplex> simplices = k.facets();
    for (const auto& f : l.facets()) simplices.push_back(map_simplex(f));
    GlueResult out{SimplicialComplex::from_simplices(labels, simplices), SimplicialComplex()};
    out.intersection = subcomplex(out.complex, inter);
    return out;
}

SimplicialComplex cone_points(const SimplicialComplex& k, int n) {
    if (n < 0) throw Error(ErrorKind::InvalidInput, "negative number of cone points");
    std::unordered_set<std::string> taken(k.labels().begin(), k.labels().end());
    std::vector<std::string> pts;
    for (int i = 0; i < n; ++i) {
        std::string name = "c" + std::to_string(i);
        while (taken.count(name)) name += "'";
        taken.insert(name);
        pts.push_back(name);
    }
    return join(k, SimplicialComplex::from_simplices(pts, {}));
}

std::string product_label(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

SimplicialComplex cartesian_product(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    const int n2 = k2.num_vertices();
    std::vector<std::string> labels;
    for (int a = 0; a < k1.num_vertices(); ++a) {
        for (int b = 0; b < n2; ++b) labels.push_back(product_label(k1.label(a), k2.label(b)));
    }
    std::vector<Simplex> simplices;
    for (const auto& s1 : k1.facets()) {
        for (const auto& s2 : k2.facets()) {
            if (s1.empty() || s2.empty()) continue;
            // Every monotone lattice path through s1 x s2.
            Simplex chain;
            auto walk = [&](auto&& self, std::size_t i, std::size_t j) -> void {
                chain.push_back(s1[i] * n2 + s2[j]);
                if (i + 1 == s1.size() && j + 1 == s2.size()) {
                    simplices.push_back(chain);
                } else {
                    if (i + 1 < s1.size()) self(self, i + 1, j);
                    if (j + 1 < s2.size()) self(self, i, j + 1);
                }
                chain.pop_back();
            };
            walk(walk, 0, 0);
        }
    }
    return SimplicialComplex::from_simplices(std::move(labels), simplices);
}

long euler_characteristic(const SimplicialComplex& k) {
    long chi = 0;
    for (int d = 0; d <= k.dim(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(k.faces(d).size());
    return chi;
}

namespace shapes {

namespace {
std::vector<std::string> numbered(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
}
}  // namespace

SimplicialComplex point() { return SimplicialComplex::from_simplices({"0"}, {}); }

SimplicialComplex simplex(int n) {
    Simplex all;
    for (int i = 0; i <= n; ++i) all.push_back(i);
    return SimplicialComplex::from_simplices(numbered(n + 1), {all});
}

SimplicialComplex simplex_boundary(int n) {
    std::vector<Simplex> facets;
    for (int skip = 0; skip <= n; ++skip) {
        Simplex f;
        for (int i = 0; i <= n; ++i) {
            if (i != skip) f.push_back(i);
        }
        facets.push_back(f);
    }
    return SimplicialComplex::from_simplices(numbered(n + 1), facets);
}

SimplicialComplex path(int n) {
    std::vector<Simplex> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, i + 1});
    return SimplicialComplex::from_simplices(numbered(n + 1), edges);
}

SimplicialComplex cycle(int n) {
    std::vector<Simplex> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return SimplicialComplex::from_simplices(numbered(n), edges);
}

SimplicialComplex wedge(const SimplicialComplex& k, const SimplicialComplex& l) {
    return glue(k, l, {{l.label(0), k.label(0)}}).complex;
}

SimplicialComplex torus() {
    auto id = [](int i, int j) { return ((i % 3 + 3) % 3) * 3 + (j % 3 + 3) % 3; };
    std::vector<Simplex> tris;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Simplex a{id(i, j), id(i + 1, j), id(i + 1, j + 1)};
            Simplex b{id(i, j), id(i, j + 1), id(i + 1, j + 1)};
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            tris.push_back(a);
            tris.push_back(b);
        }
    }
    return SimplicialComplex::from_simplices(numbered(9), tris);
}

}  // namespace shapes

}  // namespace hml
