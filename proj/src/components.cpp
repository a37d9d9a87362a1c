#include "homeology/components.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "homeology/error.hpp"

namespace hml {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Class representative for each d-simplex of K under the adjacency of the definition.
std::vector<int> adjacency_classes(const SimplicialComplex& k, int d) {
    const auto& simplices = k.faces(d);
    UnionFind uf(simplices.size());
    if (d == 0) {
        for (const auto& e : k.faces(1)) uf.unite(e[0], e[1]);
    } else {
        std::vector<int> first_owner(k.faces(d - 1).size(), -1);
        for (std::size_t i = 0; i < simplices.size(); ++i) {
            const auto& s = simplices[i];
            for (std::size_t skip = 0; skip < s.size(); ++skip) {
                Simplex f = s;
                f.erase(f.begin() + static_cast<long>(skip));
                auto& owner = first_owner[static_cast<std::size_t>(k.index_of(f))];
                if (owner < 0) {
                    owner = static_cast<int>(i);
                } else {
                    uf.unite(owner, static_cast<int>(i));
                }
            }
        }
    }
    std::vector<int> out(simplices.size());
    for (std::size_t i = 0; i < simplices.size(); ++i) out[i] = uf.find(static_cast<int>(i));
    return out;
}

bool is_facet(const SimplicialComplex& k, const Simplex& s) {
    for (int v = 0; v < k.num_vertices(); ++v) {
        if (std::binary_search(s.begin(), s.end(), v)) continue;
        Simplex t = s;
        t.insert(std::upper_bound(t.begin(), t.end(), v), v);
        if (k.contains(t)) return false;
    }
    return true;
}

}  // namespace

bool is_completely_connected(const SimplicialComplex& l) {
    for (int d = 0; d <= l.dim(); ++d) {
        auto cls = adjacency_classes(l, d);
        std::set<int> distinct(cls.begin(), cls.end());
        if (distinct.size() > 1) return false;
    }
    return true;
}

bool is_maximal_completely_connected(const SimplicialComplex& l, const SimplicialComplex& k) {
    if (!is_subcomplex_of(l, k) || !is_completely_connected(l)) return false;
    std::vector<Simplex> base;
    std::set<Simplex> in_l;
    for (int d = 0; d <= l.dim(); ++d) {
        for (const auto& s : l.faces(d)) {
            Simplex t = translate(l, s, k);
            in_l.insert(t);
            base.push_back(std::move(t));
        }
    }
    // Any strictly larger completely connected subcomplex contains one that adds a single closed simplex.
    for (int d = 0; d <= k.dim(); ++d) {
        for (const auto& s : k.faces(d)) {
            if (in_l.count(s)) continue;
            auto extended = base;
            extended.push_back(s);
            if (is_completely_connected(subcomplex(k, extended))) return false;
        }
    }
    return true;
}

std::vector<SimplicialComplex> completely_connected_components(const SimplicialComplex& k, std::size_t face_budget) {
    if (k.num_faces() > face_budget) {
        throw Error(ErrorKind::Budget, "component enumeration limited to " + std::to_string(face_budget) + " faces, complex has " +
                                           std::to_string(k.num_faces()));
    }
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(k.dim() + 1));
    for (int d = 0; d <= k.dim(); ++d) classes[static_cast<std::size_t>(d)] = adjacency_classes(k, d);

    std::vector<SimplicialComplex> out;
    for (int top = 0; top <= k.dim(); ++top) {
        const auto& simplices = k.faces(top);
        const auto& cls = classes[static_cast<std::size_t>(top)];
        std::set<int> reps(cls.begin(), cls.end());
        for (int rep : reps) {
            std::vector<Simplex> members;
            bool all_facets = true;
            for (std::size_t i = 0; i < simplices.size(); ++i) {
                if (cls[i] != rep) continue;
                members.push_back(simplices[i]);
                all_facets = all_facets && is_facet(k, simplices[i]);
            }
            if (!all_facets) continue;
            // Each lower layer is the whole adjacency class met by the faces of the layer above.
            std::vector<Simplex> collected = members;
            Simplex seed = members.front();
            for (int d = top - 1; d >= 1; --d) {
                seed.pop_back();
                const int c = classes[static_cast<std::size_t>(d)][static_cast<std::size_t>(k.index_of(seed))];
                const auto& layer = k.faces(d);
                for (std::size_t i = 0; i < layer.size(); ++i) {
                    if (classes[static_cast<std::size_t>(d)][i] == c) collected.push_back(layer[i]);
                }
            }
            SimplicialComplex comp = subcomplex(k, collected);
            if (!is_maximal_completely_connected(comp, k)) {
                throw Error(ErrorKind::Internal, "component candidate failed the definition check: " + comp.to_string());
            }
            out.push_back(std::move(comp));
        }
    }
    return out;
}

long count_top_components(const SimplicialComplex& k, int n) {
    if (n < 0 || n > k.dim()) return 0;
    const auto& simplices = k.faces(n);
    auto cls = adjacency_classes(k, n);
    std::set<int> reps(cls.begin(), cls.end());
    std::set<int> bad;
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        if (!is_facet(k, simplices[i])) bad.insert(cls[i]);
    }
    return static_cast<long>(reps.size() - bad.size());
}

}  // namespace hml
