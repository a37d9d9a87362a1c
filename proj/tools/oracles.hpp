#pragma once

// Brute-force references shared by the test suites and the acceptance binary.
// Each one recomputes a quantity from its definition without the library's algebra.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "homeology/abelian_group.hpp"
#include "homeology/complex.hpp"
#include "homeology/maps.hpp"
#include "homeology/matrix.hpp"
#include "homeology/random.hpp"

namespace oracle {

using hml::Integer;
using hml::Simplex;
using hml::SimplicialComplex;

// Subcomplexes as bitmasks over the nonempty faces (face id - 1), so at most 64 faces.
struct FaceIndex {
    std::vector<Simplex> faces;
    std::map<Simplex, int> id;
    std::vector<std::vector<int>> boundary;  // codimension-one faces

    explicit FaceIndex(const SimplicialComplex& k) {
        for (int d = 0; d <= k.dim(); ++d) {
            for (const auto& s : k.faces(d)) {
                id[s] = static_cast<int>(faces.size());
                faces.push_back(s);
            }
        }
        for (const auto& s : faces) {
            std::vector<int> b;
            if (s.size() > 1) {
                for (std::size_t i = 0; i < s.size(); ++i) {
                    Simplex f = s;
                    f.erase(f.begin() + static_cast<long>(i));
                    b.push_back(id.at(f));
                }
            }
            boundary.push_back(b);
        }
    }
};

inline bool bit(std::uint64_t m, int i) { return (m >> i) & 1u; }

// Same-dimension simplices chained through shared codimension-one faces (edges for vertices).
inline bool completely_connected(const FaceIndex& fx, std::uint64_t mask) {
    std::map<int, std::vector<int>> by_dim;
    for (int i = 0; i < static_cast<int>(fx.faces.size()); ++i) {
        if (bit(mask, i)) by_dim[static_cast<int>(fx.faces[static_cast<std::size_t>(i)].size()) - 1].push_back(i);
    }
    for (const auto& [d, members] : by_dim) {
        std::set<int> seen{members.front()};
        std::vector<int> stack{members.front()};
        while (!stack.empty()) {
            const int a = stack.back();
            stack.pop_back();
            for (int b : members) {
                if (seen.count(b)) continue;
                bool adjacent = false;
                if (d == 0) {
                    Simplex e = {fx.faces[static_cast<std::size_t>(a)][0], fx.faces[static_cast<std::size_t>(b)][0]};
                    std::sort(e.begin(), e.end());
                    auto it = fx.id.find(e);
                    adjacent = it != fx.id.end() && bit(mask, it->second);
                } else {
                    for (int f : fx.boundary[static_cast<std::size_t>(a)]) {
                        const auto& fb = fx.boundary[static_cast<std::size_t>(b)];
                        if (std::find(fb.begin(), fb.end(), f) != fb.end()) adjacent = true;
                    }
                }
                if (adjacent) {
                    seen.insert(b);
                    stack.push_back(b);
                }
            }
        }
        if (seen.size() != members.size()) return false;
    }
    return true;
}

// Every nonempty subcomplex, or nullopt once more than `cap` have been produced.
inline std::optional<std::vector<std::uint64_t>> all_subcomplexes(const FaceIndex& fx, std::size_t cap) {
    const int n = static_cast<int>(fx.faces.size());
    if (n > 64) return std::nullopt;
    std::vector<std::uint64_t> out;
    bool overflow = false;
    // Faces are ordered by dimension, so a face can be decided once its boundary is.
    auto rec = [&](auto&& self, int i, std::uint64_t mask) -> void {
        if (overflow) return;
        if (i == n) {
            if (mask != 0) {
                out.push_back(mask);
                if (out.size() > cap) overflow = true;
            }
            return;
        }
        self(self, i + 1, mask);
        const auto& b = fx.boundary[static_cast<std::size_t>(i)];
        if (std::all_of(b.begin(), b.end(), [&](int f) { return bit(mask, f); })) {
            self(self, i + 1, mask | (std::uint64_t{1} << i));
        }
    };
    rec(rec, 0, 0);
    if (overflow) return std::nullopt;
    return out;
}

// Maximal completely connected subcomplexes by exhaustive search; nullopt if K is too large.
inline std::optional<std::vector<SimplicialComplex>> brute_force_components(const SimplicialComplex& k,
                                                                            std::size_t cap = 1u << 21) {
    const FaceIndex fx(k);
    const auto subs = all_subcomplexes(fx, cap);
    if (!subs) return std::nullopt;
    std::vector<std::uint64_t> cc;
    for (auto m : *subs) {
        if (completely_connected(fx, m)) cc.push_back(m);
    }
    std::sort(cc.begin(), cc.end(), [](auto a, auto b) { return __builtin_popcountll(a) > __builtin_popcountll(b); });
    std::vector<std::uint64_t> maximal;
    for (auto m : cc) {
        const bool dominated = std::any_of(maximal.begin(), maximal.end(), [&](auto big) { return (m & big) == m && m != big; });
        if (!dominated) maximal.push_back(m);
    }
    std::vector<SimplicialComplex> out;
    for (auto m : maximal) {
        std::vector<Simplex> s;
        for (int i = 0; i < static_cast<int>(fx.faces.size()); ++i) {
            if (bit(m, i)) s.push_back(fx.faces[static_cast<std::size_t>(i)]);
        }
        out.push_back(hml::subcomplex(k, s));
    }
    return out;
}

inline long long floor_mod(long long a, long long m) { return ((a % m) + m) % m; }

// |det| by fraction-free elimination on a small square block.
inline long long small_det(std::vector<std::vector<long long>> a) {
    const std::size_t n = a.size();
    long long prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            sign = -sign;
        }
        for (std::size_t r = c + 1; r < n; ++r) {
            for (std::size_t j = c + 1; j < n; ++j) a[r][j] = (a[r][j] * a[c][c] - a[r][c] * a[c][j]) / prev;
            a[r][c] = 0;
        }
        prev = a[c][c];
    }
    return std::llabs(sign * a[n - 1][n - 1]);
}

// Rank over Q and a nonzero maximal minor of m (rows x cols, small entries).
inline std::pair<int, long long> rank_and_minor(const std::vector<std::vector<long long>>& m, int rows, int cols) {
    for (int r = std::min(rows, cols); r >= 1; --r) {
        std::vector<bool> rsel(static_cast<std::size_t>(rows), false), csel(static_cast<std::size_t>(cols), false);
        std::fill(rsel.begin(), rsel.begin() + r, true);
        do {
            std::fill(csel.begin(), csel.end(), false);
            std::fill(csel.begin(), csel.begin() + r, true);
            do {
                std::vector<std::vector<long long>> sub;
                for (int i = 0; i < rows; ++i) {
                    if (!rsel[static_cast<std::size_t>(i)]) continue;
                    std::vector<long long> row;
                    for (int j = 0; j < cols; ++j) {
                        if (csel[static_cast<std::size_t>(j)]) row.push_back(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                    }
                    sub.push_back(row);
                }
                const long long d = small_det(sub);
                if (d != 0) return {r, d};
            } while (std::prev_permutation(csel.begin(), csel.end()));
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
    }
    return {0, 1};
}

// For G = Z^k / span(columns of m): counts[t] = #{x in G/eG : t x = 0} for every t | e.
// e is a nonzero maximal minor, a multiple of the exponent of the torsion of G.
struct CosetCount {
    long long e = 1;
    std::map<long long, long long> counts;
};

inline std::optional<CosetCount> coset_enumeration(const std::vector<std::vector<long long>>& m, int k, int cols,
                                                   long long max_elements = 60000) {
    auto [rank, minor] = rank_and_minor(m, k, cols);
    CosetCount out;
    out.e = std::max<long long>(std::llabs(minor), 1);
    long long total = 1;
    for (int i = 0; i < k; ++i) {
        total *= out.e;
        if (total > max_elements) return std::nullopt;
    }
    const long long e = out.e;
    auto encode = [&](const std::vector<long long>& v) {
        long long code = 0;
        for (int i = k - 1; i >= 0; --i) code = code * e + v[static_cast<std::size_t>(i)];
        return code;
    };
    auto decode = [&](long long code) {
        std::vector<long long> v(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            v[static_cast<std::size_t>(i)] = code % e;
            code /= e;
        }
        return v;
    };
    // Subgroup generated by the columns mod e.
    std::vector<char> in_h(static_cast<std::size_t>(total), 0);
    std::vector<long long> frontier{0};
    in_h[0] = 1;
    while (!frontier.empty()) {
        const auto v = decode(frontier.back());
        frontier.pop_back();
        for (int j = 0; j < cols; ++j) {
            std::vector<long long> w(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) {
                w[static_cast<std::size_t>(i)] =
                    floor_mod(v[static_cast<std::size_t>(i)] + m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], e);
            }
            const long long c = encode(w);
            if (!in_h[static_cast<std::size_t>(c)]) {
                in_h[static_cast<std::size_t>(c)] = 1;
                frontier.push_back(c);
            }
        }
    }
    long long h_size = std::count(in_h.begin(), in_h.end(), 1);
    for (long long t = 1; t <= e; ++t) {
        if (e % t != 0) continue;
        // x + H is killed by t iff t x in H; count such x, then divide by |H|.
        long long killed = 0;
        for (long long c = 0; c < total; ++c) {
            auto v = decode(c);
            for (auto& x : v) x = floor_mod(x * t, e);
            if (in_h[static_cast<std::size_t>(encode(v))]) ++killed;
        }
        out.counts[t] = killed / h_size;
    }
    (void)rank;
    return out;
}

// Same statistics for Z^r ⊕ ⊕ Z/d_i reduced mod e.
inline std::map<long long, long long> predicted_counts(const hml::AbelianGroup& g, long long e) {
    std::map<long long, long long> out;
    for (long long t = 1; t <= e; ++t) {
        if (e % t != 0) continue;
        long long n = 1;
        for (long i = 0; i < g.rank; ++i) n *= std::gcd(t, e);
        for (const auto& d : g.torsion) n *= std::gcd(t, d.to_int64());
        out[t] = n;
    }
    return out;
}

// Random non-degenerate map K -> K/~ identifying vertices that share no simplex.
inline hml::SimplicialMap random_quotient_map(const SimplicialComplex& k, hml::Rng& rng, int merges) {
    const int n = k.num_vertices();
    std::vector<int> cls(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) cls[static_cast<std::size_t>(v)] = v;
    auto clash = [&](int a, int b) {
        // Merging the classes of a and b is allowed if no simplex meets both classes twice.
        for (int d = 1; d <= k.dim(); ++d) {
            for (const auto& s : k.faces(d)) {
                int hits_a = 0, hits_b = 0;
                for (int v : s) {
                    hits_a += cls[static_cast<std::size_t>(v)] == cls[static_cast<std::size_t>(a)];
                    hits_b += cls[static_cast<std::size_t>(v)] == cls[static_cast<std::size_t>(b)];
                }
                if (hits_a > 0 && hits_b > 0) return true;
            }
        }
        return false;
    };
    for (int tries = 0; tries < 50 && merges > 0; ++tries) {
        const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        const int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (cls[static_cast<std::size_t>(a)] == cls[static_cast<std::size_t>(b)] || clash(a, b)) continue;
        const int from = cls[static_cast<std::size_t>(b)];
        for (auto& c : cls) {
            if (c == from) c = cls[static_cast<std::size_t>(a)];
        }
        --merges;
    }
    std::map<int, int> renumber;
    for (int c : cls) renumber.emplace(c, 0);
    int next = 0;
    std::vector<std::string> labels;
    for (auto& [c, idx] : renumber) {
        idx = next++;
        labels.push_back("q" + std::to_string(idx));
    }
    std::vector<Simplex> images;
    for (const auto& f : k.facets()) {
        Simplex s;
        for (int v : f) s.push_back(renumber[cls[static_cast<std::size_t>(v)]]);
        std::sort(s.begin(), s.end());
        images.push_back(s);
    }
    SimplicialComplex target = SimplicialComplex::from_simplices(labels, images);
    std::map<std::string, std::string> vm;
    for (int v = 0; v < n; ++v) vm[k.label(v)] = labels[static_cast<std::size_t>(renumber[cls[static_cast<std::size_t>(v)]])];
    return hml::SimplicialMap::from_labels(k, target, vm);
}

}  // namespace oracle
