#pragma once

// Randomized algebraic properties. Case i draws its kind from i % 5 and its data from seed + i.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "homeology/abelian_group.hpp"
#include "homeology/chain.hpp"
#include "homeology/filtered.hpp"
#include "homeology/random.hpp"
#include "homeology/smith.hpp"
#include "oracles.hpp"

namespace props {

using hml::DenseMatrix;
using hml::Integer;
using hml::IntMatrix;

inline const char* kind_name(int kind) {
    static const char* names[] = {"d^2=0", "delta=dual(d)", "Delta^2=0", "snf", "subquotient"};
    return names[kind];
}

inline hml::SimplicialComplex random_small_complex(hml::Rng& rng) {
    hml::RandomComplexParams p;
    p.dim = 1 + static_cast<int>(rng.below(3));
    p.vertices = p.dim + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(7 - p.dim)));
    p.density = 0.2 + 0.1 * static_cast<double>(rng.below(5));
    return hml::random_complex(p, rng);
}

inline bool is_zero_product(const IntMatrix& a, const IntMatrix& b) { return (a * b).is_zero(); }

inline std::optional<std::string> square_zero(hml::Rng& rng) {
    const auto k = random_small_complex(rng);
    for (bool reduced : {false, true}) {
        for (int d = reduced ? -1 : 0; d < k.dim(); ++d) {
            if (!is_zero_product(hml::boundary_matrix(k, d, reduced), hml::boundary_matrix(k, d + 1, reduced))) {
                return "d_" + std::to_string(d) + " d_" + std::to_string(d + 1) + " != 0 on " + k.to_string();
            }
        }
    }
    return std::nullopt;
}

// δ against its definition (δf)(τ) = Σ_i (-1)^i f(τ minus vertex i), entry by entry.
inline std::optional<std::string> coboundary_is_dual(hml::Rng& rng) {
    const auto k = random_small_complex(rng);
    for (int d = 0; d < k.dim(); ++d) {
        const IntMatrix delta = hml::coboundary_matrix(k, d, false);
        const IntMatrix bd = hml::boundary_matrix(k, d + 1, false);
        if (!(delta == bd.transpose())) return "coboundary is not the transpose of the boundary";
        const auto& rows = k.faces(d + 1);
        const auto& cols = k.faces(d);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t c = 0; c < cols.size(); ++c) {
                long expected = 0;
                for (std::size_t i = 0; i < rows[r].size(); ++i) {
                    hml::Simplex f = rows[r];
                    f.erase(f.begin() + static_cast<long>(i));
                    if (f == cols[c]) expected = i % 2 == 0 ? 1 : -1;
                }
                if (!(delta.at(static_cast<int>(r), static_cast<int>(c)) == Integer(expected))) {
                    return "coboundary entry " + k.to_string(rows[r]) + " : " + k.to_string(cols[c]);
                }
            }
        }
    }
    const auto n = hml::build_N(k, false);
    const auto nd = hml::build_N_dual(k, false);
    const auto dn = hml::dual(n);
    if (nd.min_degree != dn.min_degree || nd.differential.size() != dn.differential.size()) return "dual shape mismatch";
    for (std::size_t i = 0; i < nd.differential.size(); ++i) {
        if (!(nd.differential[i] == dn.differential[i])) return "N_dual differs from dual(N)";
    }
    return std::nullopt;
}

inline std::optional<std::string> total_square_zero(hml::Rng& rng) {
    const auto k = random_small_complex(rng);
    for (bool reduced : {false, true}) {
        for (const auto& f : {hml::build_N(k, reduced), hml::build_N_dual(k, reduced)}) {
            for (int n = f.min_degree - 1; n <= f.max_degree() + 1; ++n) {
                const IntMatrix a = f.d(n);
                const IntMatrix b = f.d(n + f.step);
                if (a.cols() > 0 && b.rows() > 0 && !is_zero_product(b, a)) {
                    return std::string(f.step > 0 ? "Delta" : "D") + "^2 != 0 in degree " + std::to_string(n) + " on " +
                           k.to_string();
                }
            }
        }
    }
    return std::nullopt;
}

inline DenseMatrix random_dense(hml::Rng& rng, std::size_t rows, std::size_t cols, bool big) {
    DenseMatrix m(rows, std::vector<Integer>(cols));
    for (auto& row : m) {
        for (auto& x : row) {
            x = Integer(static_cast<long>(rng.below(11)) - 5);
            if (big && rng.chance(1, 4)) x *= Integer(std::string_view("1000000000000000000000"));
        }
    }
    // Low-rank products exercise nontrivial invariant factors.
    if (rows > 1 && cols > 1 && rng.chance(1, 3)) {
        for (std::size_t j = 0; j < cols; ++j) m[rows - 1][j] = m[0][j] * Integer(2) - m[1 % rows][j] * Integer(3);
    }
    return m;
}

inline bool dense_equal(const DenseMatrix& a, const DenseMatrix& b) { return a == b; }

// Product of the first k invariant factors equals the gcd of all k x k minors.
inline Integer determinantal_divisor(const DenseMatrix& m, std::size_t rows, std::size_t cols, std::size_t k) {
    Integer g = 0;
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
        std::fill(csel.begin(), csel.end(), false);
        std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
        do {
            DenseMatrix sub;
            for (std::size_t i = 0; i < rows; ++i) {
                if (!rsel[i]) continue;
                std::vector<Integer> row;
                for (std::size_t j = 0; j < cols; ++j) {
                    if (csel[j]) row.push_back(m[i][j]);
                }
                sub.push_back(row);
            }
            g = hml::gcd(g, hml::dense_determinant(sub));
        } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    return g;
}

inline std::optional<std::string> smith_unimodular(hml::Rng& rng) {
    const std::size_t rows = 1 + rng.below(5);
    const std::size_t cols = 1 + rng.below(5);
    const DenseMatrix m = random_dense(rng, rows, cols, rng.chance(1, 5));
    const auto r = hml::smith_normal_form(m, rows, cols, true);
    const DenseMatrix umv = hml::dense_multiply(hml::dense_multiply(r.u, m, rows), r.v, cols);
    if (!dense_equal(umv, r.d)) return "U M V != D";
    if (!dense_equal(hml::dense_multiply(r.u, r.u_inv, rows), hml::dense_identity(rows))) return "U U^-1 != I";
    if (!hml::abs(hml::dense_determinant(r.u)).is_one()) return "U is not unimodular";
    if (!hml::abs(hml::dense_determinant(r.v)).is_one()) return "V is not unimodular";
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (i != j && !r.d[i][j].is_zero()) return "D is not diagonal";
        }
    }
    Integer prod = 1;
    for (std::size_t i = 0; i < r.diagonal.size(); ++i) {
        const Integer& di = r.diagonal[i];
        if (di.sign() < 0) return "negative invariant factor";
        if (i + 1 < r.diagonal.size() && !hml::divides(di, r.diagonal[i + 1])) return "invariant factors do not divide";
        if (rows <= 4 && cols <= 4) {
            prod *= di;
            if (!(determinantal_divisor(m, rows, cols, i + 1) == prod)) return "invariant factors disagree with minors";
        }
    }
    return std::nullopt;
}

// Z = span(N) with N of full column rank, B = N M; Z/B against coset enumeration of Z^k / M.
inline std::optional<std::string> subquotient_cosets(hml::Rng& rng) {
    for (int attempt = 0; attempt < 20; ++attempt) {
        const int ambient = 1 + static_cast<int>(rng.below(4));
        const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(ambient)));
        const int m_cols = static_cast<int>(rng.below(4));
        std::vector<std::vector<long long>> n(static_cast<std::size_t>(ambient), std::vector<long long>(static_cast<std::size_t>(k)));
        for (auto& row : n) {
            for (auto& x : row) x = static_cast<long long>(rng.below(7)) - 3;
        }
        if (oracle::rank_and_minor(n, ambient, k).first != k) continue;
        std::vector<std::vector<long long>> m(static_cast<std::size_t>(k), std::vector<long long>(static_cast<std::size_t>(m_cols)));
        for (auto& row : m) {
            for (auto& x : row) x = static_cast<long long>(rng.below(9)) - 4;
        }
        const auto enumeration = oracle::coset_enumeration(m, k, m_cols);
        if (!enumeration) continue;

        DenseMatrix nd(static_cast<std::size_t>(ambient)), md(static_cast<std::size_t>(k));
        for (int i = 0; i < ambient; ++i) {
            for (int j = 0; j < k; ++j) nd[static_cast<std::size_t>(i)].push_back(Integer(n[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
        }
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < m_cols; ++j) md[static_cast<std::size_t>(i)].push_back(Integer(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
        }
        const IntMatrix num = IntMatrix::from_dense(ambient, k, nd);
        const IntMatrix den = num * IntMatrix::from_dense(k, m_cols, md);
        const hml::Subquotient sq(num, den);
        if (oracle::predicted_counts(sq.group(), enumeration->e) != enumeration->counts) {
            std::ostringstream os;
            os << "Z/B = " << sq.group().to_string() << " disagrees with coset counts mod " << enumeration->e;
            return os.str();
        }
        const long free_rank = k - oracle::rank_and_minor(m, k, m_cols).first;
        if (sq.group().rank != free_rank) return "free rank disagrees with the rank of M";
        for (std::size_t g = 0; g < sq.num_generators(); ++g) {
            const auto coords = sq.project(sq.lifts()[g]);
            for (std::size_t h = 0; h < coords.size(); ++h) {
                const Integer expect = h == g ? 1 : 0;
                const Integer& order = sq.orders()[h];
                const Integer diff = coords[h] - expect;
                if (order.is_zero() ? !diff.is_zero() : !hml::floor_mod(diff, order).is_zero()) {
                    return "projection of a generator lift is not a unit vector";
                }
            }
        }
        for (const auto& col : den.columns()) {
            const auto coords = sq.project(col);
            for (std::size_t h = 0; h < coords.size(); ++h) {
                const Integer& order = sq.orders()[h];
                if (order.is_zero() ? !coords[h].is_zero() : !hml::floor_mod(coords[h], order).is_zero()) {
                    return "a denominator vector projects to a nonzero class";
                }
            }
        }
        return std::nullopt;
    }
    return "no admissible case drawn in 20 attempts";
}

inline std::optional<std::string> run_case(std::uint64_t seed, int index) {
    hml::Rng rng(seed + static_cast<std::uint64_t>(index) * 0x9E3779B97F4A7C15ull);
    switch (index % 5) {
        case 0: return square_zero(rng);
        case 1: return coboundary_is_dual(rng);
        case 2: return total_square_zero(rng);
        case 3: return smith_unimodular(rng);
        default: return subquotient_cosets(rng);
    }
}

}  // namespace props
