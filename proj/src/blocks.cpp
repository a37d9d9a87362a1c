#include "homeology/blocks.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "homeology/chain.hpp"
#include "homeology/error.hpp"

namespace hml {

namespace {

bool simplex_less(const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

std::set<Simplex> closure(const std::vector<Simplex>& faces) {
    std::set<Simplex> out;
    for (const auto& s : faces) {
        const std::size_t m = s.size();
        for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
            Simplex sub;
            for (std::size_t i = 0; i < m; ++i) {
                if (mask & (1ul << i)) sub.push_back(s[i]);
            }
            out.insert(std::move(sub));
        }
    }
    return out;
}

Simplex drop(const Simplex& s, std::size_t i) {
    Simplex f = s;
    f.erase(f.begin() + static_cast<long>(i));
    return f;
}

int incidence(std::size_t position) { return position % 2 == 0 ? 1 : -1; }

bool is_acyclic(const SimplicialComplex& c) {
    for (const auto& [d, g] : homology(c, Coefficients::integers(), true)) {
        if (!g.is_zero()) return false;
    }
    return true;
}

bool is_homology_sphere(const SimplicialComplex& c, int n) {
    for (const auto& [d, g] : homology(c, Coefficients::integers(), true)) {
        if (!(g == (d == n ? AbelianGroup(1) : AbelianGroup()))) return false;
    }
    return true;
}

std::string describe(const SimplicialComplex& k, const Block& b) {
    return "block " + k.to_string(b.positive) + " (dim " + std::to_string(b.dim) + ")";
}

Block make_block(const SimplicialComplex& k, const BlockSpec& spec) {
    if (spec.faces.empty()) throw Error(ErrorKind::InvalidInput, "block with no faces");
    for (const auto& s : spec.faces) {
        if (s.empty() || !std::is_sorted(s.begin(), s.end()) || !k.contains(s)) {
            throw Error(ErrorKind::NotSubcomplex, "block face " + k.to_string(s) + " is not a simplex of the complex");
        }
    }
    Block b;
    const std::set<Simplex> all = closure(spec.faces);
    b.simplices.assign(all.begin(), all.end());
    std::stable_sort(b.simplices.begin(), b.simplices.end(), simplex_less);
    b.dim = static_cast<int>(b.simplices.back().size()) - 1;
    const std::size_t top_size = static_cast<std::size_t>(b.dim) + 1;

    std::vector<Simplex> tops;
    for (const auto& s : b.simplices) {
        if (s.size() == top_size) tops.push_back(s);
    }
    if (closure(tops) != all) {
        throw Error(ErrorKind::NotPure, "block with top simplex " + k.to_string(tops.front()) + " is not pure");
    }

    if (spec.positive) {
        Simplex sorted = *spec.positive;
        std::sort(sorted.begin(), sorted.end());
        if (sorted.size() != top_size || !std::binary_search(tops.begin(), tops.end(), sorted)) {
            throw Error(ErrorKind::InvalidInput, "positive simplex is not a top simplex of its block");
        }
        b.positive = sorted;
        b.positive_sign = permutation_sign(*spec.positive);
        if (b.positive_sign == 0) throw Error(ErrorKind::InvalidInput, "positive simplex repeats a vertex");
    } else {
        b.positive = tops.front();
        b.positive_sign = 1;
    }

    if (!is_acyclic(subcomplex(k, tops))) {
        throw Error(ErrorKind::HomologyViolation, describe(k, b) + " has nonzero reduced homology");
    }

    // Coherent orientation by propagation across shared codimension-one faces.
    std::map<Simplex, std::vector<std::pair<Simplex, int>>> cofaces;
    if (b.dim >= 1) {
        for (const auto& t : tops) {
            for (std::size_t i = 0; i < t.size(); ++i) cofaces[drop(t, i)].push_back({t, incidence(i)});
        }
    }
    std::vector<Simplex> rim;
    for (const auto& [f, list] : cofaces) {
        if (list.size() > 2) {
            throw Error(ErrorKind::NonOrientable, describe(k, b) + " branches at face " + k.to_string(f));
        }
        if (list.size() == 1) rim.push_back(f);
    }
    b.orientation[b.positive] = b.positive_sign;
    std::deque<Simplex> queue{b.positive};
    while (!queue.empty()) {
        const Simplex s = queue.front();
        queue.pop_front();
        const int os = b.orientation.at(s);
        for (std::size_t i = 0; i < s.size() && b.dim >= 1; ++i) {
            const auto& list = cofaces.at(drop(s, i));
            if (list.size() != 2) continue;
            const auto& other = list[0].first == s ? list[1] : list[0];
            const int want = -incidence(i) * other.second * os;
            auto it = b.orientation.find(other.first);
            if (it == b.orientation.end()) {
                b.orientation.emplace(other.first, want);
                queue.push_back(other.first);
            } else if (it->second != want) {
                throw Error(ErrorKind::NonOrientable, describe(k, b) + " is not orientable");
            }
        }
    }
    if (b.orientation.size() != tops.size()) {
        throw Error(ErrorKind::NonOrientable, describe(k, b) + " is not strongly connected");
    }

    if (!is_homology_sphere(subcomplex(k, rim), b.dim - 1)) {
        throw Error(ErrorKind::HomologyViolation, describe(k, b) + " boundary is not a homology sphere");
    }
    return b;
}

// The coefficient from every admissible pair (top simplex of i, codim-one face in j).
std::vector<int> coefficient_choices(const Block& bi, const Block& bj) {
    std::vector<int> out;
    for (const auto& [f, of] : bj.orientation) {
        for (const auto& [s, os] : bi.orientation) {
            if (!std::includes(s.begin(), s.end(), f.begin(), f.end())) continue;
            const std::size_t pos =
                static_cast<std::size_t>(std::mismatch(f.begin(), f.end(), s.begin()).second - s.begin());
            out.push_back(incidence(pos) * os * of);
        }
    }
    return out;
}

}  // namespace

int connecting_coefficient(const BlockComplex& b, int i, int j) {
    const Block& bi = b.blocks()[static_cast<std::size_t>(i)];
    const Block& bj = b.blocks()[static_cast<std::size_t>(j)];
    if (bj.dim != bi.dim - 1) return 0;
    const auto& below = b.below(i);
    if (!std::binary_search(below.begin(), below.end(), j)) return 0;
    const auto choices = coefficient_choices(bi, bj);
    if (choices.empty()) {
        throw Error(ErrorKind::MissingChainSimplex, "no chain simplex of " + b.ambient().to_string(bi.positive) +
                                                        " has a face in " + b.ambient().to_string(bj.positive));
    }
    for (int c : choices) {
        if (c != choices.front()) {
            throw Error(ErrorKind::MissingChainSimplex, "connecting coefficient depends on the chain simplex for " +
                                                            b.ambient().to_string(bi.positive));
        }
    }
    return choices.front();
}

BlockComplex validate_block_complex(const SimplicialComplex& k, const std::vector<BlockSpec>& specs) {
    BlockComplex out;
    out.ambient_ = k;
    for (const auto& spec : specs) out.blocks_.push_back(make_block(k, spec));
    std::stable_sort(out.blocks_.begin(), out.blocks_.end(),
                     [](const Block& a, const Block& b) { return a.dim < b.dim; });
    const int nb = out.size();

    std::vector<std::vector<int>> ids(static_cast<std::size_t>(nb));
    for (int i = 0; i < nb; ++i) {
        for (const auto& s : out.blocks_[static_cast<std::size_t>(i)].simplices) ids[static_cast<std::size_t>(i)].push_back(k.face_id(s));
        std::sort(ids[static_cast<std::size_t>(i)].begin(), ids[static_cast<std::size_t>(i)].end());
    }
    out.below_.resize(static_cast<std::size_t>(nb));
    for (int i = 0; i < nb; ++i) {
        const auto& a = ids[static_cast<std::size_t>(i)];
        for (int j = 0; j < nb; ++j) {
            const auto& c = ids[static_cast<std::size_t>(j)];
            if (j != i && a == c) {
                throw Error(ErrorKind::PartitionViolation,
                            "two blocks consist of the same simplices: " + describe(k, out.blocks_[static_cast<std::size_t>(i)]));
            }
            if (std::includes(a.begin(), a.end(), c.begin(), c.end())) out.below_[static_cast<std::size_t>(i)].push_back(j);
        }
    }

    out.owner_.assign(static_cast<std::size_t>(k.total_ids()), -1);
    for (int i = 0; i < nb; ++i) {
        const Block& b = out.blocks_[static_cast<std::size_t>(i)];
        std::set<int> covered;
        for (int j : out.below_[static_cast<std::size_t>(i)]) {
            if (j == i) continue;
            covered.insert(ids[static_cast<std::size_t>(j)].begin(), ids[static_cast<std::size_t>(j)].end());
        }
        // The interior must be exactly the simplices off the block's boundary.
        std::vector<Simplex> rim;
        for (const auto& [s, o] : b.orientation) {
            for (std::size_t v = 0; v < s.size() && b.dim >= 1; ++v) {
                const Simplex f = drop(s, v);
                int count = 0;
                for (const auto& [t, ot] : b.orientation) count += std::includes(t.begin(), t.end(), f.begin(), f.end());
                if (count == 1) rim.push_back(f);
            }
        }
        std::set<int> rim_ids;
        for (const auto& s : closure(rim)) rim_ids.insert(k.face_id(s));
        for (int id : ids[static_cast<std::size_t>(i)]) {
            const bool interior = !covered.count(id);
            if (interior == static_cast<bool>(rim_ids.count(id))) {
                throw Error(ErrorKind::PartitionViolation,
                            "simplex " + k.to_string(k.face_by_id(id)) +
                                (interior ? " lies on the boundary of " : " lies inside but is claimed by a smaller block of ") +
                                describe(k, b));
            }
            if (!interior) continue;
            if (out.owner_[static_cast<std::size_t>(id)] >= 0) {
                throw Error(ErrorKind::PartitionViolation,
                            "simplex " + k.to_string(k.face_by_id(id)) + " is interior to two blocks");
            }
            out.owner_[static_cast<std::size_t>(id)] = i;
        }
    }
    for (int id = 1; id < k.total_ids(); ++id) {
        if (out.owner_[static_cast<std::size_t>(id)] < 0) {
            throw Error(ErrorKind::PartitionViolation, "simplex " + k.to_string(k.face_by_id(id)) + " lies in no block interior");
        }
    }

    out.boundary_.resize(static_cast<std::size_t>(nb));
    for (int i = 0; i < nb; ++i) {
        for (int j : out.below_[static_cast<std::size_t>(i)]) {
            const int c = connecting_coefficient(out, i, j);
            if (c != 0) out.boundary_[static_cast<std::size_t>(i)].push_back({j, c});
        }
    }
    for (int i = 0; i < nb; ++i) {
        SparseVec dd;
        for (const auto& e : out.boundary_[static_cast<std::size_t>(i)]) {
            dd = axpy(dd, e.value, out.boundary_[static_cast<std::size_t>(e.row)]);
        }
        if (!dd.empty()) {
            throw Error(ErrorKind::HomologyViolation,
                        "block boundary does not square to zero at " + describe(k, out.blocks_[static_cast<std::size_t>(i)]));
        }
    }
    return out;
}

CellComplex block_cells(const BlockComplex& b, bool reduced) {
    CellComplex c;
    c.reduced = reduced;
    c.dims.push_back(-1);
    c.boundary.emplace_back();
    c.below.push_back({0});
    c.names.push_back("()");
    for (int i = 0; i < b.size(); ++i) {
        const Block& blk = b.blocks()[static_cast<std::size_t>(i)];
        c.dims.push_back(blk.dim);
        SparseVec bd;
        if (blk.dim == 0) {
            if (reduced) bd.push_back({0, 1});
        } else {
            for (const auto& e : b.boundary(i)) bd.push_back({e.row + 1, e.value});
        }
        c.boundary.push_back(std::move(bd));
        std::vector<int> below{0};
        for (int j : b.below(i)) below.push_back(j + 1);
        c.below.push_back(std::move(below));
        c.names.push_back(b.ambient().to_string(blk.positive));
    }
    return c;
}

IntMatrix block_boundary_matrix(const BlockComplex& b, int degree, bool reduced) {
    const int lowest = reduced ? -1 : 0;
    int top = lowest;
    for (const auto& blk : b.blocks()) top = std::max(top, blk.dim);
    if (degree < lowest || degree > top) {
        throw Error(ErrorKind::InvalidInput, "block chain degree " + std::to_string(degree) + " out of range");
    }
    const CellComplex cells = block_cells(b, reduced);
    std::vector<int> position(cells.dims.size(), -1);
    std::vector<int> count(static_cast<std::size_t>(top + 2), 0);
    for (std::size_t c = 0; c < cells.dims.size(); ++c) position[c] = count[static_cast<std::size_t>(cells.dims[c] + 1)]++;
    const int rows = degree - 1 >= lowest ? count[static_cast<std::size_t>(degree)] : 0;
    IntMatrix m(rows, count[static_cast<std::size_t>(degree + 1)]);
    for (std::size_t c = 0; c < cells.dims.size(); ++c) {
        if (cells.dims[c] != degree) continue;
        SparseVec col;
        for (const auto& e : cells.boundary[c]) col.push_back({position[static_cast<std::size_t>(e.row)], e.value});
        std::sort(col.begin(), col.end(), [](const Entry& x, const Entry& y) { return x.row < y.row; });
        m.col(position[c]) = std::move(col);
    }
    return m;
}

FilteredComplex block_N(const BlockComplex& b, bool reduced) { return build_N_cells(block_cells(b, reduced)); }

FilteredComplex block_N_dual(const BlockComplex& b, bool reduced) { return dual(block_N(b, reduced)); }

BlockComplex trivial_block_complex(const SimplicialComplex& k) {
    std::vector<BlockSpec> specs;
    for (int id = 1; id < k.total_ids(); ++id) specs.push_back({{k.face_by_id(id)}, k.face_by_id(id)});
    return validate_block_complex(k, specs);
}

BlockedComplex subdivision_block_complex(const SimplicialComplex& k, const Simplex& sigma, const std::string& new_label) {
    SimplicialComplex sub = stellar_subdivide(k, sigma, new_label);
    if (sigma.size() == 1) return {sub, trivial_block_complex(sub)};
    const int w = sub.vertex_index(new_label);
    std::vector<BlockSpec> specs;
    for (int id = 1; id < k.total_ids(); ++id) {
        const Simplex& tau = k.face_by_id(id);
        const Simplex t = translate(k, tau, sub);
        if (!std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end())) {
            specs.push_back({{t}, std::nullopt});
            continue;
        }
        Simplex span = t;
        span.insert(std::lower_bound(span.begin(), span.end(), w), w);
        BlockSpec spec;
        for (const auto& f : sub.faces(static_cast<int>(tau.size()) - 1)) {
            if (std::includes(span.begin(), span.end(), f.begin(), f.end())) spec.faces.push_back(f);
        }
        specs.push_back(std::move(spec));
    }
    BlockComplex blocks = validate_block_complex(sub, specs);
    return {std::move(sub), std::move(blocks)};
}

BlockedComplex product_block_complex(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    SimplicialComplex prod = cartesian_product(k1, k2);
    auto vertex = [&](int a, int b) { return prod.vertex_index(product_label(k1.label(a), k2.label(b))); };
    std::vector<BlockSpec> specs;
    for (int i = 1; i < k1.total_ids(); ++i) {
        const Simplex& s1 = k1.face_by_id(i);
        for (int j = 1; j < k2.total_ids(); ++j) {
            const Simplex& s2 = k2.face_by_id(j);
            std::set<int> cell;
            for (int a : s1) {
                for (int b : s2) cell.insert(vertex(a, b));
            }
            BlockSpec spec;
            for (const auto& f : prod.faces(static_cast<int>(s1.size() + s2.size()) - 2)) {
                if (std::all_of(f.begin(), f.end(), [&](int v) { return cell.count(v) > 0; })) spec.faces.push_back(f);
            }
            // Positive chain simplex: all first-factor steps, then all second-factor steps.
            std::vector<int> path;
            for (int a : s1) path.push_back(vertex(a, s2.front()));
            for (std::size_t b = 1; b < s2.size(); ++b) path.push_back(vertex(s1.back(), s2[b]));
            spec.positive = path;
            specs.push_back(std::move(spec));
        }
    }
    BlockComplex blocks = validate_block_complex(prod, specs);
    return {std::move(prod), std::move(blocks)};
}

std::vector<BlockSpec> block_specs(const BlockComplex& b) {
    std::vector<BlockSpec> out;
    for (const auto& blk : b.blocks()) {
        BlockSpec spec;
        for (const auto& [s, o] : blk.orientation) spec.faces.push_back(s);
        std::vector<int> pos = blk.positive;
        if (blk.positive_sign < 0) std::swap(pos[0], pos[1]);
        spec.positive = pos;
        out.push_back(std::move(spec));
    }
    return out;
}

}  // namespace hml
