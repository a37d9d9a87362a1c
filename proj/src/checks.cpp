#include "homeology/checks.hpp"

#include <algorithm>
#include <set>

#include "homeology/blocks.hpp"
#include "homeology/components.hpp"
#include "homeology/error.hpp"
#include "homeology/io.hpp"
#include "homeology/random.hpp"

namespace hml {

BigradedTable table_sum(const BigradedTable& a, const BigradedTable& b) {
    BigradedTable out = a;
    for (const auto& [pq, g] : b.cells) out.set(pq.first, pq.second, direct_sum(out.at(pq.first, pq.second), g));
    return out;
}

BigradedTable table_tensor(const BigradedTable& a, const BigradedTable& b, int shift) {
    BigradedTable out;
    out.page = a.page;
    for (const auto& [x, g] : a.cells) {
        for (const auto& [y, h] : b.cells) {
            const int p = x.first + y.first + shift;
            const int q = x.second + y.second + shift;
            out.set(p, q, direct_sum(out.at(p, q), group_tensor(g, h)));
        }
    }
    return out;
}

bool table_is_free(const BigradedTable& t) {
    return std::all_of(t.cells.begin(), t.cells.end(), [](const auto& c) { return c.second.is_free(); });
}

CheckReport check_euler(const SimplicialComplex& k) {
    CheckReport r;
    r.check = "euler";
    const BigradedTable t = cohomeology(k);
    long sum = 0;
    for (const auto& [pq, g] : t.cells) sum += ((pq.second - pq.first) % 2 == 0 ? 1 : -1) * g.rank;
    const long chi = euler_characteristic(k);
    r.lhs = std::to_string(sum);
    r.rhs = std::to_string(chi);
    r.pass = sum == chi;
    r.notes.push_back("table: " + table_summary(t));
    return r;
}

CheckReport check_components(const SimplicialComplex& k, std::size_t face_budget) {
    CheckReport r;
    r.check = "components";
    const BigradedTable t = cohomeology(k);
    r.pass = true;
    std::vector<long> counts;
    for (int n = 0; n <= std::max(k.dim(), 0); ++n) {
        const AbelianGroup g = t.at(n, n);
        const long c = count_top_components(k, n);
        counts.push_back(c);
        if (!r.lhs.empty()) {
            r.lhs += ' ';
            r.rhs += ' ';
        }
        r.lhs += "rank H^{" + std::to_string(n) + "," + std::to_string(n) + "}=" + std::to_string(g.rank);
        r.rhs += "count(" + std::to_string(n) + ")=" + std::to_string(c);
        if (g.rank != c) r.pass = false;
        if (!g.is_free()) {
            r.pass = false;
            r.notes.push_back("torsion on the diagonal at n=" + std::to_string(n));
        }
    }
    if (k.num_faces() <= face_budget) {
        const auto comps = completely_connected_components(k, face_budget);
        std::vector<long> by_dim(counts.size(), 0);
        for (const auto& c : comps) {
            if (c.dim() >= 0 && static_cast<std::size_t>(c.dim()) < by_dim.size()) ++by_dim[static_cast<std::size_t>(c.dim())];
        }
        r.notes.push_back("enumerated " + std::to_string(comps.size()) + " maximal completely connected subcomplexes");
        if (by_dim != counts) {
            r.pass = false;
            r.notes.push_back("enumeration disagrees with the fast count");
        }
    } else {
        r.notes.push_back("enumeration skipped: more than " + std::to_string(face_budget) + " faces");
    }
    return r;
}

CheckReport check_kunneth_join(const SimplicialComplex& k, const SimplicialComplex& l) {
    const BigradedTable tk = cohomeology(k, {}, true);
    const BigradedTable tl = cohomeology(l, {}, true);
    if (!table_is_free(tk) || !table_is_free(tl)) {
        throw Error(ErrorKind::Hypothesis, "join Künneth formula needs torsion-free reduced tables");
    }
    CheckReport r;
    r.check = "kunneth-join";
    const BigradedTable predicted = table_tensor(tk, tl, 1);
    const BigradedTable computed = cohomeology(join(k, l), {}, true);
    r.lhs = table_summary(computed);
    r.rhs = table_summary(predicted);
    r.pass = computed == predicted;
    r.notes.push_back("reduced tables; tensor shifted by (1,1)");
    return r;
}

CheckReport check_kunneth_product(const SimplicialComplex& k, const SimplicialComplex& l) {
    const BigradedTable tk = cohomeology(k);
    const BigradedTable tl = cohomeology(l);
    if (!table_is_free(tk) || !table_is_free(tl)) {
        throw Error(ErrorKind::Hypothesis, "product Künneth formula needs torsion-free tables");
    }
    CheckReport r;
    r.check = "kunneth-product";
    const BlockedComplex prod = product_block_complex(k, l);
    const BigradedTable blocks = table_from_filtered(block_N(prod.blocks, false), {}, 2);
    const BigradedTable direct = cohomeology(prod.complex);
    const BigradedTable predicted = table_tensor(tk, tl, 0);
    r.lhs = table_summary(blocks);
    r.rhs = table_summary(predicted);
    r.pass = blocks == predicted && direct == predicted;
    r.notes.push_back("staircase triangulation: " + table_summary(direct));
    return r;
}

const char* glue_case_name(GlueCase c) {
    switch (c) {
        case GlueCase::A: return "a";
        case GlueCase::BI: return "b(i)";
        case GlueCase::BII: return "b(ii)";
        case GlueCase::CI: return "c(i)";
        case GlueCase::CII: return "c(ii)";
    }
    return "?";
}

namespace {

std::vector<int> component_dims_containing(const SimplicialComplex& k, const std::vector<std::string>& sigma,
                                           std::size_t budget) {
    std::vector<int> dims;
    for (const auto& c : completely_connected_components(k, budget)) {
        Simplex s;
        bool inside = true;
        for (const auto& l : sigma) {
            const int v = c.vertex_index(l);
            if (v < 0) {
                inside = false;
                break;
            }
            s.push_back(v);
        }
        std::sort(s.begin(), s.end());
        if (inside && c.contains(s)) dims.push_back(c.dim());
    }
    return dims;
}

bool is_facet(const SimplicialComplex& k, const std::vector<std::string>& sigma) {
    const Simplex s = k.simplex_of(sigma);
    return std::find(k.facets().begin(), k.facets().end(), s) != k.facets().end();
}

}  // namespace

CheckReport check_glue(const SimplicialComplex& k, const SimplicialComplex& l,
                       const std::map<std::string, std::string>& identification, std::size_t face_budget) {
    const GlueResult g = glue(k, l, identification);
    const auto& meet = g.intersection;
    if (meet.facets().size() != 1 || meet.facets().front().empty()) {
        throw Error(ErrorKind::Hypothesis, "K ∩ L is not a single closed simplex: " + meet.to_string());
    }
    const std::vector<std::string> sigma_k = meet.labels_of(meet.facets().front());
    std::map<std::string, std::string> inverse;
    for (const auto& [a, b] : identification) inverse[b] = a;
    std::vector<std::string> sigma_l;
    for (const auto& v : sigma_k) sigma_l.push_back(inverse.at(v));
    const int n = static_cast<int>(sigma_k.size()) - 1;

    std::vector<int> dims = component_dims_containing(k, sigma_k, face_budget);
    for (int d : component_dims_containing(l, sigma_l, face_budget)) dims.push_back(d);
    const bool facet = is_facet(k, sigma_k) || is_facet(l, sigma_l);
    GlueCase c;
    if (std::count(dims.begin(), dims.end(), n) > 0) {
        c = GlueCase::A;
    } else if (std::count(dims.begin(), dims.end(), n + 1) > 0) {
        c = facet ? GlueCase::BI : GlueCase::BII;
    } else {
        c = facet ? GlueCase::CI : GlueCase::CII;
    }

    BigradedTable predicted = table_sum(cohomeology(k), cohomeology(l));
    auto adjust = [&](int p, int q, long delta) {
        AbelianGroup cell = predicted.at(p, q);
        if (cell.rank + delta < 0) throw Error(ErrorKind::Internal, "prediction removes a missing Z summand");
        cell.rank += delta;
        predicted.set(p, q, cell);
    };
    switch (c) {
        case GlueCase::A: adjust(n, n, -1); break;
        case GlueCase::BI:
        case GlueCase::CI: adjust(n - 1, n, 1); break;
        case GlueCase::BII: adjust(n + 1, n + 1, -1); break;
        case GlueCase::CII: adjust(n, n + 1, 1); break;
    }
    CheckReport r;
    r.check = "glue";
    const BigradedTable computed = cohomeology(g.complex);
    r.lhs = table_summary(computed);
    r.rhs = table_summary(predicted);
    r.pass = computed == predicted;
    r.notes.push_back(std::string("case ") + glue_case_name(c) + ", sigma of dimension " + std::to_string(n));
    return r;
}

BigradedTable default_table_engine(const SimplicialComplex& k, const Coefficients& coeffs, bool reduced,
                                   bool homological) {
    return homological ? homeology(k, coeffs, reduced) : cohomeology(k, coeffs, reduced);
}

namespace {

std::string first_difference(const BigradedTable& a, const BigradedTable& b) {
    std::set<Bidegree> keys;
    for (const auto& [pq, g] : a.cells) keys.insert(pq);
    for (const auto& [pq, g] : b.cells) keys.insert(pq);
    for (const auto& [p, q] : keys) {
        if (!(a.at(p, q) == b.at(p, q))) {
            return "(" + std::to_string(p) + "," + std::to_string(q) + "): " + a.at(p, q).to_string() + " became " +
                   b.at(p, q).to_string();
        }
    }
    return "";
}

}  // namespace

InvarianceReport verify_invariance(const SimplicialComplex& k, int count, std::uint64_t seed, const Coefficients& coeffs,
                                   std::size_t face_budget, const TableEngine& engine) {
    static const char* names[4] = {"cohomeology", "homeology", "reduced cohomeology", "reduced homeology"};
    InvarianceReport rep;
    Rng rng(seed);
    std::vector<BigradedTable> base;
    for (int v = 0; v < 4; ++v) base.push_back(engine(k, coeffs, v >= 2, v % 2 == 1));
    SimplicialComplex cur = k;
    for (int step = 1; step <= count; ++step) {
        const Simplex s = random_positive_face(cur, rng);
        if (s.empty()) {
            rep.log.push_back("step " + std::to_string(step) + ": no face of dimension >= 1, complex unchanged");
            rep.steps = step;
            continue;
        }
        const std::string label = fresh_label(cur);
        const std::string where = cur.to_string(s);
        cur = stellar_subdivide(cur, s, label);
        if (cur.num_faces() > face_budget) {
            throw Error(ErrorKind::Budget, "subdivided complex has " + std::to_string(cur.num_faces()) +
                                               " faces, above the budget of " + std::to_string(face_budget));
        }
        rep.log.push_back("step " + std::to_string(step) + ": subdivide " + where + " with " + label + " (" +
                          std::to_string(cur.num_faces()) + " faces)");
        rep.steps = step;
        for (int v = 0; v < 4; ++v) {
            const BigradedTable t = engine(cur, coeffs, v >= 2, v % 2 == 1);
            if (!(t == base[static_cast<std::size_t>(v)])) {
                rep.pass = false;
                rep.failure = "step " + std::to_string(step) + ": " + names[v] + " " +
                              first_difference(base[static_cast<std::size_t>(v)], t);
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace hml
