// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "homeology/blocks.hpp"
#include "homeology/chain.hpp"
#include "homeology/checks.hpp"
#include "homeology/components.hpp"
#include "homeology/corpus.hpp"
#include "homeology/error.hpp"
#include "homeology/io.hpp"
#include "homeology/maps.hpp"
#include "homeology/spectral.hpp"
#include "oracles.hpp"
#include "property_suite.hpp"

using namespace hml;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Records the first failure; later checks still run so the detail line counts them.
struct Tally {
    int checked = 0;
    int failed = 0;
    std::string first;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok) {
            if (failed == 0) first = what;
            ++failed;
        }
    }
    Outcome outcome(const std::string& summary) const {
        if (failed == 0) return {true, summary + " (" + std::to_string(checked) + " checks)"};
        return {false, std::to_string(failed) + "/" + std::to_string(checked) + " failed; first: " + first};
    }
};

BigradedTable table_of(std::initializer_list<std::pair<Bidegree, AbelianGroup>> cells) {
    BigradedTable t;
    for (const auto& [pq, g] : cells) t.set(pq.first, pq.second, g);
    return t;
}

const AbelianGroup Z(1);

SimplicialComplex named(const std::string& name) {
    for (auto& c : named_corpus()) {
        if (c.name == name) return c.complex;
    }
    throw Error(ErrorKind::Internal, "no corpus entry " + name);
}

std::string describe(const std::string& name, const BigradedTable& got, const BigradedTable& want) {
    return name + ": got " + table_summary(got) + ", expected " + table_summary(want);
}

Outcome disk_sphere_tables() {
    Tally t;
    for (int n = 1; n <= 4; ++n) {
        const auto disk = shapes::simplex(n);
        const auto sphere = shapes::simplex_boundary(n + 1);
        const auto want_disk = table_of({{{n, n}, Z}});
        const auto want_sphere = table_of({{{0, n}, Z}, {{n, n}, Z}});
        for (bool homological : {false, true}) {
            const auto d = homological ? homeology(disk) : cohomeology(disk);
            const auto s = homological ? homeology(sphere) : cohomeology(sphere);
            const std::string kind = homological ? "homeology " : "cohomeology ";
            t.expect(d == want_disk, kind + describe("D" + std::to_string(n), d, want_disk));
            t.expect(s == want_sphere, kind + describe("S" + std::to_string(n), s, want_sphere));
        }
    }
    return t.outcome("D^n and S^n for n=1..4, both engines");
}

Outcome convergence() {
    Tally t;
    for (const auto& c : full_corpus()) {
        const GradedGroup total = SpectralSequence(build_N(c.complex, false)).total();
        const GradedGroup h = cohomology(c.complex);
        for (int n = -1; n <= c.complex.dim() + 1; ++n) {
            const AbelianGroup a = total.count(n) ? total.at(n) : AbelianGroup();
            const AbelianGroup b = h.count(n) ? h.at(n) : AbelianGroup();
            t.expect(a == b, c.name + " degree " + std::to_string(n) + ": total " + a.to_string() + " vs H^* " + b.to_string());
        }
        const GradedGroup reduced = SpectralSequence(build_N(c.complex, true)).total();
        AbelianGroup sum;
        for (const auto& [n, g] : reduced) sum = direct_sum(sum, g);
        t.expect(sum == Z, c.name + ": reduced total is " + sum.to_string());
    }
    return t.outcome("total cohomology = H^*(K), reduced total = Z on named + 20 random complexes");
}

Outcome pl_invariance() {
    Tally t;
    std::uint64_t seed = 7;
    for (const auto& c : full_corpus()) {
        const InvarianceReport r = verify_invariance(c.complex, 5, seed++);
        t.expect(r.pass && r.steps == 5, c.name + ": " + r.failure);
    }
    return t.outcome("four tables constant under 5 random stellar subdivisions");
}

Outcome euler_identity() {
    Tally t;
    for (const auto& c : full_corpus()) {
        const CheckReport r = check_euler(c.complex);
        t.expect(r.pass, c.name + ": " + r.lhs + " vs " + r.rhs);
    }
    return t.outcome("alternating rank sum = chi on the full corpus");
}

Outcome component_count() {
    Tally t;
    int enumerated = 0;
    int brute = 0;
    for (const auto& c : full_corpus()) {
        const CheckReport r = check_components(c.complex, 64);
        t.expect(r.pass, c.name + ": " + r.lhs + " vs " + r.rhs);
        if (c.complex.num_faces() <= 64) {
            ++enumerated;
            if (auto exhaustive = oracle::brute_force_components(c.complex)) {
                ++brute;
                std::vector<long> by_dim(static_cast<std::size_t>(c.complex.dim() + 1), 0);
                for (const auto& comp : *exhaustive) ++by_dim[static_cast<std::size_t>(comp.dim())];
                const BigradedTable tab = cohomeology(c.complex);
                for (int n = 0; n <= c.complex.dim(); ++n) {
                    t.expect(by_dim[static_cast<std::size_t>(n)] == tab.at(n, n).rank,
                             c.name + ": exhaustive search finds " + std::to_string(by_dim[static_cast<std::size_t>(n)]) +
                                 " components of dimension " + std::to_string(n));
                }
                t.expect(exhaustive->size() == completely_connected_components(c.complex).size(),
                         c.name + ": exhaustive and characterized enumerations differ in size");
            }
        }
    }
    return t.outcome("rank H^{n,n} = component count, torsion-free; enumeration on " + std::to_string(enumerated) +
                     " complexes with <= 64 faces, subcomplex-exhaustive on " + std::to_string(brute));
}

Outcome kunneth() {
    Tally t;
    const std::vector<std::pair<std::string, std::string>> joins = {
        {"S0", "S0"}, {"S0", "S1"}, {"point", "S1"}, {"D1", "S0"}, {"I3", "S0"}, {"C4", "S0"}, {"S1", "S1"}, {"S0", "S2"},
        {"D2", "point"}, {"wedge_D2_D2", "S0"}};
    for (const auto& [a, b] : joins) {
        const CheckReport r = check_kunneth_join(named(a), named(b));
        t.expect(r.pass, "join " + a + "*" + b + ": " + r.lhs + " vs " + r.rhs);
    }
    const auto s1 = shapes::cycle(3);
    const CheckReport torus = check_kunneth_product(s1, s1);
    const auto want = table_of({{{0, 2}, Z}, {{1, 2}, AbelianGroup(2)}, {{2, 2}, Z}});
    t.expect(torus.pass, "S1 x S1: " + torus.lhs + " vs " + torus.rhs);
    t.expect(torus.lhs == table_summary(want), "S1 x S1 table is " + torus.lhs);
    const std::vector<std::pair<std::string, std::string>> products = {
        {"D1", "S1"}, {"S0", "S1"}, {"D1", "D1"}, {"D2", "S0"}, {"I3", "D1"}, {"S0", "S0"}};
    for (const auto& [a, b] : products) {
        const CheckReport r = check_kunneth_product(named(a), named(b));
        t.expect(r.pass, "product " + a + "x" + b + ": " + r.lhs + " vs " + r.rhs);
    }
    return t.outcome("join form on 10 torsion-free pairs incl. S0*S0; product form on 7 pairs incl. S1xS1");
}

Outcome block_equivalence() {
    Tally t;
    const std::vector<std::string> names = {"D1", "D2", "S1", "S2", "I3", "C4", "torus", "moebius", "RP2", "wedge_D2_D2"};
    Rng rng(99);
    for (const auto& name : names) {
        const auto k = named(name);
        const BigradedTable base = cohomeology(k);
        const BigradedTable base_h = homeology(k);
        const BlockComplex trivial = trivial_block_complex(k);
        t.expect(table_from_filtered(block_N(trivial, false), {}, 2) == base, name + ": trivial blocks");
        t.expect(table_from_filtered(block_N_dual(trivial, false), {}, 2) == base_h, name + ": trivial blocks, homeology");
        t.expect(table_from_filtered(block_N(trivial, true), {}, 2) == cohomeology(k, {}, true), name + ": trivial blocks, reduced");

        const Simplex sigma = random_positive_face(k, rng);
        const BlockedComplex sub = subdivision_block_complex(k, sigma, fresh_label(k));
        t.expect(table_from_filtered(block_N(sub.blocks, false), {}, 2) == base, name + ": subdivision blocks at " + k.to_string(sigma));
        t.expect(table_from_filtered(block_N_dual(sub.blocks, false), {}, 2) == base_h, name + ": subdivision blocks, homeology");
        t.expect(cohomeology(sub.complex) == base, name + ": subdivided complex");
    }
    const std::vector<std::pair<std::string, std::string>> products = {
        {"D1", "D1"}, {"S1", "D1"}, {"S1", "S1"}, {"S0", "D2"}, {"I3", "S0"},
        {"point", "S2"}, {"D1", "S0"}, {"C4", "point"}, {"S0", "S0"}, {"D2", "D1"}};
    for (const auto& [a, b] : products) {
        const BlockedComplex prod = product_block_complex(named(a), named(b));
        const BigradedTable direct = cohomeology(prod.complex);
        t.expect(table_from_filtered(block_N(prod.blocks, false), {}, 2) == direct, a + "x" + b + ": product blocks");
        t.expect(table_from_filtered(block_N_dual(prod.blocks, false), {}, 2) == homeology(prod.complex),
                 a + "x" + b + ": product blocks, homeology");
    }
    return t.outcome("trivial and subdivision blocks on 10 complexes, product blocks on 10 pairs");
}

Outcome collapse() {
    Tally t;
    std::vector<NamedComplex> cases;
    for (int n = 1; n <= 3; ++n) {
        cases.push_back({"S" + std::to_string(n), shapes::simplex_boundary(n + 1)});
        cases.push_back({"D" + std::to_string(n), shapes::simplex(n)});
    }
    cases.push_back({"cylinder", shapes::cylinder()});
    for (const auto& c : cases) {
        const int n = c.complex.dim();
        const BigradedTable tab = cohomeology(c.complex);
        const GradedGroup h = cohomology(c.complex);
        for (const auto& [pq, g] : tab.cells) {
            t.expect(pq.second >= n, c.name + ": nonzero cell below the top row at " + std::to_string(pq.first) + "," +
                                         std::to_string(pq.second));
        }
        for (int p = 0; p <= n; ++p) {
            const AbelianGroup want = h.count(n - p) ? h.at(n - p) : AbelianGroup();
            t.expect(tab.at(p, n) == want, c.name + ": H^{" + std::to_string(p) + "," + std::to_string(n) + "} = " +
                                               tab.at(p, n).to_string() + ", H^" + std::to_string(n - p) + " = " + want.to_string());
        }
    }
    return t.outcome("S^n, D^n (n=1..3) and the cylinder collapse onto row q=n with H^{p,n} = H^{n-p}");
}

Outcome reduced_top() {
    Tally t;
    const AbelianGroup cone = cohomeology(shapes::cone3_triangle(), {}, true).at(2, 2);
    const AbelianGroup wedge = cohomeology(shapes::suspension_wedge(), {}, true).at(2, 2);
    t.expect(cone == Z, "C3 of the triangle: " + cone.to_string());
    t.expect(wedge == AbelianGroup(2), "wedge of suspensions: " + wedge.to_string());
    return t.outcome("reduced (2,2): C3 dDelta^2 = Z, S dDelta^2 v S dDelta^2 = Z^2");
}

Outcome functoriality() {
    Tally t;
    Rng rng(314);
    std::vector<SimplicialComplex> sources = {shapes::cycle(6), shapes::path(4), shapes::torus(), named("SS1_v_SS1")};
    for (int i = 0; i < 4; ++i) sources.push_back(random_corpus(17 + static_cast<std::uint64_t>(i), 1).front().complex);
    for (const auto& k : sources) {
        const SimplicialMap g = oracle::random_quotient_map(k, rng, 2);
        const SimplicialMap f = oracle::random_quotient_map(g.target, rng, 2);
        const SimplicialMap fg = compose(f, g);
        for (bool reduced : {false, true}) {
            const auto star_fg = induced_on_cohomeology(fg, {}, reduced);
            const auto star = compose(induced_on_cohomeology(g, {}, reduced), induced_on_cohomeology(f, {}, reduced));
            t.expect(maps_equal(star_fg, star), "(fg)^* != g^* f^* on " + k.to_string());
            const auto lower_fg = induced_on_homeology(fg, {}, reduced);
            const auto lower = compose(induced_on_homeology(f, {}, reduced), induced_on_homeology(g, {}, reduced));
            t.expect(maps_equal(lower_fg, lower), "(fg)_* != f_* g_* on " + k.to_string());
        }
    }
    for (const auto& c : named_corpus()) {
        const SimplicialMap id = SimplicialMap::identity(c.complex);
        t.expect(is_identity(induced_on_cohomeology(id)), c.name + ": identity^* is not the identity");
        t.expect(is_identity(induced_on_homeology(id)), c.name + ": identity_* is not the identity");
    }
    const SimplicialMap fold =
        SimplicialMap::from_labels(shapes::path(2), shapes::path(1), {{"0", "0"}, {"1", "1"}, {"2", "0"}});
    t.expect(is_isomorphism_at(induced_on_cohomeology(fold), 1, 1), "fold is not an isomorphism on H^{1,1}");
    t.expect(is_isomorphism_at(induced_on_homeology(fold), 1, 1), "fold is not an isomorphism on H_{1,1}");
    return t.outcome("composition on 8 random map pairs, identities on the named corpus, fold I2->I1 iso at (1,1)");
}

Outcome glue_cases() {
    Tally t;
    const auto d2 = shapes::simplex(2);
    const CheckReport wedge = check_glue(d2, d2, {{"0", "0"}});
    t.expect(wedge.pass, "wedge: " + wedge.lhs + " vs " + wedge.rhs);
    t.expect(!wedge.notes.empty() && wedge.notes.front().rfind("case c(ii)", 0) == 0, "wedge case: " + wedge.notes.front());
    t.expect(cohomeology(glue(d2, d2, {{"0", "0"}}).complex).at(0, 1) == Z, "wedge lacks Z at (0,1)");
    const CheckReport edge = check_glue(d2, d2, {{"0", "0"}, {"1", "1"}});
    t.expect(edge.pass, "edge wedge: " + edge.lhs + " vs " + edge.rhs);
    const auto s1 = shapes::simplex_boundary(2);
    const std::vector<std::tuple<std::string, SimplicialComplex, SimplicialComplex, std::map<std::string, std::string>>> more = {
        {"D2 v S1", d2, s1, {{"0", "0"}}},
        {"S1 v S1", s1, s1, {{"0", "0"}}},
        {"D3 v D3 along a triangle", shapes::simplex(3), shapes::simplex(3), {{"0", "0"}, {"1", "1"}, {"2", "2"}}},
        {"D1 v D2 along an edge", shapes::simplex(1), d2, {{"0", "0"}, {"1", "1"}}},
    };
    std::string cases = "wedge " + wedge.notes.front() + ", edge wedge " + edge.notes.front();
    for (const auto& [name, k, l, id] : more) {
        const CheckReport r = check_glue(k, l, id);
        t.expect(r.pass, name + ": " + r.lhs + " vs " + r.rhs + " (" + r.notes.front() + ")");
    }
    return t.outcome(cases);
}

Outcome property_suite() {
    Tally t;
    std::map<int, int> per_kind;
    for (int i = 0; i < 1000; ++i) {
        const auto failure = props::run_case(20240611, i);
        ++per_kind[i % 5];
        t.expect(!failure, std::string(props::kind_name(i % 5)) + " case " + std::to_string(i) + ": " + failure.value_or(""));
    }
    std::string mix;
    for (const auto& [k, n] : per_kind) mix += std::string(mix.empty() ? "" : ", ") + props::kind_name(k) + " x" + std::to_string(n);
    return t.outcome("1000 randomized cases: " + mix);
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"disk and sphere tables", disk_sphere_tables},
        {"convergence to H^*(K)", convergence},
        {"PL invariance", pl_invariance},
        {"Euler identity", euler_identity},
        {"component count", component_count},
        {"Kunneth formulas", kunneth},
        {"block complex equivalence", block_equivalence},
        {"collapse onto the top row", collapse},
        {"reduced top cell", reduced_top},
        {"functoriality", functoriality},
        {"glue cases", glue_cases},
        {"property suites", property_suite},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failures;
        std::printf("%s %2zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
