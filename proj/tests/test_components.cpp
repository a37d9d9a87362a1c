#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "homeology/components.hpp"
#include "homeology/corpus.hpp"
#include "homeology/error.hpp"
#include "homeology/random.hpp"
#include "homeology/spectral.hpp"
#include "oracles.hpp"

using namespace hml;

namespace {

using FacetSet = std::set<std::vector<std::string>>;

std::multiset<FacetSet> canonical(const std::vector<SimplicialComplex>& comps) {
    std::multiset<FacetSet> out;
    for (const auto& c : comps) {
        FacetSet f;
        for (const auto& s : c.facets()) f.insert(c.labels_of(s));
        out.insert(f);
    }
    return out;
}

std::vector<long> count_by_dim(const std::vector<SimplicialComplex>& comps, int dim) {
    std::vector<long> by(static_cast<std::size_t>(dim + 1), 0);
    for (const auto& c : comps) ++by[static_cast<std::size_t>(c.dim())];
    return by;
}

}  // namespace

TEST(Components, CompleteConnectivity) {
    EXPECT_TRUE(is_completely_connected(shapes::simplex(3)));
    EXPECT_TRUE(is_completely_connected(shapes::edge_wedge()));
    EXPECT_FALSE(is_completely_connected(shapes::wedge(shapes::simplex(2), shapes::simplex(2))));
    EXPECT_FALSE(is_completely_connected(shapes::sphere0()));
    EXPECT_TRUE(is_completely_connected(shapes::cycle(4)));
    EXPECT_FALSE(is_completely_connected(disjoint_union(shapes::simplex(1), shapes::point())));
}

TEST(Components, Maximality) {
    const auto d2 = shapes::simplex(2);
    EXPECT_TRUE(is_maximal_completely_connected(d2, d2));
    EXPECT_FALSE(is_maximal_completely_connected(subcomplex(d2, {{0, 1}}), d2));
    // Edges of the other triangle chain through the wedge point, so one triangle is not maximal.
    const auto w = shapes::wedge(shapes::simplex(2), shapes::simplex(2));
    const auto tri = subcomplex(w, {w.facets()[0]});
    EXPECT_TRUE(is_completely_connected(tri));
    EXPECT_FALSE(is_maximal_completely_connected(tri, w));
}

TEST(Components, KnownExamples) {
    EXPECT_EQ(count_by_dim(completely_connected_components(shapes::sphere0()), 0), (std::vector<long>{2}));
    EXPECT_EQ(count_by_dim(completely_connected_components(shapes::simplex(2)), 2), (std::vector<long>{0, 0, 1}));
    const auto w = shapes::wedge(shapes::simplex(2), shapes::simplex(2));
    EXPECT_EQ(count_by_dim(completely_connected_components(w), 2), (std::vector<long>{0, 0, 2}));
    const auto ep = disjoint_union(shapes::simplex(1), shapes::point());
    EXPECT_EQ(count_by_dim(completely_connected_components(ep), 1), (std::vector<long>{1, 1}));
    EXPECT_EQ(count_top_components(ep, 1), 1);
    EXPECT_EQ(count_top_components(ep, 0), 1);
    EXPECT_EQ(count_top_components(shapes::torus(), 2), 1);
    EXPECT_EQ(count_top_components(shapes::torus(), 1), 0);
}

TEST(Components, BudgetIsEnforced) {
    EXPECT_THROW(completely_connected_components(shapes::torus(), 10), Error);
    try {
        completely_connected_components(shapes::torus(), 10);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Budget);
    }
    EXPECT_NO_THROW(completely_connected_components(shapes::torus(), 64));
}

// Characterized enumeration against exhaustive search over every subcomplex.
TEST(Components, MatchesExhaustiveSearch) {
    Rng rng(29);
    int compared = 0;
    for (int t = 0; t < 150; ++t) {
        RandomComplexParams p;
        p.dim = 1 + static_cast<int>(rng.below(3));
        p.vertices = p.dim + 1 + static_cast<int>(rng.below(3));
        p.density = 0.3 + 0.1 * static_cast<double>(rng.below(4));
        const auto k = random_complex(p, rng);
        const auto brute = oracle::brute_force_components(k, 1u << 16);
        if (!brute) continue;
        ++compared;
        const auto ours = completely_connected_components(k);
        ASSERT_EQ(canonical(ours), canonical(*brute)) << k.to_string();
        for (const auto& c : ours) ASSERT_TRUE(is_maximal_completely_connected(c, k));
        const auto tab = cohomeology(k);
        const auto by = count_by_dim(ours, k.dim());
        for (int n = 0; n <= k.dim(); ++n) {
            ASSERT_EQ(by[static_cast<std::size_t>(n)], tab.at(n, n).rank) << k.to_string() << " n=" << n;
            ASSERT_EQ(count_top_components(k, n), tab.at(n, n).rank);
        }
    }
    EXPECT_GT(compared, 100);
}

// Single-simplex extensions decide maximality: compare with every completely connected superset.
TEST(Components, MaximalityCheckIsExact) {
    Rng rng(43);
    long cases = 0;
    for (int t = 0; t < 60; ++t) {
        RandomComplexParams p;
        p.dim = 1 + static_cast<int>(rng.below(2));
        p.vertices = p.dim + 2 + static_cast<int>(rng.below(2));
        p.density = 0.4 + 0.1 * static_cast<double>(rng.below(4));
        const auto k = random_complex(p, rng);
        const oracle::FaceIndex fx(k);
        const auto subs = oracle::all_subcomplexes(fx, 1u << 14);
        if (!subs) continue;
        std::vector<std::uint64_t> cc;
        for (auto m : *subs) {
            if (m != 0 && oracle::completely_connected(fx, m)) cc.push_back(m);
        }
        for (auto m : cc) {
            const bool literal = std::none_of(cc.begin(), cc.end(), [&](auto big) { return big != m && (m & big) == m; });
            std::vector<Simplex> s;
            for (int i = 0; i < static_cast<int>(fx.faces.size()); ++i) {
                if (oracle::bit(m, i)) s.push_back(fx.faces[static_cast<std::size_t>(i)]);
            }
            ASSERT_EQ(is_maximal_completely_connected(subcomplex(k, s), k), literal) << k.to_string();
            ++cases;
        }
    }
    EXPECT_GT(cases, 1000);
}
