#include <gtest/gtest.h>

#include "homeology/blocks.hpp"
#include "homeology/corpus.hpp"
#include "homeology/error.hpp"
#include "homeology/random.hpp"
#include "homeology/spectral.hpp"

using namespace hml;

namespace {

ErrorKind failure_kind(const SimplicialComplex& k, const std::vector<BlockSpec>& specs) {
    try {
        validate_block_complex(k, specs);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

std::vector<BlockSpec> trivial_specs(const SimplicialComplex& k) {
    std::vector<BlockSpec> out;
    for (int d = 0; d <= k.dim(); ++d) {
        for (const auto& s : k.faces(d)) out.push_back({{s}, std::nullopt});
    }
    return out;
}

BigradedTable block_table(const BlockComplex& b, bool homological, bool reduced = false) {
    const auto f = homological ? block_N_dual(b, reduced) : block_N(b, reduced);
    return table_from_filtered(f, {}, 2);
}

}  // namespace

TEST(Blocks, TrivialComplexMatchesSimplicial) {
    for (const auto& k : {shapes::simplex(2), shapes::torus(), shapes::projective_plane(), shapes::sphere0()}) {
        const auto b = trivial_block_complex(k);
        EXPECT_EQ(b.size(), static_cast<int>(k.num_faces()));
        EXPECT_EQ(block_table(b, false), cohomeology(k));
        EXPECT_EQ(block_table(b, true), homeology(k));
        EXPECT_EQ(block_table(b, false, true), cohomeology(k, {}, true));
        for (int d = 1; d <= k.dim(); ++d) {
            EXPECT_EQ(block_boundary_matrix(b, d, false).nonzeros(), boundary_matrix(k, d, false).nonzeros());
            EXPECT_TRUE((block_boundary_matrix(b, d - 1, false) * block_boundary_matrix(b, d, false)).is_zero());
        }
    }
}

TEST(Blocks, OrientationFollowsPositiveSimplex) {
    const auto k = shapes::simplex(1);
    auto specs = trivial_specs(k);
    const auto plain = validate_block_complex(k, specs);
    specs.back().positive = std::vector<int>{1, 0};
    const auto flipped = validate_block_complex(k, specs);
    const int edge = 2;
    EXPECT_EQ(plain.blocks()[edge].dim, 1);
    EXPECT_EQ(flipped.blocks()[edge].positive_sign, -1);
    EXPECT_EQ(connecting_coefficient(plain, edge, 0), -connecting_coefficient(flipped, edge, 0));
    EXPECT_EQ(connecting_coefficient(plain, edge, 0), -1);
    EXPECT_EQ(connecting_coefficient(plain, edge, 1), 1);
    EXPECT_EQ(connecting_coefficient(plain, 0, 1), 0);
}

TEST(Blocks, CoarseBlocks) {
    // Δ² as one 2-block over its boundary triangle.
    const auto k = shapes::simplex(2);
    std::vector<BlockSpec> specs;
    for (const auto& s : k.faces(0)) specs.push_back({{s}, std::nullopt});
    for (const auto& s : k.faces(1)) specs.push_back({{s}, std::nullopt});
    specs.push_back({{{0, 1, 2}}, std::nullopt});
    EXPECT_NO_THROW(validate_block_complex(k, specs));
    // A subdivided disk with a single 2-block and a single 1-block per side.
    const auto sd = subdivision_block_complex(k, {0, 1, 2}, "c");
    EXPECT_EQ(sd.blocks.size(), 7);
    EXPECT_EQ(block_table(sd.blocks, false), cohomeology(k));
    EXPECT_EQ(block_table(sd.blocks, false), cohomeology(sd.complex));
}

TEST(Blocks, ProductAndSubdivisionInvariance) {
    Rng rng(21);
    for (const auto& c : named_corpus()) {
        if (c.complex.num_faces() > 40 || c.complex.dim() < 1) continue;
        const Simplex s = random_positive_face(c.complex, rng);
        const auto sd = subdivision_block_complex(c.complex, s, fresh_label(c.complex));
        EXPECT_EQ(block_table(sd.blocks, false), cohomeology(c.complex)) << c.name;
        EXPECT_EQ(block_table(sd.blocks, true), homeology(c.complex)) << c.name;
    }
    const auto p = product_block_complex(shapes::simplex(1), shapes::simplex_boundary(2));
    EXPECT_EQ(p.blocks.size(), 3 * 6);
    EXPECT_EQ(block_table(p.blocks, false), cohomeology(shapes::cylinder()));
    const auto t = product_block_complex(shapes::simplex_boundary(2), shapes::simplex_boundary(2));
    BigradedTable want;
    want.set(0, 2, AbelianGroup(1));
    want.set(1, 2, AbelianGroup(2));
    want.set(2, 2, AbelianGroup(1));
    EXPECT_EQ(block_table(t.blocks, false), want);
}

TEST(Blocks, ValidationErrorKinds) {
    const auto tri = shapes::simplex(2);
    const auto circle = shapes::simplex_boundary(2);
    EXPECT_EQ(failure_kind(circle, {{{{0, 1, 2}}, std::nullopt}}), ErrorKind::NotSubcomplex);
    EXPECT_EQ(failure_kind(tri, {{{}, std::nullopt}}), ErrorKind::InvalidInput);

    const auto mixed = SimplicialComplex::from_facets({"0", "1", "2", "3"}, {{"0", "1", "2"}, {"2", "3"}});
    EXPECT_EQ(failure_kind(mixed, {{{{0, 1, 2}, {2, 3}}, std::nullopt}}), ErrorKind::NotPure);

    EXPECT_EQ(failure_kind(circle, {{{{0, 1}, {0, 2}, {1, 2}}, std::nullopt}}), ErrorKind::HomologyViolation);

    const auto fan = SimplicialComplex::from_facets({"0", "1", "2", "3", "4"}, {{"0", "1", "2"}, {"0", "1", "3"}, {"0", "1", "4"}});
    EXPECT_EQ(failure_kind(fan, {{{{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}, std::nullopt}}), ErrorKind::NonOrientable);

    // Missing the block {1}: vertex 1 lies on the edge's boundary but in no smaller block.
    const auto edge = shapes::simplex(1);
    EXPECT_EQ(failure_kind(edge, {{{{0}}, std::nullopt}, {{{0, 1}}, std::nullopt}}), ErrorKind::PartitionViolation);
    auto dup = trivial_specs(tri);
    dup.push_back({{{0, 1, 2}}, std::nullopt});
    EXPECT_EQ(failure_kind(tri, dup), ErrorKind::PartitionViolation);
    // Simplex claimed by nobody.
    auto missing = trivial_specs(tri);
    missing.pop_back();
    EXPECT_EQ(failure_kind(tri, missing), ErrorKind::PartitionViolation);

    auto bad_positive = trivial_specs(edge);
    bad_positive.back().positive = std::vector<int>{0};
    EXPECT_EQ(failure_kind(edge, bad_positive), ErrorKind::InvalidInput);
}

TEST(Blocks, SpecRoundTrip) {
    const auto sd = subdivision_block_complex(shapes::simplex_boundary(3), {0, 1}, "m");
    const auto specs = block_specs(sd.blocks);
    const auto again = validate_block_complex(sd.complex, specs);
    EXPECT_EQ(again.size(), sd.blocks.size());
    EXPECT_EQ(block_table(again, false), block_table(sd.blocks, false));
}
