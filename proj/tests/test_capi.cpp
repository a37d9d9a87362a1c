#include <gtest/gtest.h>

#include <memory>
#include <string>

#include "homeology/homeology.h"

namespace {

struct Free {
    void operator()(hml_complex* k) const { hml_complex_free(k); }
};
using Handle = std::unique_ptr<hml_complex, Free>;

Handle shape(const char* name, int n) {
    hml_complex* k = nullptr;
    EXPECT_EQ(hml_complex_shape(name, n, &k), HML_OK) << hml_last_error();
    return Handle(k);
}

std::string take(char* s) {
    std::string out = s ? s : "";
    hml_string_free(s);
    return out;
}

std::string compute(const hml_complex* k, const char* what, bool reduced = false, hml_format f = HML_FORMAT_JSON) {
    char* out = nullptr;
    EXPECT_EQ(hml_compute(k, what, "z", reduced, 0, 2, f, &out), HML_OK) << hml_last_error();
    return take(out);
}

}  // namespace

TEST(CApi, ShapesRoundTrip) {
    const Handle s = shape("boundary", 3);
    char* text = nullptr;
    ASSERT_EQ(hml_complex_to_json(s.get(), &text), HML_OK);
    hml_complex* back = nullptr;
    ASSERT_EQ(hml_complex_from_json(text, &back), HML_OK);
    hml_string_free(text);
    const Handle b(back);
    EXPECT_EQ(compute(b.get(), "cohomeology"), compute(s.get(), "cohomeology"));
    EXPECT_EQ(hml_complex_dim(b.get()), 2);
    EXPECT_EQ(hml_complex_euler(b.get()), 2);
}

TEST(CApi, StatusCodes) {
    hml_complex* k = nullptr;
    EXPECT_EQ(hml_complex_shape("klein", 0, &k), HML_ERR_INVALID_INPUT);
    EXPECT_EQ(hml_complex_shape("cycle", 2, &k), HML_ERR_INVALID_INPUT);
    EXPECT_EQ(hml_complex_from_json("{\"vertices\": [\"a\"], \"facets\": [[\"b\"]]}", &k), HML_ERR_INVALID_INPUT);
    EXPECT_EQ(hml_complex_from_json("[1, 2", &k), HML_ERR_PARSE);
    EXPECT_NE(std::string(hml_last_error()).find("column"), std::string::npos);
    EXPECT_EQ(hml_complex_from_json(nullptr, &k), HML_ERR_NULL_ARGUMENT);
    EXPECT_STREQ(hml_status_name(HML_ERR_NON_ORIENTABLE), "non-orientable");

    const Handle d = shape("simplex", 2);
    hml_complex* out = nullptr;
    EXPECT_EQ(hml_subdivide(d.get(), "[\"0\", \"5\"]", nullptr, &out), HML_ERR_INVALID_INPUT);
    EXPECT_EQ(hml_subdivide(d.get(), "[\"0\", \"1\"]", "1", &out), HML_ERR_LABEL_COLLISION);
    const Handle b = shape("boundary", 2);
    EXPECT_EQ(hml_subdivide(b.get(), "[\"0\", \"1\", \"2\"]", nullptr, &out), HML_ERR_NOT_IN_COMPLEX);
    char* s = nullptr;
    EXPECT_EQ(hml_compute(d.get(), "page", "z", 0, 0, 0, HML_FORMAT_JSON, &s), HML_ERR_INVALID_INPUT);
    EXPECT_EQ(hml_compute(d.get(), "links", "z", 0, 0, 3, HML_FORMAT_JSON, &s), HML_ERR_INVALID_INPUT);
}

TEST(CApi, ErrorsAreThreadLocalAndCleared) {
    hml_complex* k = nullptr;
    EXPECT_NE(hml_complex_from_json("{", &k), HML_OK);
    EXPECT_STRNE(hml_last_error(), "");
    const Handle p = shape("point", 0);
    EXPECT_STREQ(hml_last_error(), "");
}

TEST(CApi, ConstructionsAndChecks) {
    const Handle c = shape("cycle", 3);
    hml_complex* t = nullptr;
    ASSERT_EQ(hml_product(c.get(), c.get(), &t), HML_OK);
    const Handle torus(t);
    const std::string table = compute(torus.get(), "cohomeology", false, HML_FORMAT_MARKDOWN);
    EXPECT_NE(table.find("| 1 | Z^2 |"), std::string::npos) << table;

    char* rep = nullptr;
    int passed = 0;
    ASSERT_EQ(hml_check("kunneth-product", c.get(), c.get(), nullptr, 0, &rep, &passed), HML_OK);
    EXPECT_EQ(passed, 1);
    hml_string_free(rep);
    ASSERT_EQ(hml_check("euler", torus.get(), nullptr, nullptr, 0, &rep, &passed), HML_OK);
    EXPECT_EQ(passed, 1);
    hml_string_free(rep);
    EXPECT_EQ(hml_check("kunneth-join", c.get(), nullptr, nullptr, 0, &rep, &passed), HML_ERR_INVALID_INPUT);

    const Handle rp2 = shape("rp2", 0);
    EXPECT_EQ(hml_check("kunneth-product", rp2.get(), c.get(), nullptr, 0, &rep, &passed), HML_ERR_HYPOTHESIS);

    const Handle d = shape("simplex", 2);
    ASSERT_EQ(hml_check("glue", d.get(), d.get(), "{\"vertex_map\": {\"0\": \"0\"}}", 0, &rep, &passed), HML_OK);
    EXPECT_EQ(passed, 1);
    EXPECT_NE(take(rep).find("c(ii)"), std::string::npos);

    hml_complex* w = nullptr;
    ASSERT_EQ(hml_glue(d.get(), d.get(), "{\"vertex_map\": {\"0\": \"0\", \"1\": \"1\"}}", &w), HML_OK);
    const Handle edge_wedge(w);
    EXPECT_EQ(hml_complex_num_faces(edge_wedge.get()), 11);

    hml_complex* u = nullptr;
    ASSERT_EQ(hml_disjoint_union(d.get(), d.get(), &u), HML_OK);
    const Handle two(u);
    EXPECT_EQ(hml_complex_euler(two.get()), 2);

    hml_complex* j = nullptr;
    const Handle s0 = shape("sphere0", 0);
    ASSERT_EQ(hml_join(s0.get(), s0.get(), &j), HML_OK);
    const Handle square(j);
    EXPECT_EQ(compute(square.get(), "cohomeology"), compute(c.get(), "cohomeology"));
}

TEST(CApi, RandomSubdivisionIsSeeded) {
    const Handle d = shape("boundary", 3);
    hml_complex *a = nullptr, *b = nullptr;
    ASSERT_EQ(hml_subdivide_random(d.get(), 4, 9, &a), HML_OK);
    ASSERT_EQ(hml_subdivide_random(d.get(), 4, 9, &b), HML_OK);
    const Handle ha(a), hb(b);
    char *ta = nullptr, *tb = nullptr;
    hml_complex_to_json(a, &ta);
    hml_complex_to_json(b, &tb);
    EXPECT_EQ(take(ta), take(tb));
    EXPECT_EQ(compute(a, "cohomeology"), compute(d.get(), "cohomeology"));

    hml_complex* r = nullptr;
    ASSERT_EQ(hml_complex_random(7, 2, 0.4, 123, &r), HML_OK);
    const Handle hr(r);
    EXPECT_EQ(hml_complex_dim(r), 2);
    EXPECT_EQ(hml_complex_random(3, 3, 0.5, 1, &r), HML_ERR_INVALID_INPUT);
}

TEST(CApi, Blocks) {
    const Handle c = shape("cycle", 3);
    char* out = nullptr;
    ASSERT_EQ(hml_blocks_product(c.get(), c.get(), &out), HML_OK);
    const std::string blocked = take(out);
    EXPECT_NE(blocked.find("\"blocks\""), std::string::npos);

    const Handle d = shape("simplex", 2);
    ASSERT_EQ(hml_blocks_subdivision(d.get(), "[\"0\", \"1\", \"2\"]", "c", &out), HML_OK);
    const std::string sub = take(out);
    EXPECT_NE(sub.find("\"c\""), std::string::npos);

    const char* trivial =
        "{\"blocks\": [{\"faces\": [[\"0\"]]}, {\"faces\": [[\"1\"]]}, {\"faces\": [[\"0\", \"1\"]]}]}";
    const Handle e = shape("simplex", 1);
    ASSERT_EQ(hml_blocks_validate(e.get(), trivial, &out), HML_OK) << hml_last_error();
    EXPECT_NE(take(out).find("\"valid\": true"), std::string::npos);
    ASSERT_EQ(hml_blocks_compute(e.get(), trivial, "chain", "z", 0, HML_FORMAT_JSON, &out), HML_OK);
    EXPECT_NE(take(out).find("\"boundary\""), std::string::npos);
    ASSERT_EQ(hml_blocks_compute(e.get(), trivial, "cohomeology", "z", 0, HML_FORMAT_JSON, &out), HML_OK);
    EXPECT_EQ(take(out), compute(e.get(), "cohomeology"));

    const char* not_pure = "{\"blocks\": [{\"faces\": [[\"0\", \"1\"], [\"2\"]]}]}";
    EXPECT_EQ(hml_blocks_validate(d.get(), not_pure, &out), HML_ERR_NOT_PURE);
    const char* outside = "{\"blocks\": [{\"faces\": [[\"0\", \"x\"]]}]}";
    EXPECT_EQ(hml_blocks_validate(d.get(), outside, &out), HML_ERR_NOT_SUBCOMPLEX);
}

TEST(CApi, InducedMaps) {
    const Handle path = shape("path", 2);
    const Handle edge = shape("path", 1);
    char* out = nullptr;
    ASSERT_EQ(hml_induced(path.get(), edge.get(), "{\"vertex_map\": {\"0\": \"0\", \"1\": \"1\", \"2\": \"0\"}}", "z", 0, 0,
                          &out),
              HML_OK)
        << hml_last_error();
    EXPECT_NE(take(out).find("\"1,1\""), std::string::npos);
    EXPECT_EQ(hml_induced(path.get(), edge.get(), "{\"vertex_map\": {\"0\": \"0\", \"1\": \"0\", \"2\": \"0\"}}", "z", 0, 0,
                          &out),
              HML_ERR_DEGENERATE_MAP);
    EXPECT_EQ(hml_induced(path.get(), edge.get(), "{\"vertex_map\": {\"0\": \"0\"}}", "z", 0, 0, &out),
              HML_ERR_INVALID_INPUT);
}
