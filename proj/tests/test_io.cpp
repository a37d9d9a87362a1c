#include <gtest/gtest.h>

#include "homeology/corpus.hpp"
#include "homeology/error.hpp"
#include "homeology/io.hpp"

using namespace hml;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

std::string message_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Io, ComplexRoundTrip) {
    for (const auto& c : full_corpus(3, 5)) {
        const Json j = complex_to_json(c.complex);
        EXPECT_EQ(complex_from_json(parse_json(j.dump())), c.complex) << c.name;
    }
    const auto k = complex_from_json(parse_json(R"({"vertices": ["b", "a", "c"], "facets": [["a", "b"], ["c"]]})"));
    EXPECT_EQ(k.labels(), (std::vector<std::string>{"b", "a", "c"}));
    EXPECT_EQ(k.faces(1).size(), 1u);
    EXPECT_EQ(k.faces(0).size(), 3u);
}

TEST(Io, ComplexErrors) {
    EXPECT_EQ(kind_of([] { complex_from_json(parse_json(R"({"facets": []})")); }), ErrorKind::InvalidInput);
    EXPECT_EQ(kind_of([] { complex_from_json(parse_json(R"({"vertices": ["a"], "facets": [["a", "z"]]})")); }),
              ErrorKind::InvalidInput);
    EXPECT_EQ(kind_of([] { complex_from_json(parse_json(R"({"vertices": ["a", "a"], "facets": []})")); }),
              ErrorKind::InvalidInput);
    EXPECT_EQ(kind_of([] { complex_from_json(parse_json(R"({"vertices": [true], "facets": []})")); }), ErrorKind::InvalidInput);
    // Integer labels are read as their decimal text.
    EXPECT_EQ(complex_from_json(parse_json(R"({"vertices": [1, 2], "facets": [[1, 2]]})")).label(1), "2");
    EXPECT_EQ(kind_of([] { complex_from_json(parse_json(R"({"vertices": "a", "facets": []})")); }), ErrorKind::InvalidInput);
}

TEST(Io, ParseErrorPosition) {
    EXPECT_EQ(kind_of([] { parse_json("{\n  \"a\": 1,\n  \"b\": ]\n}", "f.json"); }), ErrorKind::Parse);
    const std::string msg = message_of([] { parse_json("{\n  \"a\": 1,\n  \"b\": ]\n}", "f.json"); });
    EXPECT_NE(msg.find("f.json: line 3, column 8"), std::string::npos) << msg;
    const std::string first = message_of([] { parse_json("x", "in"); });
    EXPECT_NE(first.find("line 1, column 1"), std::string::npos) << first;
    const std::string eof = message_of([] { parse_json("[1,\n", "in"); });
    EXPECT_NE(eof.find("line 2"), std::string::npos) << eof;
}

TEST(Io, GroupsAndTables) {
    const AbelianGroup g(2, {Integer(2), Integer(6)});
    EXPECT_EQ(group_from_json(group_to_json(g)), g);
    EXPECT_EQ(group_from_json(parse_json(R"({"rank": 0, "torsion": [2, 3]})")), AbelianGroup(0, {Integer(6)}));
    EXPECT_EQ(group_from_json(parse_json(R"({"rank": 1, "torsion": ["100000000000000000000000"]})")).torsion.front().to_string(),
              "100000000000000000000000");
    EXPECT_EQ(kind_of([] { group_from_json(parse_json(R"({"rank": -1})")); }), ErrorKind::InvalidInput);

    const BigradedTable t = cohomeology(shapes::projective_plane());
    const BigradedTable back = table_from_json(parse_json(table_to_json(t).dump()));
    EXPECT_EQ(back, t);
    EXPECT_EQ(back.page, t.page);
    EXPECT_EQ(kind_of([] { table_from_json(parse_json(R"({"cells": {"12": {"rank": 1}}})")); }), ErrorKind::InvalidInput);

    GradedGroup h{{0, AbelianGroup(1)}, {1, AbelianGroup(0, {Integer(2)})}};
    const Json gj = graded_to_json(h);
    EXPECT_EQ(gj["1"]["torsion"][0], 2);
}

TEST(Io, TextRendering) {
    BigradedTable t;
    t.set(0, 2, AbelianGroup(1));
    t.set(2, 2, AbelianGroup(1));
    EXPECT_EQ(table_summary(t), "(0,2)=Z (2,2)=Z");
    EXPECT_EQ(table_summary(BigradedTable{}), "0");
    const std::string md = table_to_markdown(t);
    EXPECT_NE(md.find("page 2"), std::string::npos);
    EXPECT_NE(md.find("| Z"), std::string::npos);
    EXPECT_NE(table_to_markdown(BigradedTable{}).find("all cells are zero"), std::string::npos);
    const std::string gm = graded_to_markdown({{0, AbelianGroup(1)}, {1, AbelianGroup(0, {Integer(2)})}});
    EXPECT_NE(gm.find("Z/2"), std::string::npos);
}

TEST(Io, BlocksAndMaps) {
    const auto k = shapes::simplex(1);
    const auto specs = blocks_from_json(k, parse_json(R"({"blocks": [{"faces": [["0"]]}, {"faces": [["1"]]},
        {"faces": [["0", "1"]], "positive": ["1", "0"]}]})"));
    ASSERT_EQ(specs.size(), 3u);
    ASSERT_TRUE(specs[2].positive.has_value());
    EXPECT_EQ(*specs[2].positive, (std::vector<int>{1, 0}));
    const auto again = blocks_from_json(k, blocks_to_json(k, specs));
    ASSERT_EQ(again.size(), 3u);
    EXPECT_EQ(again[2].faces, specs[2].faces);
    EXPECT_EQ(again[2].positive, specs[2].positive);
    EXPECT_EQ(kind_of([&] { blocks_from_json(k, parse_json(R"({"blocks": [{"faces": [["7"]]}]})")); }),
              ErrorKind::NotSubcomplex);
    EXPECT_EQ(kind_of([&] { blocks_from_json(k, parse_json(R"({"blocks": 3})")); }), ErrorKind::InvalidInput);

    const auto vm = vertex_map_from_json(parse_json(R"({"vertex_map": {"a": "b", "c": "b"}})"));
    EXPECT_EQ(vm.size(), 2u);
    EXPECT_EQ(vm.at("c"), "b");
    EXPECT_EQ(kind_of([] { vertex_map_from_json(parse_json(R"({"vertex_map": {"a": [1]}})")); }), ErrorKind::InvalidInput);
}

TEST(Io, Reports) {
    CheckReport r;
    r.check = "euler";
    r.pass = true;
    r.lhs = "2";
    r.rhs = "2";
    r.notes = {"n"};
    const Json j = report_to_json(r);
    EXPECT_EQ(j["check"], "euler");
    EXPECT_EQ(j["pass"], true);
    InvarianceReport inv;
    inv.steps = 2;
    inv.log = {"a", "b"};
    const Json ij = invariance_to_json(inv);
    EXPECT_EQ(ij["steps"], 2);
}
