#include <gtest/gtest.h>

#include "svn/construct.hpp"
#include "svn/io.hpp"

using namespace svn;

TEST(GraphJson, Schema) {
  const auto g = svn_corona(FamilySpec{FamilyKind::Path, 3}, FamilySpec{FamilyKind::Complete, 1});
  const auto doc = graph_to_json(g);
  EXPECT_EQ(doc["order"], 8);
  EXPECT_EQ(doc["edges"].size(), g.edge_count());
  EXPECT_EQ(doc["edges"][0], (Json{0, 3}));
  EXPECT_EQ(doc["labels"]["3"], "s:0:1");
  EXPECT_EQ(doc["labels"]["7"], "v:2:0");
  EXPECT_EQ(doc["provenance"]["left"], "path:3");
  EXPECT_EQ(doc["provenance"]["right"], "complete:1");
}

TEST(GraphJson, RoundTrip) {
  for (const auto& g : {svn_corona(FamilySpec{FamilyKind::Star, 3}, FamilySpec{FamilyKind::Cycle, 4}),
                        subdivision(build_family({FamilyKind::Complete, 5})), build_family({FamilyKind::Path, 6})}) {
    const auto back = graph_from_json(Json::parse(graph_to_json(g).dump()));
    EXPECT_EQ(back, g);
  }
}

TEST(GraphJson, SubdivisionProvenance) {
  const auto doc = graph_to_json(subdivision(build_family({FamilyKind::Complete, 5})));
  EXPECT_EQ(doc["provenance"]["subdivision"], true);
  EXPECT_FALSE(doc["provenance"].contains("right"));
}

TEST(GraphJson, PlainGraphWithoutLabels) {
  const std::vector<Edge> edges{{1, 0}, {1, 2}};
  const Graph g(3, edges);
  const auto doc = graph_to_json(g);
  EXPECT_TRUE(doc["labels"].empty());
  EXPECT_TRUE(doc["provenance"].empty());
  EXPECT_EQ(doc["edges"], (Json{{0, 1}, {1, 2}}));
  EXPECT_EQ(graph_from_json(doc), g);
}

TEST(GraphJson, Malformed) {
  EXPECT_THROW(graph_from_json(Json{{"edges", Json::array()}}), Error);
  EXPECT_THROW(graph_from_json(Json{{"order", 2}, {"edges", {{0, 5}}}}), Error);
  EXPECT_THROW(graph_from_json(Json{{"order", 2}, {"edges", Json::array()}, {"labels", {{"0", "u:0"}}}}), Error);
  EXPECT_THROW(graph_from_json(Json{{"order", 1}, {"edges", Json::array()}, {"labels", {{"0", "q:0"}}}}), Error);
}

TEST(ColoringJson, RoundTrip) {
  const Coloring c{3, {0, 1, 2, 0}};
  const auto doc = coloring_to_json(c);
  EXPECT_EQ(doc["colors"], 3);
  EXPECT_EQ(doc["assignment"], (Json{0, 1, 2, 0}));
  EXPECT_EQ(coloring_from_json(doc), c);
  EXPECT_THROW(coloring_from_json(Json{{"colors", 3}}), Error);
}

TEST(ReportJson, MirrorsFields) {
  const auto p = build_family({FamilyKind::Path, 5});
  const auto good = report_to_json(verify_b_coloring(p, {3, {0, 1, 2, 0, 1}}));
  EXPECT_TRUE(good["proper"]);
  EXPECT_TRUE(good["is_b_coloring"]);
  EXPECT_EQ(good["rainbow"], (Json{3, 1, 2}));
  EXPECT_TRUE(good["conflict"].is_null());
  const auto bad = report_to_json(verify_b_coloring(p, {3, {0, 0, 2, 0, 1}}));
  EXPECT_FALSE(bad["proper"]);
  EXPECT_EQ(bad["conflict"], (Json{0, 1}));
  EXPECT_TRUE(bad["rainbow"].is_null());
}

TEST(Dot, MarksRainbowAndBVertices) {
  const auto result = construct_coloring({FamilyKind::Path, 10}, {FamilyKind::Path, 3});
  const auto dot = to_dot(result.graph, result.coloring, result.report);
  EXPECT_EQ(dot.rfind("graph \"corona\" {", 0), 0u);
  std::size_t rainbow = 0, pos = 0;
  while ((pos = dot.find("doublecircle", pos)) != std::string::npos) ++rainbow, ++pos;
  EXPECT_EQ(rainbow, 9u);
  EXPECT_NE(dot.find("xlabel=\"×\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"0:1\""), std::string::npos);
  EXPECT_NE(dot.find("fillcolor=\"#"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 10;"), std::string::npos);
}
