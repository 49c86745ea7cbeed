#include <random>

#include <gtest/gtest.h>

#include "svn/closed_form.hpp"
#include "svn/coloring.hpp"

using namespace svn;

TEST(ProperTest, DetectsConflict) {
  const auto p = build_family({FamilyKind::Path, 3});
  EXPECT_TRUE(is_proper(p, {2, {0, 1, 0}}));
  const auto bad = is_proper(p, {2, {0, 0, 1}});
  EXPECT_FALSE(bad);
  ASSERT_TRUE(bad.conflict);
  EXPECT_EQ(*bad.conflict, (Edge{0, 1}));
}

TEST(ProperTest, ArityAndRange) {
  const auto p = build_family({FamilyKind::Path, 3});
  EXPECT_THROW(verify_b_coloring(p, {2, {0, 1}}), ArityMismatch);
  EXPECT_THROW(verify_b_coloring(p, {2, {0, 2, 0}}), InvalidColoring);
  EXPECT_THROW(verify_b_coloring(p, {2, {0, -1, 0}}), InvalidColoring);
}

TEST(BVertexTest, PathP5) {
  // 0-1-2-0-1 on P_5: middle vertex sees both other colors.
  const auto p = build_family({FamilyKind::Path, 5});
  const Coloring c{3, {0, 1, 2, 0, 1}};
  EXPECT_FALSE(is_b_vertex(p, c, 0));
  EXPECT_TRUE(is_b_vertex(p, c, 1));
  EXPECT_TRUE(is_b_vertex(p, c, 2));
  EXPECT_TRUE(is_b_vertex(p, c, 3));
  const auto report = verify_b_coloring(p, c);
  EXPECT_TRUE(report.is_b_coloring());
  EXPECT_EQ(*report.rainbow, (std::vector<Vertex>{3, 1, 2}));
}

TEST(BReportTest, UnusedColorIsMissing) {
  const auto k3 = build_family({FamilyKind::Complete, 3});
  const auto report = verify_b_coloring(k3, {4, {0, 1, 2}});
  EXPECT_TRUE(report.proper);
  EXPECT_EQ(report.missing_colors, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_FALSE(report.is_b_coloring());
}

TEST(BReportTest, ImproperIsNotBColoring) {
  const auto k3 = build_family({FamilyKind::Complete, 3});
  const auto report = verify_b_coloring(k3, {2, {0, 1, 1}});
  EXPECT_FALSE(report.proper);
  EXPECT_FALSE(report.is_b_coloring());
}

TEST(MDegreeTest, Examples) {
  EXPECT_EQ(m_degree(std::vector<std::size_t>{}), 0u);
  EXPECT_EQ(m_degree(std::vector<std::size_t>{0}), 1u);
  EXPECT_EQ(m_degree(std::vector<std::size_t>{3, 3, 3, 3}), 4u);
  EXPECT_EQ(m_degree(std::vector<std::size_t>{5, 1, 1, 1}), 2u);
  EXPECT_EQ(m_degree(build_family({FamilyKind::Path, 5})), 3u);
  EXPECT_EQ(m_degree(build_family({FamilyKind::Path, 4})), 2u);
  EXPECT_EQ(m_degree(build_family({FamilyKind::Star, 6})), 2u);
  EXPECT_EQ(b_upper_bound(build_family({FamilyKind::Complete, 6})), 6u);
}

TEST(MDegreeTest, CoronaShortcutMatchesGraph) {
  for (auto lk : {FamilyKind::Path, FamilyKind::Cycle, FamilyKind::Star, FamilyKind::Complete})
    for (auto rk : {FamilyKind::Path, FamilyKind::Cycle, FamilyKind::Star, FamilyKind::Complete})
      for (int n = std::max(2, minimum_size(lk)); n <= 8; ++n)
        for (int t = minimum_size(rk); t <= 6; ++t) {
          const FamilySpec l{lk, n}, r{rk, t};
          EXPECT_EQ(corona_m_degree(l, r), m_degree(svn_corona(l, r))) << to_string(l) << " " << to_string(r);
        }
}

TEST(FamilyColoringTest, OptimalColoringsVerify) {
  for (auto kind : {FamilyKind::Path, FamilyKind::Cycle, FamilyKind::Star, FamilyKind::Complete})
    for (int size = minimum_size(kind); size <= 12; ++size) {
      const FamilySpec spec{kind, size};
      const auto c = optimal_family_coloring(spec);
      EXPECT_EQ(c.k, family_phi(spec));
      EXPECT_TRUE(verify_b_coloring(build_family(spec), c).is_b_coloring()) << to_string(spec);
    }
}

// A b-vertex of color c sees every other color, so it has degree >= k - 1.
TEST(BReportProperty, BVerticesHaveEnoughNeighbours) {
  std::mt19937 rng(7);
  const auto g = svn_corona(FamilySpec{FamilyKind::Cycle, 5}, FamilySpec{FamilyKind::Path, 3});
  for (int trial = 0; trial < 100; ++trial) {
    const int k = std::uniform_int_distribution<int>(2, 6)(rng);
    Coloring c{k, std::vector<int>(g.order())};
    for (auto& x : c.assignment) x = std::uniform_int_distribution<int>(0, k - 1)(rng);
    const auto report = verify_b_coloring(g, c);
    for (int col = 0; col < k; ++col)
      for (Vertex v : report.b_vertices[col]) {
        EXPECT_EQ(c[v], col);
        EXPECT_GE(g.degree(v) + 1, static_cast<std::size_t>(k));
      }
    if (report.is_b_coloring()) {
      EXPECT_TRUE(report.missing_colors.empty());
      EXPECT_LE(static_cast<std::size_t>(k), b_upper_bound(g));
    }
  }
}
