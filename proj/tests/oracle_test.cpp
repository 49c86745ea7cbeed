#include <random>

#include <gtest/gtest.h>

#include "svn/grid.hpp"
#include "svn/oracle.hpp"

using namespace svn;

TEST(ChromaticTest, SmallGraphs) {
  EXPECT_EQ(exact_chromatic(build_family({FamilyKind::Complete, 6})), 6u);
  EXPECT_EQ(exact_chromatic(build_family({FamilyKind::Cycle, 5})), 3u);
  EXPECT_EQ(exact_chromatic(build_family({FamilyKind::Cycle, 6})), 2u);
  EXPECT_EQ(exact_chromatic(build_family({FamilyKind::Star, 4})), 2u);
  EXPECT_EQ(exact_chromatic(build_family({FamilyKind::Complete, 1})), 1u);
  EXPECT_EQ(exact_chromatic(Graph{}), 0u);
}

TEST(ChromaticTest, Petersen) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  EXPECT_EQ(exact_chromatic(Graph(10, edges)), 3u);
}

TEST(ChromaticTest, BudgetExceededOnLargeGraph) {
  SearchBudget budget;
  budget.max_vertices = 5;
  try {
    exact_chromatic(build_family({FamilyKind::Cycle, 7}), budget);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.lower(), 0u);
    EXPECT_EQ(e.upper(), 7u);
  }
}

TEST(BChromaticTest, BaseFamilies) {
  for (auto kind : all_kinds)
    for (int size = std::max(2, minimum_size(kind)); size <= 6; ++size) {
      const FamilySpec spec{kind, size};
      EXPECT_EQ(exact_b_chromatic(build_family(spec)).phi, static_cast<std::size_t>(family_phi(spec)))
          << to_string(spec);
    }
}

TEST(BChromaticTest, SubdivisionOfK5HasFiveColors) {
  const auto result = exact_b_chromatic(subdivision(build_family({FamilyKind::Complete, 5})));
  EXPECT_EQ(result.phi, 5u);
  EXPECT_EQ(result.chi, 2u);
}

TEST(BChromaticTest, NoFourColoringOfC4) {
  const auto c4 = build_family({FamilyKind::Cycle, 4});
  EXPECT_FALSE(exists_b_coloring(c4, 3));
  EXPECT_TRUE(exists_b_coloring(c4, 2));
  EXPECT_FALSE(exists_b_coloring(c4, 0));
}

// b-colorability is not monotone in k: the cube Q_3 has b-colorings with 2
// and 4 colors but none with 3.
TEST(BChromaticTest, CubeIsNotMonotone) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 8; ++v)
    for (Vertex bit = 1; bit < 8; bit <<= 1)
      if (v < (v ^ bit)) edges.emplace_back(v, v ^ bit);
  const Graph cube(8, edges);
  EXPECT_TRUE(exists_b_coloring(cube, 2));
  EXPECT_FALSE(exists_b_coloring(cube, 3));
  EXPECT_TRUE(exists_b_coloring(cube, 4));
  EXPECT_EQ(exact_b_chromatic(cube).phi, 4u);
}

TEST(BChromaticTest, RefusesOversizedGraph) {
  const auto g = svn_corona(FamilySpec{FamilyKind::Complete, 5}, FamilySpec{FamilyKind::Path, 3});
  EXPECT_THROW(exact_b_chromatic(g), BudgetExceeded);
}

TEST(BChromaticTest, NodeLimitStopsSearch) {
  SearchBudget budget;
  budget.node_limit = 10;
  budget.max_vertices = 30;
  const auto g = svn_corona(FamilySpec{FamilyKind::Complete, 5}, FamilySpec{FamilyKind::Complete, 2});
  EXPECT_THROW(exact_b_chromatic(g, budget), BudgetExceeded);
}

TEST(BChromaticTest, SmallCoronas) {
  for (const auto& c : small_oracle_cases()) {
    const auto g = svn_corona(c.left, c.right);
    const auto result = exact_b_chromatic(g);
    EXPECT_EQ(result.phi, c.expected) << to_string(c.left) << " " << to_string(c.right);
    EXPECT_TRUE(verify_b_coloring(g, result.witness).is_b_coloring());
    EXPECT_TRUE(within_sandwich(g, result.phi, result.chi));
  }
}

// Witnesses verify and land in [χ, min(m, Δ+1)] on random small graphs.
TEST(BChromaticProperty, RandomGraphs) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const Vertex n = std::uniform_int_distribution<Vertex>(1, 9)(rng);
    std::bernoulli_distribution coin(0.4);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (coin(rng)) edges.emplace_back(a, b);
    const Graph g(n, edges);
    const auto result = exact_b_chromatic(g);
    EXPECT_EQ(result.witness.k, static_cast<int>(result.phi));
    EXPECT_TRUE(verify_b_coloring(g, result.witness).is_b_coloring());
    EXPECT_EQ(result.chi, exact_chromatic(g));
    EXPECT_TRUE(within_sandwich(g, result.phi, result.chi));
    // nothing above φ up to the bound
    for (std::size_t k = result.phi + 1; k <= b_upper_bound(g); ++k)
      EXPECT_FALSE(exists_b_coloring(g, static_cast<int>(k)));
  }
}
