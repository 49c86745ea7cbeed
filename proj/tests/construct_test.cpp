#include <random>

#include <gtest/gtest.h>

#include "svn/construct.hpp"
#include "svn/grid.hpp"

using namespace svn;

namespace {

void expect_optimal(const VerifiedColoring& result, int phi) {
  EXPECT_EQ(result.coloring.k, phi);
  EXPECT_TRUE(result.report.is_b_coloring());
  EXPECT_TRUE(within_sandwich(result.graph, static_cast<std::size_t>(result.coloring.k)));
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

}  // namespace

TEST(Construct, LongPathFormulaVerifiesAsPrinted) {
  const auto result = construct_coloring({FamilyKind::Path, 10}, {FamilyKind::Path, 3});
  expect_optimal(result, 9);
  EXPECT_EQ(result.branch, "Prop3.1b");
  EXPECT_FALSE(result.repaired);
  EXPECT_TRUE(result.stated_rainbow_confirmed);
  EXPECT_EQ(result.plan.skeleton_modulus, 9);
}

TEST(Construct, CycleFormulaVerifiesAsPrinted) {
  for (int n : {10, 11}) {
    const auto result = construct_coloring({FamilyKind::Cycle, n}, {FamilyKind::Path, 3});
    expect_optimal(result, 9);
    EXPECT_FALSE(result.repaired);
  }
}

TEST(Construct, FigurePairs) {
  expect_optimal(construct_coloring({FamilyKind::Star, 3}, {FamilyKind::Star, 6}), 7);
  expect_optimal(construct_coloring({FamilyKind::Complete, 9}, {FamilyKind::Star, 3}), 9);
  expect_optimal(construct_coloring({FamilyKind::Path, 3}, {FamilyKind::Cycle, 4}), 4);
  expect_optimal(construct_coloring({FamilyKind::Complete, 2}, {FamilyKind::Path, 4}), 4);
}

TEST(Construct, SearchOnlyPairsAreMarkedRepaired) {
  const auto result = construct_coloring({FamilyKind::Complete, 4}, {FamilyKind::Complete, 1});
  expect_optimal(result, 4);
  EXPECT_TRUE(result.repaired);
  EXPECT_FALSE(result.repair_note.empty());
}

TEST(Construct, UnsupportedPair) {
  EXPECT_THROW(construct_coloring({FamilyKind::Complete, 8}, {FamilyKind::Path, 4}), Unsupported);
  EXPECT_THROW(construct_coloring({FamilyKind::Complete, 1}, {FamilyKind::Path, 4}), Unsupported);
}

TEST(Construct, Deterministic) {
  const FamilySpec l{FamilyKind::Complete, 8}, r{FamilyKind::Cycle, 3};
  const auto a = construct_coloring(l, r), b = construct_coloring(l, r);
  EXPECT_EQ(a.coloring, b.coloring);
  EXPECT_EQ(a.repair_note, b.repair_note);
}

TEST(Construct, SmallGridMatchesClosedForm) {
  for (auto lk : all_kinds)
    for (auto rk : all_kinds)
      for (int n = lk == FamilyKind::Complete ? 2 : 3; n <= 7; ++n)
        for (int t = minimum_size(rk); t <= 5; ++t) {
          const FamilySpec l{lk, n}, r{rk, t};
          const auto phi = phi_closed_form(l, r);
          if (!phi.supported) continue;
          const auto result = construct_coloring(l, r);
          SCOPED_TRACE(to_string(l) + " " + to_string(r));
          expect_optimal(result, *phi.value);
          EXPECT_EQ(result.branch, phi.branch);
        }
}

TEST(GenericCorona, PathWithPetersen) {
  const auto h = petersen();
  EXPECT_THROW(color_generic_path_corona(23, h), PreconditionViolated);
  const auto result = color_generic_path_corona(24, h);
  expect_optimal(result, 23);
}

TEST(GenericCorona, CycleWithC5) {
  const auto h = build_family({FamilyKind::Cycle, 5});
  EXPECT_THROW(color_generic_cycle_corona(12, h), PreconditionViolated);
  expect_optimal(color_generic_cycle_corona(13, h), 13);
  expect_optimal(color_generic_cycle_corona(14, h), 13);
}

TEST(GenericCorona, StarWithPath) {
  const FamilySpec p5{FamilyKind::Path, 5};
  const auto h = build_family(p5);
  const auto c_h = optimal_family_coloring(p5);
  // min{n, |V(H)|+2} + φ(H)
  expect_optimal(color_generic_star_corona(4, h, c_h), 4 + 3);
  expect_optimal(color_generic_star_corona(9, h, c_h), 7 + 3);
  EXPECT_THROW(color_generic_star_corona(4, h, Coloring{3, {0, 1, 0, 1, 0}}), PreconditionViolated);
}

TEST(GenericCorona, StarHypothesis) {
  // K_1,6 has Δ + 1 = 7 >= min{1, 9} + 2.
  const FamilySpec s6{FamilyKind::Star, 6};
  EXPECT_THROW(color_generic_star_corona(1, build_family(s6), optimal_family_coloring(s6)), HypothesisViolated);
}

TEST(GenericCorona, K2WithPetersen) {
  const auto h = petersen();
  // a b-coloring of the Petersen graph with 3 colors
  Coloring c_h{3, {0, 1, 0, 1, 2, 1, 2, 2, 0, 0}};
  ASSERT_TRUE(verify_b_coloring(h, c_h).is_b_coloring());
  const auto result = color_k2_corona(h, c_h);
  EXPECT_GE(result.coloring.k, 4);
  EXPECT_TRUE(result.report.is_b_coloring());
}

// Random sample of the acceptance grid: every construction verifies with φ colors.
TEST(ConstructProperty, RandomGridPairs) {
  const auto pairs = construction_grid();
  std::mt19937 rng(4242);
  std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& [l, r] = pairs[pick(rng)];
    const auto entry = run_construction(l, r);
    EXPECT_TRUE(entry.ok()) << to_string(l) << " " << to_string(r) << ": " << entry.note;
  }
}
