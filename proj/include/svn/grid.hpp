#pragma once

// Parameter grids shared by the CLI selftest and the acceptance suite.

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svn/closed_form.hpp"
#include "svn/construct.hpp"
#include "svn/oracle.hpp"

namespace svn {

inline constexpr FamilyKind all_kinds[] = {FamilyKind::Path, FamilyKind::Cycle, FamilyKind::Star,
                                           FamilyKind::Complete};

using FamilyPair = std::pair<FamilySpec, FamilySpec>;

/// Supported pairs with n in 3..12 (2..12 for a complete left operand) and t in 1..8.
inline std::vector<FamilyPair> construction_grid() {
  std::vector<FamilyPair> pairs;
  for (auto lk : all_kinds)
    for (auto rk : all_kinds)
      for (int n = lk == FamilyKind::Complete ? 2 : 3; n <= 12; ++n)
        for (int t = std::max(1, minimum_size(rk)); t <= 8; ++t) {
          FamilySpec left{lk, n}, right{rk, t};
          if (phi_closed_form(left, right).supported) pairs.emplace_back(left, right);
        }
  return pairs;
}

/// χ ≤ k ≤ min(m, Δ+1), with χ evaluated exactly when `chi` is given and
/// otherwise bounded below by a greedy clique.
inline bool within_sandwich(const Graph& g, std::size_t k, std::optional<std::size_t> chi = std::nullopt) {
  const std::size_t lower = chi ? *chi : detail::greedy_clique(g);
  return lower <= k && k <= b_upper_bound(g);
}

struct GridEntry {
  FamilySpec left, right;
  PhiResult phi;
  std::optional<int> k;  // colors of the verified construction
  bool repaired = false;
  bool sandwiched = false;
  std::string note;  // repair note or failure reason
  double seconds = 0;

  bool ok() const { return k && phi.value && *k == *phi.value && sandwiched; }
};

inline GridEntry run_construction(const FamilySpec& left, const FamilySpec& right,
                                  const SearchBudget& budget = default_repair_budget()) {
  GridEntry entry{left, right, phi_closed_form(left, right), std::nullopt, false, false, {}, 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto result = construct_coloring(left, right, budget);
    entry.k = result.coloring.k;
    entry.repaired = result.repaired;
    entry.note = result.repair_note;
    entry.sandwiched = result.report.is_b_coloring() &&
                       within_sandwich(result.graph, static_cast<std::size_t>(result.coloring.k));
  } catch (const Error& e) {
    entry.note = e.what();
  }
  entry.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return entry;
}

struct OracleCase {
  FamilySpec left, right;
  std::size_t expected;
};

/// Small coronas whose b-chromatic number is known independently of any formula.
inline const std::vector<OracleCase>& small_oracle_cases() {
  static const std::vector<OracleCase> cases{
      {{FamilyKind::Path, 3}, {FamilyKind::Path, 3}, 4},     {{FamilyKind::Path, 3}, {FamilyKind::Cycle, 4}, 4},
      {{FamilyKind::Cycle, 3}, {FamilyKind::Path, 3}, 5},    {{FamilyKind::Complete, 2}, {FamilyKind::Path, 3}, 3},
      {{FamilyKind::Complete, 2}, {FamilyKind::Path, 4}, 4}, {{FamilyKind::Complete, 2}, {FamilyKind::Cycle, 4}, 3},
      {{FamilyKind::Complete, 4}, {FamilyKind::Complete, 1}, 4},
  };
  return cases;
}

struct OracleCheck {
  std::string name;
  std::size_t expected = 0;
  std::optional<OracleResult> result;
  bool sandwiched = false;
  std::string error;
  double seconds = 0;

  bool ok() const { return result && result->phi == expected && sandwiched; }
};

inline OracleCheck run_oracle(std::string name, const Graph& g, std::size_t expected, const SearchBudget& budget) {
  OracleCheck check{std::move(name), expected, std::nullopt, false, {}, 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    check.result = exact_b_chromatic(g, budget);
    check.sandwiched = verify_b_coloring(g, check.result->witness).is_b_coloring() &&
                       within_sandwich(g, check.result->phi, check.result->chi);
  } catch (const Error& e) {
    check.error = e.what();
  }
  check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return check;
}

}  // namespace svn
