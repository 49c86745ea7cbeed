#pragma once

// Exact chromatic and b-chromatic numbers of small graphs by exhaustive search.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "svn/coloring.hpp"
#include "svn/graph.hpp"
#include "svn/search.hpp"

namespace svn {

namespace detail {

inline void check_size(const Graph& g, const SearchBudget& budget, std::size_t lower, std::size_t upper) {
  if (g.order() > budget.max_vertices)
    throw BudgetExceeded("graph of order " + std::to_string(g.order()) + " exceeds max_vertices " +
                             std::to_string(budget.max_vertices),
                         lower, upper);
}

inline std::size_t greedy_clique(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::size_t best = g.order() ? 1 : 0;
  for (Vertex seed : order) {
    std::vector<Vertex> clique{seed};
    for (Vertex v : order) {
      if (v == seed) continue;
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex u) { return g.adjacent(u, v); }))
        clique.push_back(v);
    }
    best = std::max(best, clique.size());
  }
  return best;
}

/// Greedy DSatur; returns the number of colors used.
inline std::size_t dsatur_colors(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> color(n, -1);
  std::vector<std::vector<char>> adjacent_colors(n, std::vector<char>(n + 1, 0));
  std::vector<std::size_t> saturation(n, 0);
  int used = 0;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = n;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      if (pick == n || saturation[v] > saturation[pick] ||
          (saturation[v] == saturation[pick] && g.degree(v) > g.degree(pick)))
        pick = v;
    }
    int c = 0;
    while (adjacent_colors[pick][c]) ++c;
    color[pick] = c;
    used = std::max(used, c + 1);
    for (Vertex w : g.neighbors(pick))
      if (!adjacent_colors[w][c]) {
        adjacent_colors[w][c] = 1;
        ++saturation[w];
      }
  }
  return static_cast<std::size_t>(used);
}

class KColorability {
 public:
  KColorability(const Graph& g, int k, SearchClock& clock)
      : g_(g), k_(k), clock_(clock), color_(g.order(), -1) {}

  SearchOutcome run() { return extend(0, 0); }

 private:
  SearchOutcome extend(std::size_t colored, int used) {
    if (!clock_.tick()) return SearchOutcome::stopped;
    if (colored == g_.order()) return SearchOutcome::found;
    // DSatur branching: most distinct neighbour colors, then degree.
    Vertex pick = g_.order();
    int pick_sat = -1;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (color_[v] >= 0) continue;
      std::uint64_t seen = 0;
      for (Vertex w : g_.neighbors(v))
        if (color_[w] >= 0) seen |= std::uint64_t{1} << color_[w];
      const int sat = std::popcount(seen);
      if (sat > pick_sat || (sat == pick_sat && g_.degree(v) > g_.degree(pick))) {
        pick = v;
        pick_sat = sat;
      }
    }
    // A fresh color is interchangeable with any other fresh one.
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool clash = false;
      for (Vertex w : g_.neighbors(pick))
        if (color_[w] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      color_[pick] = c;
      const auto outcome = extend(colored + 1, std::max(used, c + 1));
      if (outcome != SearchOutcome::exhausted) return outcome;
      color_[pick] = -1;
    }
    return clock_.stopped() ? SearchOutcome::stopped : SearchOutcome::exhausted;
  }

  const Graph& g_;
  int k_;
  SearchClock& clock_;
  std::vector<int> color_;
};

inline std::size_t exact_chromatic(const Graph& g, SearchClock& clock) {
  if (g.order() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  const std::size_t lower = greedy_clique(g);
  const std::size_t upper = dsatur_colors(g);
  for (std::size_t k = lower; k < upper; ++k) {
    KColorability search(g, static_cast<int>(k), clock);
    const auto outcome = search.run();
    if (outcome == SearchOutcome::found) return k;
    if (outcome == SearchOutcome::stopped)
      throw BudgetExceeded("chromatic number search ran out of budget", k, upper);
  }
  return upper;
}

/// Tries every k-subset of vertices of degree >= k - 1 as the b-rainbow set,
/// the i-th smallest id taking color i.
inline std::optional<Coloring> exists_b_coloring(const Graph& g, int k, SearchClock& clock) {
  if (k < 1) return std::nullopt;
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) + 1 >= static_cast<std::size_t>(k)) candidates.push_back(v);
  if (candidates.size() < static_cast<std::size_t>(k)) return std::nullopt;

  std::vector<std::size_t> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  std::vector<std::pair<Vertex, int>> rainbow(pick.size());
  std::vector<int> assignment;
  while (true) {
    for (std::size_t i = 0; i < pick.size(); ++i) rainbow[i] = {candidates[pick[i]], static_cast<int>(i)};
    const auto outcome = search_rainbow_coloring(g, k, rainbow, {}, clock, assignment);
    if (outcome == SearchOutcome::found) return Coloring{k, assignment};
    if (outcome == SearchOutcome::stopped)
      throw BudgetExceeded("b-coloring search for k=" + std::to_string(k) + " ran out of budget", 0,
                           static_cast<std::size_t>(k));
    // next combination
    std::size_t i = pick.size();
    while (i > 0 && pick[i - 1] == candidates.size() - pick.size() + (i - 1)) --i;
    if (i == 0) return std::nullopt;
    ++pick[i - 1];
    for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace detail

/// χ(g) by branch and bound between a greedy clique and DSatur.
inline std::size_t exact_chromatic(const Graph& g, const SearchBudget& budget = {}) {
  detail::check_size(g, budget, 0, g.order());
  SearchClock clock(budget);
  return detail::exact_chromatic(g, clock);
}

/// A proper k-coloring with a b-vertex of every color, or nullopt if none exists.
inline std::optional<Coloring> exists_b_coloring(const Graph& g, int k, const SearchBudget& budget = {}) {
  detail::check_size(g, budget, 0, static_cast<std::size_t>(std::max(k, 0)));
  SearchClock clock(budget);
  return detail::exists_b_coloring(g, k, clock);
}

struct OracleResult {
  std::size_t phi = 0;
  std::size_t chi = 0;
  Coloring witness;  // an optimal b-chromatic coloring
};

/// φ(g): every k from min(m, Δ+1) down to χ is decided on its own, since
/// b-colorability is not monotone in k; the first success is the maximum.
inline OracleResult exact_b_chromatic(const Graph& g, const SearchBudget& budget = {}) {
  const std::size_t upper = b_upper_bound(g);
  detail::check_size(g, budget, 0, upper);
  SearchClock clock(budget);
  OracleResult result;
  if (g.order() == 0) return result;
  result.chi = detail::exact_chromatic(g, clock);
  for (std::size_t k = upper; k >= result.chi && k >= 1; --k) {
    std::optional<Coloring> found;
    try {
      found = detail::exists_b_coloring(g, static_cast<int>(k), clock);
    } catch (const BudgetExceeded&) {
      throw BudgetExceeded("b-chromatic search ran out of budget at k=" + std::to_string(k), result.chi, k);
    }
    if (found) {
      result.phi = k;
      result.witness = std::move(*found);
      return result;
    }
  }
  // Unreachable for non-empty graphs: a χ-coloring is always b-chromatic.
  throw Error("no b-chromatic coloring found down to the chromatic number");
}

}  // namespace svn
