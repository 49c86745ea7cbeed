#pragma once

// Backtracking search for proper k-colorings in which a fixed set of vertices
// (one per color, the candidate b-rainbow set) are b-vertices.
//
// Domains are 64-bit masks, so k <= 64. Propagation per assignment:
//   - forward checking on neighbours,
//   - for every pinned vertex r: the colors r still misses must fit into its
//     uncolored neighbours (count and union of domains); when the counts are
//     equal those neighbours are restricted to the missing colors, and a
//     missing color only one neighbour can take is forced onto it,
//   - vertices left with a single color are assigned, until nothing changes.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "svn/coloring.hpp"
#include "svn/graph.hpp"

namespace svn {

struct SearchBudget {
  std::size_t max_vertices = 20;
  std::chrono::milliseconds time_limit{120'000};
  std::optional<std::uint64_t> node_limit;
};

/// Deadline and node accounting shared by every search under one budget.
class SearchClock {
 public:
  explicit SearchClock(const SearchBudget& budget)
      : deadline_(std::chrono::steady_clock::now() + budget.time_limit), node_limit_(budget.node_limit) {}

  /// Counts one node; false once the budget is spent.
  bool tick() {
    if (stopped_) return false;
    ++nodes_;
    if (node_limit_ && nodes_ > *node_limit_) stopped_ = true;
    if ((nodes_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline_) stopped_ = true;
    return !stopped_;
  }

  bool stopped() const noexcept { return stopped_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::chrono::steady_clock::time_point deadline_;
  std::optional<std::uint64_t> node_limit_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

enum class SearchOutcome { found, exhausted, stopped };

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(int c) { return Mask{1} << c; }

class RainbowSearch {
 public:
  RainbowSearch(const Graph& g, int k, SearchClock& clock) : g_(g), k_(k), clock_(clock) {
    if (k < 1 || k > 64) throw PreconditionViolated("rainbow search supports 1 <= k <= 64");
    full_ = (k == 64) ? ~Mask{0} : (bit(k) - 1);
  }

  /// `rainbow` pins vertex -> color and demands each pinned vertex be a
  /// b-vertex. `hint` (optional, -1 = none) is tried first at every vertex.
  SearchOutcome run(std::span<const std::pair<Vertex, int>> rainbow, std::span<const int> hint,
                    std::vector<int>& out) {
    const std::size_t n = g_.order();
    hint_.assign(n, -1);
    for (std::size_t v = 0; v < std::min(n, hint.size()); ++v)
      if (hint[v] >= 0 && hint[v] < k_) hint_[v] = hint[v];

    targets_.clear();
    target_of_.assign(n, -1);
    for (const auto& [v, c] : rainbow) {
      if (v >= n || c < 0 || c >= k_ || target_of_[v] >= 0) return SearchOutcome::exhausted;
      target_of_[v] = static_cast<int>(targets_.size());
      targets_.push_back(v);
    }
    target_degree_.assign(n, 0);
    for (Vertex r : targets_)
      for (Vertex w : g_.neighbors(r)) ++target_degree_[w];

    State s;
    s.color.assign(n, -1);
    s.domain.assign(n, full_);
    s.seen.assign(targets_.size(), 0);
    s.open.resize(targets_.size());
    for (std::size_t i = 0; i < targets_.size(); ++i) s.open[i] = static_cast<int>(g_.degree(targets_[i]));

    for (const auto& [v, c] : rainbow)
      if (!(s.domain[v] & bit(c)) || !assign(s, v, c)) return SearchOutcome::exhausted;
    if (!propagate(s)) return SearchOutcome::exhausted;

    const auto outcome = dfs(s);
    if (outcome == SearchOutcome::found) out = std::move(solution_);
    return outcome;
  }

 private:
  struct State {
    std::vector<int> color;
    std::vector<Mask> domain;
    std::vector<Mask> seen;  // per target: colors present in its neighbourhood
    std::vector<int> open;   // per target: uncolored neighbours
  };

  Mask missing(const State& s, std::size_t t) const {
    return full_ & ~bit(s.color[targets_[t]]) & ~s.seen[t];
  }

  bool assign(State& s, Vertex v, int c) const {
    s.color[v] = c;
    s.domain[v] = bit(c);
    for (Vertex w : g_.neighbors(v)) {
      if (s.color[w] == c) return false;
      if (s.color[w] < 0) {
        s.domain[w] &= ~bit(c);
        if (!s.domain[w]) return false;
      }
      if (const int t = target_of_[w]; t >= 0) {
        s.seen[t] |= bit(c);
        --s.open[t];
      }
    }
    return true;
  }

  bool propagate(State& s) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t t = 0; t < targets_.size(); ++t) {
        const Vertex r = targets_[t];
        if (s.color[r] < 0) continue;
        const Mask miss = missing(s, t);
        if (!miss) continue;
        const int need = std::popcount(miss);
        if (need > s.open[t]) return false;
        Mask reachable = 0;
        Mask twice = 0;
        for (Vertex w : g_.neighbors(r)) {
          if (s.color[w] >= 0) continue;
          twice |= reachable & s.domain[w];
          reachable |= s.domain[w];
        }
        if (miss & ~reachable) return false;
        if (need == s.open[t]) {
          for (Vertex w : g_.neighbors(r)) {
            if (s.color[w] >= 0 || !(s.domain[w] & ~miss)) continue;
            s.domain[w] &= miss;
            if (!s.domain[w]) return false;
            changed = true;
          }
        }
        // a missing color only one neighbour can still take is forced there
        if (const Mask single = miss & ~twice) {
          for (Vertex w : g_.neighbors(r)) {
            if (s.color[w] >= 0 || !(s.domain[w] & single)) continue;
            const Mask forced = s.domain[w] & single;
            if (std::popcount(forced) > 1) return false;
            if (s.domain[w] != forced) {
              s.domain[w] = forced;
              changed = true;
            }
          }
        }
      }
      for (Vertex v = 0; v < g_.order(); ++v) {
        if (s.color[v] >= 0 || std::popcount(s.domain[v]) != 1) continue;
        if (!assign(s, v, std::countr_zero(s.domain[v]))) return false;
        changed = true;
      }
    }
    return true;
  }

  std::optional<Vertex> pick(const State& s) const {
    std::optional<Vertex> best;
    int best_size = 65;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (s.color[v] >= 0) continue;
      const int size = std::popcount(s.domain[v]);
      if (!best || size < best_size ||
          (size == best_size && (target_degree_[v] > target_degree_[*best] ||
                                 (target_degree_[v] == target_degree_[*best] &&
                                  g_.degree(v) > g_.degree(*best))))) {
        best = v;
        best_size = size;
      }
    }
    return best;
  }

  std::vector<int> value_order(const State& s, Vertex v) const {
    std::vector<std::pair<int, int>> scored;  // (-score, color)
    for (int c = 0; c < k_; ++c) {
      if (!(s.domain[v] & bit(c))) continue;
      int score = (hint_[v] == c) ? 1000 : 0;
      for (Vertex w : g_.neighbors(v))
        if (const int t = target_of_[w]; t >= 0 && s.color[w] >= 0 && (missing(s, t) & bit(c))) ++score;
      scored.emplace_back(-score, c);
    }
    std::sort(scored.begin(), scored.end());
    std::vector<int> out;
    out.reserve(scored.size());
    for (const auto& [score, c] : scored) out.push_back(c);
    return out;
  }

  SearchOutcome dfs(const State& s) {
    if (!clock_.tick()) return SearchOutcome::stopped;
    const auto v = pick(s);
    if (!v) {
      solution_ = s.color;
      return SearchOutcome::found;
    }
    for (int c : value_order(s, *v)) {
      State child = s;
      if (!assign(child, *v, c) || !propagate(child)) continue;
      const auto outcome = dfs(child);
      if (outcome != SearchOutcome::exhausted) return outcome;
    }
    return clock_.stopped() ? SearchOutcome::stopped : SearchOutcome::exhausted;
  }

  const Graph& g_;
  int k_;
  SearchClock& clock_;
  Mask full_ = 0;
  std::vector<int> hint_;
  std::vector<Vertex> targets_;
  std::vector<int> target_of_;
  std::vector<int> target_degree_;
  std::vector<int> solution_;
};

}  // namespace detail

namespace detail {

/// Tabu search over complete assignments. Cost = monochromatic edges plus,
/// for each pinned vertex, the colors missing from its neighbourhood.
class RainbowLocalSearch {
 public:
  RainbowLocalSearch(const Graph& g, int k, SearchClock& clock, std::uint32_t seed)
      : g_(g), k_(k), clock_(clock), rng_(seed) {}

  SearchOutcome run(std::span<const std::pair<Vertex, int>> rainbow, std::span<const int> hint,
                    std::vector<int>& out) {
    const std::size_t n = g_.order();
    color_.assign(n, -1);
    pinned_.assign(n, 0);
    target_of_.assign(n, -1);
    targets_.clear();
    for (const auto& [v, c] : rainbow) {
      if (v >= n || c < 0 || c >= k_ || pinned_[v]) return SearchOutcome::exhausted;
      color_[v] = c;
      pinned_[v] = 1;
      target_of_[v] = static_cast<int>(targets_.size());
      targets_.push_back(v);
    }
    std::uniform_int_distribution<int> any(0, k_ - 1);
    for (Vertex v = 0; v < n; ++v)
      if (!pinned_[v]) color_[v] = (v < hint.size() && hint[v] >= 0 && hint[v] < k_) ? hint[v] : any(rng_);

    count_.assign(targets_.size(), std::vector<int>(static_cast<std::size_t>(k_), 0));
    for (std::size_t t = 0; t < targets_.size(); ++t)
      for (Vertex w : g_.neighbors(targets_[t])) ++count_[t][color_[w]];
    long cost = total_cost();
    long best = cost;
    std::vector<std::uint64_t> tabu(n * static_cast<std::size_t>(k_), 0);

    for (std::uint64_t iter = 1; cost > 0; ++iter) {
      if (!clock_.tick()) return SearchOutcome::stopped;
      std::vector<Vertex> candidates = unhappy();
      long best_delta = 0;
      std::vector<std::pair<Vertex, int>> moves;
      for (Vertex v : candidates)
        for (int c = 0; c < k_; ++c) {
          if (c == color_[v]) continue;
          const long d = delta(v, c);
          const bool allowed = tabu[v * k_ + c] < iter || cost + d < best;
          if (!allowed) continue;
          if (moves.empty() || d < best_delta) {
            moves.assign(1, {v, c});
            best_delta = d;
          } else if (d == best_delta) {
            moves.emplace_back(v, c);
          }
        }
      if (moves.empty()) continue;
      const auto [v, c] = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng_)];
      tabu[v * k_ + color_[v]] = iter + 7 + std::uniform_int_distribution<std::uint64_t>(0, 9)(rng_);
      move(v, c);
      cost += best_delta;
      best = std::min(best, cost);
    }
    out = color_;
    return SearchOutcome::found;
  }

 private:
  long missing_of(std::size_t t) const {
    long m = 0;
    for (int c = 0; c < k_; ++c)
      if (c != color_[targets_[t]] && count_[t][c] == 0) ++m;
    return m;
  }

  long total_cost() const {
    long cost = 0;
    for (Vertex v = 0; v < g_.order(); ++v)
      for (Vertex w : g_.neighbors(v))
        if (v < w && color_[v] == color_[w]) ++cost;
    for (std::size_t t = 0; t < targets_.size(); ++t) cost += missing_of(t);
    return cost;
  }

  long delta(Vertex v, int c) const {
    const int old = color_[v];
    long d = 0;
    for (Vertex w : g_.neighbors(v)) {
      if (color_[w] == c) ++d;
      if (color_[w] == old) --d;
      if (const int t = target_of_[w]; t >= 0) {
        const int own = color_[w];
        if (old != own && count_[t][old] == 1) ++d;
        if (c != own && count_[t][c] == 0) --d;
      }
    }
    return d;
  }

  void move(Vertex v, int c) {
    const int old = color_[v];
    for (Vertex w : g_.neighbors(v))
      if (const int t = target_of_[w]; t >= 0) {
        --count_[t][old];
        ++count_[t][c];
      }
    color_[v] = c;
  }

  std::vector<Vertex> unhappy() const {
    std::vector<char> mark(g_.order(), 0);
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (pinned_[v]) continue;
      for (Vertex w : g_.neighbors(v))
        if (color_[w] == color_[v]) {
          mark[v] = 1;
          break;
        }
    }
    for (std::size_t t = 0; t < targets_.size(); ++t)
      if (missing_of(t) > 0)
        for (Vertex w : g_.neighbors(targets_[t])) mark[w] = 1;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (mark[v] && !pinned_[v]) out.push_back(v);
    return out;
  }

  const Graph& g_;
  int k_;
  SearchClock& clock_;
  std::mt19937 rng_;
  std::vector<int> color_;
  std::vector<char> pinned_;
  std::vector<int> target_of_;
  std::vector<Vertex> targets_;
  std::vector<std::vector<int>> count_;
};

}  // namespace detail

/// Local-search counterpart of search_rainbow_coloring: never proves that no
/// coloring exists, so it returns either found or stopped.
inline SearchOutcome local_search_rainbow_coloring(const Graph& g, int k,
                                                   std::span<const std::pair<Vertex, int>> rainbow,
                                                   std::span<const int> hint, SearchClock& clock,
                                                   std::vector<int>& out, std::uint32_t seed = 1) {
  if (k < 1) return SearchOutcome::exhausted;
  detail::RainbowLocalSearch search(g, k, clock, seed);
  return search.run(rainbow, hint, out);
}

/// Searches for a proper k-coloring of `g` in which each pinned vertex keeps
/// its color and is a b-vertex. On success `out` holds the assignment.
inline SearchOutcome search_rainbow_coloring(const Graph& g, int k,
                                             std::span<const std::pair<Vertex, int>> rainbow,
                                             std::span<const int> hint, SearchClock& clock,
                                             std::vector<int>& out) {
  detail::RainbowSearch search(g, k, clock);
  return search.run(rainbow, hint, out);
}

}  // namespace svn
