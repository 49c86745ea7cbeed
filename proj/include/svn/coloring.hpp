#pragma once

// Colorings and the predicates that define b-chromatic colorings.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "svn/graph.hpp"

namespace svn {

/// Total assignment vertex -> color in [0, k). `k` is declared rather than
/// inferred so that an unused color stays detectable.
struct Coloring {
  int k = 0;
  std::vector<int> assignment;

  int operator[](Vertex v) const { return assignment.at(v); }
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

namespace detail {

inline void check_coverage(const Graph& g, const Coloring& c) {
  if (c.assignment.size() != g.order())
    throw ArityMismatch("coloring covers " + std::to_string(c.assignment.size()) +
                        " vertices, graph has " + std::to_string(g.order()));
  for (std::size_t v = 0; v < c.assignment.size(); ++v)
    if (c.assignment[v] < 0 || c.assignment[v] >= c.k)
      throw InvalidColoring("vertex " + std::to_string(v) + " has color " +
                            std::to_string(c.assignment[v]) + " outside [0, " +
                            std::to_string(c.k) + ")");
}

}  // namespace detail

struct ProperCheck {
  bool proper = true;
  std::optional<Edge> conflict;  // lexicographically first monochromatic edge

  explicit operator bool() const noexcept { return proper; }
};

inline ProperCheck is_proper(const Graph& g, const Coloring& c) {
  detail::check_coverage(g, c);
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b : g.neighbors(a))
      if (a < b && c.assignment[a] == c.assignment[b]) return {false, Edge{a, b}};
  return {};
}

/// True iff N(v) carries every color of [0, k) other than c(v).
inline bool is_b_vertex(const Graph& g, const Coloring& c, Vertex v) {
  const int own = c.assignment.at(v);
  std::vector<char> seen(static_cast<std::size_t>(std::max(c.k, 0)), 0);
  int distinct = 0;
  for (Vertex w : g.neighbors(v)) {
    const int col = c.assignment.at(w);
    if (col == own || col < 0 || col >= c.k || seen[col]) continue;
    seen[col] = 1;
    ++distinct;
  }
  return distinct == c.k - 1;
}

struct BReport {
  bool proper = true;
  std::optional<Edge> conflict;
  std::vector<std::vector<Vertex>> b_vertices;  // indexed by color, ascending ids
  std::optional<std::vector<Vertex>> rainbow;   // lowest-id b-vertex of each color
  std::vector<int> missing_colors;

  bool is_b_coloring() const noexcept { return rainbow.has_value(); }

  bool is_b_vertex_of(Vertex v) const {
    for (const auto& list : b_vertices)
      if (std::binary_search(list.begin(), list.end(), v)) return true;
    return false;
  }
};

inline BReport verify_b_coloring(const Graph& g, const Coloring& c) {
  BReport report;
  const auto proper = is_proper(g, c);
  report.proper = proper.proper;
  report.conflict = proper.conflict;
  report.b_vertices.assign(static_cast<std::size_t>(c.k), {});
  for (Vertex v = 0; v < g.order(); ++v)
    if (is_b_vertex(g, c, v)) report.b_vertices[c.assignment[v]].push_back(v);
  for (int col = 0; col < c.k; ++col)
    if (report.b_vertices[col].empty()) report.missing_colors.push_back(col);
  if (report.proper && report.missing_colors.empty()) {
    std::vector<Vertex> rainbow;
    for (const auto& list : report.b_vertices) rainbow.push_back(list.front());
    report.rainbow = std::move(rainbow);
  }
  return report;
}

/// Largest m such that the m-th largest degree is at least m - 1.
inline std::size_t m_degree(std::vector<std::size_t> degrees) {
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  std::size_t m = 0;
  while (m < degrees.size() && degrees[m] >= m) ++m;
  return m;
}

inline std::size_t m_degree(const Graph& g) { return m_degree(g.degrees()); }

/// min(m(G), Δ(G) + 1): no b-chromatic coloring uses more colors.
inline std::size_t b_upper_bound(const Graph& g) {
  if (g.order() == 0) return 0;
  return std::min(m_degree(g), g.max_degree() + 1);
}

}  // namespace svn
