#pragma once

// Simple undirected graphs, the four base families, subdivision graphs and
// subdivision-vertex neighbourhood (SVN) coronas.
//
// Vertex-id layout of every corona G⊡H (|V(G)| = n, |E(G)| = e, |V(H)| = t):
//   [0, n)              base vertices u_i
//   [n, n + e)          inserted vertices s_{i,j}, edges of G in lexicographic order
//   [n + e, n + e + nt) copy vertices v_{i,k}, lexicographic in (i, k)
// A subdivision graph uses the first two blocks only.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "svn/error.hpp"

namespace svn {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

enum class FamilyKind { Path, Cycle, Star, Complete };

/// A member of one of the base families. For stars `size` is the number of
/// leaves, so Star(t) has order t + 1 and its center is vertex 0.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  int size = 0;

  int order() const noexcept { return kind == FamilyKind::Star ? size + 1 : size; }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline std::string_view kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Path: return "path";
    case FamilyKind::Cycle: return "cycle";
    case FamilyKind::Star: return "star";
    case FamilyKind::Complete: return "complete";
  }
  return "?";
}

inline std::optional<FamilyKind> parse_kind(std::string_view text) {
  for (auto kind : {FamilyKind::Path, FamilyKind::Cycle, FamilyKind::Star, FamilyKind::Complete})
    if (kind_name(kind) == text) return kind;
  return std::nullopt;
}

inline std::string to_string(const FamilySpec& spec) {
  return std::string(kind_name(spec.kind)) + ":" + std::to_string(spec.size);
}

/// Parses "<kind>:<size>", e.g. "star:6". Returns nullopt on malformed text.
inline std::optional<FamilySpec> parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto kind = parse_kind(text.substr(0, colon));
  const auto digits = text.substr(colon + 1);
  if (!kind || digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return std::nullopt;
  return FamilySpec{*kind, std::stoi(std::string(digits))};
}

/// Minimum size accepted by build_family for each kind.
inline int minimum_size(FamilyKind kind) {
  return (kind == FamilyKind::Path || kind == FamilyKind::Cycle) ? 3 : 1;
}

inline void validate(const FamilySpec& spec) {
  if (spec.size < minimum_size(spec.kind))
    throw SizeTooSmall(to_string(spec) + ": size must be at least " +
                       std::to_string(minimum_size(spec.kind)));
}

struct BaseVertex {
  Vertex i;
  auto operator<=>(const BaseVertex&) const = default;
};

/// s_{i,j}; always stored with i < j.
struct InsertedVertex {
  Vertex i;
  Vertex j;
  auto operator<=>(const InsertedVertex&) const = default;
};

struct CopyVertex {
  Vertex i;
  Vertex k;
  auto operator<=>(const CopyVertex&) const = default;
};

using VertexLabel = std::variant<BaseVertex, InsertedVertex, CopyVertex>;

inline VertexLabel base(Vertex i) { return BaseVertex{i}; }
inline VertexLabel inserted(Vertex i, Vertex j) { return InsertedVertex{std::min(i, j), std::max(i, j)}; }
inline VertexLabel copy(Vertex i, Vertex k) { return CopyVertex{i, k}; }

inline std::string to_string(const VertexLabel& label) {
  return std::visit(
      [](const auto& l) -> std::string {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, BaseVertex>)
          return "u:" + std::to_string(l.i);
        else if constexpr (std::is_same_v<T, InsertedVertex>)
          return "s:" + std::to_string(l.i) + ":" + std::to_string(l.j);
        else
          return "v:" + std::to_string(l.i) + ":" + std::to_string(l.k);
      },
      label);
}

inline std::optional<VertexLabel> parse_label(std::string_view text) {
  std::vector<Vertex> fields;
  if (text.size() < 3 || text[1] != ':') return std::nullopt;
  std::size_t pos = 2;
  while (pos <= text.size()) {
    const auto next = std::min(text.find(':', pos), text.size());
    const auto digits = text.substr(pos, next - pos);
    if (digits.empty() || digits.size() > 9 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      return std::nullopt;
    fields.push_back(static_cast<Vertex>(std::stoul(std::string(digits))));
    pos = next + 1;
  }
  switch (text[0]) {
    case 'u':
      if (fields.size() == 1) return base(fields[0]);
      break;
    case 's':
      if (fields.size() == 2 && fields[0] != fields[1]) return inserted(fields[0], fields[1]);
      break;
    case 'v':
      if (fields.size() == 2) return copy(fields[0], fields[1]);
      break;
  }
  return std::nullopt;
}

/// Where a graph came from. `right` empty with `subdivision` set means S(left);
/// both empty flags and no right means the plain family graph.
struct Provenance {
  FamilySpec left;
  std::optional<FamilySpec> right;
  bool subdivision = false;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Immutable simple graph with sorted adjacency lists and optional structured
/// vertex labels.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  /// Duplicate edges collapse.
  Graph(std::size_t order, std::span<const Edge> edges, std::vector<VertexLabel> labels = {},
        std::optional<Provenance> provenance = std::nullopt)
      : adjacency_(order), labels_(std::move(labels)), provenance_(std::move(provenance)) {
    for (const auto& [a, b] : edges) {
      if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
      if (a >= order || b >= order) throw std::invalid_argument("edge endpoint out of range");
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
    }
    for (auto& list : adjacency_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      edge_count_ += list.size();
    }
    edge_count_ /= 2;
    if (!labels_.empty()) {
      if (labels_.size() != order) throw std::invalid_argument("label count differs from order");
      for (Vertex v = 0; v < order; ++v)
        if (!index_.emplace(labels_[v], v).second)
          throw std::invalid_argument("duplicate vertex label " + to_string(labels_[v]));
    }
  }

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& list : adjacency_) best = std::max(best, list.size());
    return best;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> out;
    out.reserve(order());
    for (const auto& list : adjacency_) out.push_back(list.size());
    return out;
  }

  bool adjacent(Vertex a, Vertex b) const {
    const auto& list = adjacency_.at(a);
    return std::binary_search(list.begin(), list.end(), b);
  }

  /// All edges as (a, b) with a < b, lexicographically sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex a = 0; a < order(); ++a)
      for (Vertex b : adjacency_[a])
        if (a < b) out.emplace_back(a, b);
    return out;
  }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<VertexLabel>& labels() const noexcept { return labels_; }
  const VertexLabel& label(Vertex v) const { return labels_.at(v); }

  std::optional<Vertex> find(const VertexLabel& label) const {
    const auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Vertex id(const VertexLabel& label) const {
    if (auto v = find(label)) return *v;
    throw UnknownLabel("no vertex labelled " + to_string(label));
  }

  const std::optional<Provenance>& provenance() const noexcept { return provenance_; }

  /// The family spec when this graph is a plain family member.
  std::optional<FamilySpec> family() const {
    if (provenance_ && !provenance_->right && !provenance_->subdivision) return provenance_->left;
    return std::nullopt;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_ && a.labels_ == b.labels_ && a.provenance_ == b.provenance_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexLabel> labels_;
  std::map<VertexLabel, Vertex> index_;
  std::optional<Provenance> provenance_;
  std::size_t edge_count_ = 0;
};

inline Graph build_family(const FamilySpec& spec) {
  validate(spec);
  const auto n = static_cast<Vertex>(spec.order());
  std::vector<Edge> edges;
  switch (spec.kind) {
    case FamilyKind::Path:
      for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case FamilyKind::Cycle:
      for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(0, n - 1);
      break;
    case FamilyKind::Star:
      for (Vertex i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
    case FamilyKind::Complete:
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
  }
  return Graph(n, edges, {}, Provenance{spec, std::nullopt, false});
}

namespace detail {

inline std::optional<Provenance> combine(const Graph& g, const Graph* h) {
  const auto left = g.family();
  if (!left) return std::nullopt;
  if (!h) return Provenance{*left, std::nullopt, true};
  const auto right = h->family();
  if (!right) return std::nullopt;
  return Provenance{*left, *right, false};
}

inline Graph corona_impl(const Graph& g, const Graph* h) {
  const std::size_t n = g.order();
  const std::size_t t = h ? h->order() : 0;
  const auto g_edges = g.edges();
  const std::size_t e = g_edges.size();
  const std::size_t copies_at = n + e;

  std::vector<VertexLabel> labels;
  labels.reserve(n + e + n * t);
  for (Vertex i = 0; i < n; ++i) labels.push_back(base(i));
  for (const auto& [a, b] : g_edges) labels.push_back(inserted(a, b));
  for (Vertex i = 0; i < n; ++i)
    for (Vertex k = 0; k < t; ++k) labels.push_back(copy(i, k));

  std::vector<Edge> edges;
  edges.reserve(2 * e + 2 * e * t + (h ? n * h->edge_count() : 0));
  for (std::size_t idx = 0; idx < e; ++idx) {
    const auto [a, b] = g_edges[idx];
    const Vertex s = n + idx;
    edges.emplace_back(a, s);
    edges.emplace_back(b, s);
    for (Vertex k = 0; k < t; ++k) {
      edges.emplace_back(s, copies_at + a * t + k);
      edges.emplace_back(s, copies_at + b * t + k);
    }
  }
  if (h) {
    const auto h_edges = h->edges();
    for (Vertex i = 0; i < n; ++i)
      for (const auto& [x, y] : h_edges) edges.emplace_back(copies_at + i * t + x, copies_at + i * t + y);
  }
  const std::size_t order = labels.size();
  return Graph(order, edges, std::move(labels), combine(g, h));
}

}  // namespace detail

/// S(g): every edge uv replaced by a path u - s - v. Original ids are kept.
inline Graph subdivision(const Graph& g) { return detail::corona_impl(g, nullptr); }

/// g⊡h: S(g) plus |V(g)| disjoint copies of h, the i-th copy joined to every
/// inserted neighbour of u_i.
inline Graph svn_corona(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) throw EmptyOperand("svn_corona: operand of order 0");
  return detail::corona_impl(g, &h);
}

inline Graph svn_corona(const FamilySpec& left, const FamilySpec& right) {
  return svn_corona(build_family(left), build_family(right));
}

/// Degree of a corona vertex from the operands alone:
/// d_G(u_i) for base vertices, 2|V(H)| + 2 for inserted ones and
/// d_G(u_i) + d_H(v_k) for copies.
inline std::size_t corona_degree(const Graph& g, const Graph& h, const VertexLabel& label) {
  return std::visit(
      [&](const auto& l) -> std::size_t {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, BaseVertex>) {
          if (l.i >= g.order()) throw UnknownLabel("no vertex labelled " + to_string(label));
          return g.degree(l.i);
        } else if constexpr (std::is_same_v<T, InsertedVertex>) {
          if (l.j >= g.order() || !g.adjacent(l.i, l.j))
            throw UnknownLabel("no vertex labelled " + to_string(label));
          return 2 * h.order() + 2;
        } else {
          if (l.i >= g.order() || l.k >= h.order())
            throw UnknownLabel("no vertex labelled " + to_string(label));
          return g.degree(l.i) + h.degree(l.k);
        }
      },
      label);
}

}  // namespace svn
