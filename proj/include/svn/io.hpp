#pragma once

// JSON and DOT serialization of graphs, colorings and verification reports.

#include <array>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "svn/coloring.hpp"
#include "svn/error.hpp"
#include "svn/graph.hpp"

namespace svn {

using Json = nlohmann::json;

inline Json provenance_to_json(const Provenance& p) {
  Json out{{"left", to_string(p.left)}};
  if (p.right)
    out["right"] = to_string(*p.right);
  else if (p.subdivision)
    out["subdivision"] = true;
  return out;
}

inline Provenance provenance_from_json(const Json& in) {
  auto family = [](const Json& field) {
    const auto spec = parse_family(field.get<std::string>());
    if (!spec) throw Error("bad family spec in provenance: " + field.get<std::string>());
    return *spec;
  };
  Provenance p{family(in.at("left")), std::nullopt, in.value("subdivision", false)};
  if (in.contains("right")) p.right = family(in.at("right"));
  return p;
}

/// {"order", "edges" (a<b, sorted), "labels" {"<id>": label}, "provenance"}.
inline Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  Json labels = Json::object();
  if (g.has_labels())
    for (Vertex v = 0; v < g.order(); ++v) labels[std::to_string(v)] = to_string(g.label(v));
  Json out{{"order", g.order()}, {"edges", std::move(edges)}, {"labels", std::move(labels)}};
  out["provenance"] = g.provenance() ? provenance_to_json(*g.provenance()) : Json::object();
  return out;
}

inline Graph graph_from_json(const Json& in) {
  try {
    const auto order = in.at("order").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : in.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    std::vector<VertexLabel> labels;
    if (const auto it = in.find("labels"); it != in.end() && !it->empty()) {
      labels.resize(order);
      std::vector<char> seen(order, 0);
      for (const auto& [key, value] : it->items()) {
        const auto v = static_cast<Vertex>(std::stoul(key));
        const auto label = parse_label(value.get<std::string>());
        if (v >= order || !label) throw Error("bad vertex label entry " + key);
        labels[v] = *label;
        seen[v] = 1;
      }
      for (Vertex v = 0; v < order; ++v)
        if (!seen[v]) throw Error("vertex " + std::to_string(v) + " has no label");
    }
    std::optional<Provenance> provenance;
    if (const auto it = in.find("provenance"); it != in.end() && !it->empty())
      provenance = provenance_from_json(*it);
    return Graph(order, edges, std::move(labels), std::move(provenance));
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed graph JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(std::string("malformed graph JSON: ") + e.what());
  }
}

inline Json coloring_to_json(const Coloring& c) { return Json{{"colors", c.k}, {"assignment", c.assignment}}; }

inline Coloring coloring_from_json(const Json& in) {
  try {
    return Coloring{in.at("colors").get<int>(), in.at("assignment").get<std::vector<int>>()};
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed coloring JSON: ") + e.what());
  }
}

inline Json report_to_json(const BReport& r) {
  Json out{{"proper", r.proper},
           {"b_vertices", r.b_vertices},
           {"missing_colors", r.missing_colors},
           {"is_b_coloring", r.is_b_coloring()}};
  out["conflict"] = r.conflict ? Json{r.conflict->first, r.conflict->second} : Json(nullptr);
  out["rainbow"] = r.rainbow ? Json(*r.rainbow) : Json(nullptr);
  return out;
}

namespace detail {

inline constexpr std::array<std::string_view, 20> palette{
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0",
    "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff", "#9a6324", "#fffac8",
    "#800000", "#aaffc3", "#808000", "#ffd8b1", "#000075", "#a9a9a9"};

}  // namespace detail

/// Fill color from a fixed palette, label "id:color". Rainbow vertices are
/// double circles marked ×, other b-vertices triangles, the rest points.
inline std::string to_dot(const Graph& g, const Coloring& c, const BReport& report,
                          std::string_view name = "corona") {
  std::vector<char> in_rainbow(g.order(), 0);
  if (report.rainbow)
    for (Vertex v : *report.rainbow) in_rainbow[v] = 1;
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n  node [style=filled, fontsize=10];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    const int col = c.assignment.at(v);
    out << "  " << v << " [label=\"" << v << ':' << col << '"';
    if (col >= 0) out << ", fillcolor=\"" << detail::palette[col % detail::palette.size()] << '"';
    if (g.has_labels()) out << ", tooltip=\"" << to_string(g.label(v)) << '"';
    if (in_rainbow[v])
      out << ", shape=doublecircle, xlabel=\"×\"";
    else if (report.is_b_vertex_of(v))
      out << ", shape=triangle";
    else
      out << ", shape=circle";
    out << "];\n";
  }
  for (const auto& [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace svn
