#include "incol/serialize.hpp"

#include <algorithm>
#include <stdexcept>

#include "incol/graph_io.hpp"

namespace incol {

using nlohmann::json;

json coloring_to_json(const IncidenceColoring& c) {
  json out = json::array();
  for (std::size_t i = 0; i < c.arc_count(); ++i) {
    out.push_back({{"tail", c.arcs()[i].tail}, {"head", c.arcs()[i].head}, {"color", c.colors()[i]}});
  }
  return out;
}

IncidenceColoring coloring_from_json(const Graph& g, const json& j, std::optional<int> palette) {
  if (!j.is_array()) throw std::invalid_argument("coloring must be a JSON array");
  auto c = IncidenceColoring::blank(g, 0);
  int max_color = -1;
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("tail") || !entry.contains("head") || !entry.contains("color") ||
        !entry["tail"].is_number_integer() || !entry["head"].is_number_integer() ||
        !entry["color"].is_number_integer()) {
      throw std::invalid_argument("coloring entries need integer tail, head and color");
    }
    const Arc a{entry["tail"].get<int>(), entry["head"].get<int>()};
    const int color = entry["color"].get<int>();
    if (color < 0) throw std::invalid_argument("colors must be non-negative");
    auto index = arc_index(g, a);
    if (!index) {
      throw std::invalid_argument("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                                  ") is not an arc of the graph");
    }
    if (c.colors()[*index] != -1) {
      throw std::invalid_argument("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") listed twice");
    }
    c.set_color_at(*index, color);
    max_color = std::max(max_color, color);
  }
  std::vector<Arc> list(c.arcs().begin(), c.arcs().end());
  std::vector<int> colors(c.colors().begin(), c.colors().end());
  return {std::move(list), std::move(colors), palette.value_or(max_color + 1)};
}

json edges_to_json(std::span<const Edge> edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

json decomposition_to_json(const StarForestDecomposition& sfd) {
  json out = json::array();
  for (std::size_t i = 0; i < sfd.parts.size(); ++i) {
    out.push_back({{"part", i}, {"edges", edges_to_json(sfd.parts[i])}, {"centers", sfd.centers[i]}});
  }
  return out;
}

json edge_coloring_to_json(const EdgeColoring& ec) {
  json out = json::array();
  for (std::size_t i = 0; i < ec.edges.size(); ++i) {
    out.push_back({{"u", ec.edges[i].u}, {"v", ec.edges[i].v}, {"color", ec.color[i]}});
  }
  return out;
}

namespace {

json bound_to_json(const ReportBound& b, const BoundReport& report) {
  json out = {{"name", b.name}, {"value", b.value}, {"hypothesis", b.hypothesis}};
  if (b.exact_value) out["fraction"] = b.exact_value->str();
  if (b.name == "domination" && report.domination) {
    out["witness"] = {{"dominating_set", report.domination->witness.vertices}};
  }
  if (b.name == "star_forest" && report.star_forest) {
    out["witness"] = {{"star_forests", decomposition_to_json(report.star_forest->decomposition)},
                      {"edge_coloring", edge_coloring_to_json(report.star_forest->edge_coloring)},
                      {"coloring", coloring_to_json(report.star_forest->coloring)}};
  }
  return out;
}

}  // namespace

json report_to_json(const Graph& g, const BoundReport& report) {
  const auto& s = report.structure;
  json graph = {{"n", s.order},
                {"m", s.size},
                {"max_degree", s.max_degree},
                {"regular", s.regular_degree ? json(*s.regular_degree) : json(nullptr)},
                {"bipartite", s.bipartite},
                {"components", s.components},
                {"cycle_rank", s.cycle_rank},
                {"degeneracy", s.degeneracy}};
  if (g.order() <= kGraph6MaxOrder) graph["graph6"] = to_graph6(g);
  if (s.ordering) {
    graph["ordering"] = {{"vertices", s.ordering->ordering},
                         {"max_back_degree", s.ordering->max_back_degree},
                         {"restricted", s.ordering->restricted}};
  }

  json invariants = json::object();
  if (report.domination) invariants["gamma"] = report.domination->gamma;
  if (report.star_arboricity) {
    invariants["st"] = report.star_arboricity->st;
  }
  if (report.chromatic_index) invariants["chi_prime"] = report.chromatic_index->chi_prime;

  json out = {{"schema", 1}, {"graph", graph}, {"invariants", invariants}};
  out["lower"] = json::array();
  for (const auto& b : report.lower) out["lower"].push_back(bound_to_json(b, report));
  out["upper"] = json::array();
  for (const auto& b : report.upper) out["upper"].push_back(bound_to_json(b, report));
  out["exact"] = report.exact ? json{{"chi_i", report.exact->chi},
                                     {"search_nodes", report.exact->search_nodes},
                                     {"coloring", coloring_to_json(report.exact->witness)}}
                              : json(nullptr);
  if (report.nec) {
    const auto& v = *report.nec;
    out["nec"] = {{"r", v.r},
                  {"order", v.order},
                  {"divisible_by_r_plus_1", v.divisible},
                  {"chi_prime_equals_r", v.class_one ? json(*v.class_one) : json(nullptr)},
                  {"verdict", v.summary()}};
  } else {
    out["nec"] = nullptr;
  }
  out["warnings"] = report.warnings;
  return out;
}

}  // namespace incol
