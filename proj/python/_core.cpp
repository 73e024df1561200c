// Python bindings: graphs, exact and greedy incidence colorings, bound reports
// and the three composers. Reports cross the boundary as JSON text.

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "incol/compose.hpp"
#include "incol/errors.hpp"
#include "incol/families.hpp"
#include "incol/graph_io.hpp"
#include "incol/incidence.hpp"
#include "incol/operations.hpp"
#include "incol/report.hpp"
#include "incol/serialize.hpp"

namespace py = pybind11;
using namespace incol;

namespace {

using ArcColor = std::tuple<int, int, int>;

std::vector<ArcColor> to_triples(const IncidenceColoring& c) {
  std::vector<ArcColor> out;
  out.reserve(c.arc_count());
  for (std::size_t i = 0; i < c.arc_count(); ++i)
    out.emplace_back(c.arcs()[i].tail, c.arcs()[i].head, c.colors()[i]);
  return out;
}

IncidenceColoring from_triples(const Graph& g, const std::vector<ArcColor>& triples, int palette) {
  if (palette < 0) {
    for (const auto& [tail, head, color] : triples) palette = std::max(palette, color + 1);
  }
  auto c = IncidenceColoring::blank(g, palette);
  for (const auto& [tail, head, color] : triples) {
    if (!arc_index(g, Arc{tail, head})) throw std::invalid_argument("(" + std::to_string(tail) + ", " +
                                                                    std::to_string(head) + ") is not an arc");
    c.set_color(Arc{tail, head}, color);
  }
  return c;
}

py::dict composition_dict(const Composition& r) {
  py::dict d;
  d["graph"] = r.graph;
  d["palette"] = r.coloring.palette_size();
  d["coloring"] = to_triples(r.coloring);
  d["valid"] = verify(r.graph, r.coloring).valid;
  return d;
}

IncidenceColoring operand(const Graph& g, bool exact) { return exact ? exact_chi_i(g).witness : greedy_coloring(g); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Incidence coloring bounds, exact solving and composition";

  py::register_exception<TooLargeError>(m, "TooLargeError");
  py::register_exception<IntegrityError>(m, "IntegrityError");

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& pairs) {
             std::vector<Edge> edges;
             edges.reserve(pairs.size());
             for (const auto& [a, b] : pairs) edges.push_back(make_edge(a, b));
             return Graph::from_edge_list(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_static("family", [](const std::string& spec, std::uint64_t seed) { return generate(parse_family(spec, seed)); },
                  py::arg("spec"), py::arg("seed") = 0, "Graph from a family spec such as 'cycle:5' or 'petersen'.")
      .def_static("from_graph6", [](const std::string& word) { return parse_graph6(word); })
      .def_static("parse", [](const std::string& text) { return parse_graph_auto(text); },
                  "graph6 or edge-list text, detected from the content.")
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, Vertex u) { return std::vector<Vertex>(g.neighbors(u).begin(), g.neighbors(u).end()); })
      .def("edges", [](const Graph& g) {
        std::vector<std::pair<int, int>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def("dot", [](const Graph& g) { return to_dot(g); })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("union", &graph_union);
  m.def("cartesian", &cartesian_product);
  m.def("join", &join);

  m.def(
      "chi_i",
      [](const Graph& g, int guard) {
        ExactOptions options;
        options.arc_guard = guard;
        const auto r = exact_chi_i(g, options);
        return py::make_tuple(r.chi, to_triples(r.witness));
      },
      py::arg("graph"), py::arg("guard") = kDefaultArcGuard,
      "Incidence chromatic number and a witness as (tail, head, color) triples.");
  m.def("greedy", [](const Graph& g) { return to_triples(greedy_coloring(g)); });
  m.def(
      "verify",
      [](const Graph& g, const std::vector<ArcColor>& coloring, int palette) {
        return verify(g, from_triples(g, coloring, palette)).valid;
      },
      py::arg("graph"), py::arg("coloring"), py::arg("palette") = -1);

  m.def(
      "report_json",
      [](const Graph& g, bool planar, std::string exact, int guard) {
        ReportOptions options;
        options.planar = planar;
        options.arc_guard = guard;
        if (exact == "force") options.exact = ExactMode::force;
        else if (exact == "skip") options.exact = ExactMode::skip;
        else if (exact != "auto") throw std::invalid_argument("exact must be auto, force or skip");
        return report_to_json(g, build_bound_report(g, options)).dump();
      },
      py::arg("graph"), py::arg("planar") = false, py::arg("exact") = "auto", py::arg("guard") = kDefaultArcGuard);

  m.def(
      "compose",
      [](const std::string& op, const Graph& g1, const Graph& g2, bool exact) {
        const auto c1 = operand(g1, exact);
        const auto c2 = operand(g2, exact);
        if (op == "union") return composition_dict(compose_union_coloring(g1, c1, g2, c2));
        if (op == "cartesian") return composition_dict(compose_cartesian_coloring(g1, c1, g2, c2));
        if (op != "join") throw std::invalid_argument("op must be union, cartesian or join");
        const auto r = compose_join_coloring(g1, c1, g2, c2);
        py::dict d = composition_dict(r);
        d["branch"] = r.branch == JoinBranch::head_index ? "head_index" : "shared_base";
        return d;
      },
      py::arg("op"), py::arg("left"), py::arg("right"), py::arg("exact") = true);
}
