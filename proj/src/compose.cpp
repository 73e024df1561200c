#include "incol/compose.hpp"

#include <algorithm>
#include <stdexcept>

#include "incol/errors.hpp"
#include "incol/operations.hpp"

namespace incol {

namespace {

void require_valid(const Graph& g, const IncidenceColoring& c, const char* which) {
  bool ok = false;
  try {
    ok = verify(g, c).valid;
  } catch (const std::invalid_argument&) {
  }
  if (!ok) throw std::invalid_argument(std::string(which) + " is not a valid incidence coloring of its graph");
}

Composition certify(Graph graph, IncidenceColoring coloring, const char* what) {
  if (!verify(graph, coloring).valid) throw IntegrityError(std::string(what) + ": composed coloring is not proper");
  return {std::move(graph), std::move(coloring)};
}

}  // namespace

Composition compose_union_coloring(const Graph& g1, const IncidenceColoring& c1, const Graph& g2,
                                   const IncidenceColoring& c2) {
  require_valid(g1, c1, "first coloring");
  require_valid(g2, c2, "second coloring");
  Graph u = graph_union(g1, g2);
  const int shift = c1.palette_size();
  auto coloring = IncidenceColoring::blank(u, shift + c2.palette_size());
  for (std::size_t i = 0; i < coloring.arc_count(); ++i) {
    const Arc a = coloring.arcs()[i];
    coloring.set_color_at(i, g1.has_edge(a.tail, a.head) ? c1.color_of(a) : shift + c2.color_of(a));
  }
  return certify(std::move(u), std::move(coloring), "union");
}

Composition compose_cartesian_coloring(const Graph& g1, const IncidenceColoring& c1, const Graph& g2,
                                       const IncidenceColoring& c2) {
  require_valid(g1, c1, "first coloring");
  require_valid(g2, c2, "second coloring");
  Graph product = cartesian_product(g1, g2);
  const int n2 = g2.order();
  const int shift = c1.palette_size();
  auto coloring = IncidenceColoring::blank(product, shift + c2.palette_size());
  for (std::size_t i = 0; i < coloring.arc_count(); ++i) {
    const Arc a = coloring.arcs()[i];
    const Vertex ta = a.tail / n2, tb = a.tail % n2;
    const Vertex ha = a.head / n2, hb = a.head % n2;
    coloring.set_color_at(i, tb == hb ? c1.color_of({ta, ha}) : shift + c2.color_of({tb, hb}));
  }
  return certify(std::move(product), std::move(coloring), "cartesian product");
}

// Index the vertices of each side 1.., split the indices by parity, and let
// z = max(m,n) + 1. An arc takes the index of its head, except between equal
// indices, where it takes 0 or z by side and parity. Every vertex then misses
// exactly {its index, 0 or z} from its out-colors, which is what its in-arcs use.
IncidenceColoring complete_bipartite_arc_coloring(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("K_{m,n} needs m, n >= 1");
  const int z = std::max(m, n) + 1;
  const Graph k = join(Graph::null_graph(m), Graph::null_graph(n));
  auto coloring = IncidenceColoring::blank(k, z + 1);
  for (std::size_t i = 0; i < coloring.arc_count(); ++i) {
    const Arc a = coloring.arcs()[i];
    const bool from_first = a.tail < m;
    const int tail_index = from_first ? a.tail + 1 : a.tail - m + 1;
    const int head_index = from_first ? a.head - m + 1 : a.head + 1;
    int color = head_index;
    if (tail_index == head_index) color = (tail_index % 2 == 1) == from_first ? 0 : z;
    coloring.set_color_at(i, color);
  }
  if (!verify(k, coloring).valid) throw IntegrityError("complete bipartite cross coloring is not proper");
  return coloring;
}

JoinComposition compose_join_coloring(const Graph& g1, const IncidenceColoring& c1, const Graph& g2,
                                      const IncidenceColoring& c2) {
  require_valid(g1, c1, "first coloring");
  require_valid(g2, c2, "second coloring");
  const int m = g1.order();
  const int n = g2.order();
  Graph joined = join(g1, g2);

  const int base = std::max(c1.palette_size(), c2.palette_size());
  const int shared_budget = base + std::max(m, n) + 2;
  JoinComposition out;
  if (std::min(m, n) >= 2 && shared_budget <= m + n) {
    const IncidenceColoring cross = complete_bipartite_arc_coloring(m, n);
    auto coloring = IncidenceColoring::blank(joined, shared_budget);
    for (std::size_t i = 0; i < coloring.arc_count(); ++i) {
      const Arc a = coloring.arcs()[i];
      int color = 0;
      if (a.tail < m && a.head < m) color = c1.color_of(a);
      else if (a.tail >= m && a.head >= m) color = c2.color_of({a.tail - m, a.head - m});
      else color = base + cross.color_of(a);
      coloring.set_color_at(i, color);
    }
    static_cast<Composition&>(out) = certify(std::move(joined), std::move(coloring), "join");
    out.branch = JoinBranch::shared_base;
    return out;
  }

  auto coloring = IncidenceColoring::blank(joined, m + n);
  for (std::size_t i = 0; i < coloring.arc_count(); ++i) coloring.set_color_at(i, coloring.arcs()[i].head);
  static_cast<Composition&>(out) = certify(std::move(joined), std::move(coloring), "join");
  out.branch = JoinBranch::head_index;
  return out;
}

}  // namespace incol
