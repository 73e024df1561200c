#pragma once

#include "incol/graph.hpp"
#include "incol/incidence.hpp"

namespace incol {

struct Composition {
  Graph graph;
  IncidenceColoring coloring;
};

/// Coloring of graph_union(g1, g2): edges of g1 keep c1, the remaining edges of
/// g2 take c2 shifted past c1's palette. Palette = p1 + p2.
/// Throws std::invalid_argument if c1 or c2 is not a valid coloring.
Composition compose_union_coloring(const Graph& g1, const IncidenceColoring& c1, const Graph& g2,
                                   const IncidenceColoring& c2);

/// Coloring of cartesian_product(g1, g2): copies of g1 keep c1, copies of g2
/// take c2 shifted past c1's palette. Palette = p1 + p2.
Composition compose_cartesian_coloring(const Graph& g1, const IncidenceColoring& c1, const Graph& g2,
                                       const IncidenceColoring& c2);

enum class JoinBranch {
  head_index,   ///< m + n colors: arc (u,v) takes v
  shared_base,  ///< max(p1,p2) + max(m,n) + 2 colors
};

struct JoinComposition : Composition {
  JoinBranch branch = JoinBranch::head_index;
};

/// Coloring of join(g1, g2) using the cheaper of the two constructions; ties
/// go to shared_base. shared_base needs min(m,n) >= 2 and colors the cross arcs
/// with complete_bipartite_arc_coloring(m, n).
JoinComposition compose_join_coloring(const Graph& g1, const IncidenceColoring& c1, const Graph& g2,
                                      const IncidenceColoring& c2);

/// A (max(m,n)+2)-coloring of K_{m,n} (parts 0..m-1, m..m+n-1), built
/// directly and checked before it is returned.
IncidenceColoring complete_bipartite_arc_coloring(int m, int n);

}  // namespace incol
