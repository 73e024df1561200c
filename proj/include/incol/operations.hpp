#pragma once

#include "incol/graph.hpp"

namespace incol {

/// Edge union over the shared vertex set 0..max(n1,n2)-1; the smaller operand
/// is padded with isolated vertices. Shared edges appear once.
Graph graph_union(const Graph& g1, const Graph& g2);

/// Vertex (a,b) is a * |V(g2)| + b. (a,b) ~ (a',b') iff a = a' and b ~ b' in
/// g2, or b = b' and a ~ a' in g1.
Graph cartesian_product(const Graph& g1, const Graph& g2);

/// Disjoint union plus all cross edges; g1 keeps 0..m-1, g2 is shifted by m.
Graph join(const Graph& g1, const Graph& g2);

}  // namespace incol
