#include "incol/operations.hpp"

#include <algorithm>
#include <vector>

namespace incol {

Graph graph_union(const Graph& g1, const Graph& g2) {
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  for (const Edge& e : g2.edges())
    if (!g1.has_edge(e.u, e.v)) edges.push_back(e);
  return Graph::from_edge_list(std::max(g1.order(), g2.order()), edges);
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const int m = g1.order();
  const int n = g2.order();
  auto id = [n](Vertex a, Vertex b) { return a * n + b; };
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m) * g2.edges().size() + static_cast<std::size_t>(n) * g1.edges().size());
  for (Vertex b = 0; b < n; ++b)
    for (const Edge& e : g1.edges()) edges.push_back(make_edge(id(e.u, b), id(e.v, b)));
  for (Vertex a = 0; a < m; ++a)
    for (const Edge& e : g2.edges()) edges.push_back(make_edge(id(a, e.u), id(a, e.v)));
  return Graph::from_edge_list(m * n, edges);
}

Graph join(const Graph& g1, const Graph& g2) {
  const int m = g1.order();
  const int n = g2.order();
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  for (const Edge& e : g2.edges()) edges.push_back({e.u + m, e.v + m});
  for (Vertex a = 0; a < m; ++a)
    for (Vertex b = 0; b < n; ++b) edges.push_back({a, m + b});
  return Graph::from_edge_list(m + n, edges);
}

}  // namespace incol
