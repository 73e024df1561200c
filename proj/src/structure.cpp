#include "incol/structure.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace incol {

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          queue.push(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

OrderingCheck check_ordering(const Graph& g, std::span<const Vertex> ordering) {
  const int n = g.order();
  if (static_cast<int>(ordering.size()) != n) throw std::invalid_argument("ordering must list every vertex once");
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = ordering[i];
    if (v < 0 || v >= n || position[v] != -1) throw std::invalid_argument("ordering must be a permutation of 0..n-1");
    position[v] = i;
  }
  OrderingCheck check;
  check.ordering.assign(ordering.begin(), ordering.end());
  check.restricted = true;
  for (int i = 0; i < n; ++i) {
    std::vector<Vertex> earlier;
    for (Vertex w : g.neighbors(ordering[i]))
      if (position[w] < i) earlier.push_back(w);
    check.max_back_degree = std::max(check.max_back_degree, static_cast<int>(earlier.size()));
    for (std::size_t a = 0; a < earlier.size() && check.restricted; ++a)
      for (std::size_t b = a + 1; b < earlier.size(); ++b)
        if (!g.has_edge(earlier[a], earlier[b])) {
          check.restricted = false;
          break;
        }
  }
  return check;
}

StructureReport structure_report(const Graph& g, std::optional<std::span<const Vertex>> ordering) {
  StructureReport r;
  r.order = g.order();
  r.size = g.size();
  r.max_degree = g.max_degree();
  if (g.order() > 0 && g.min_degree() == g.max_degree()) r.regular_degree = g.max_degree();
  r.bipartite = is_bipartite(g);
  r.components = g.component_count();
  r.cycle_rank = r.size - r.order + r.components;
  r.bipartite_at_most_one_cycle = r.bipartite && r.cycle_rank <= 1;

  // Min-degree elimination, ties to the lowest label.
  std::vector<int> degree(g.order());
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < g.order(); ++v) {
    degree[v] = g.degree(v);
    queue.insert({degree[v], v});
  }
  std::vector<bool> removed(g.order(), false);
  std::vector<Vertex> eliminated;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    r.degeneracy = std::max(r.degeneracy, d);
    removed[v] = true;
    eliminated.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({degree[w], w});
      queue.insert({--degree[w], w});
    }
  }
  r.degeneracy_order.assign(eliminated.rbegin(), eliminated.rend());
  if (ordering) r.ordering = check_ordering(g, *ordering);
  return r;
}

}  // namespace incol
