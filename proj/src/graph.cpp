#include "incol/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "incol/errors.hpp"

namespace incol {

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("vertex count must be non-negative");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") has a vertex outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    g.edges_.push_back(make_edge(e.u, e.v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
  }
  for (const Edge& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    g.max_degree_ = std::max(g.max_degree_, static_cast<int>(nb.size()));
  }
  return g;
}

Graph Graph::null_graph(int n) { return from_edge_list(n, {}); }

int Graph::min_degree() const noexcept {
  if (n_ == 0) return 0;
  std::size_t best = adj_.front().size();
  for (const auto& nb : adj_) best = std::min(best, nb.size());
  return static_cast<int>(best);
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b) return std::nullopt;
  const Edge key = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  const auto& nb = adj_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

int Graph::component_count() const {
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n_;
  for (const Edge& e : edges_) {
    int a = find(e.u);
    int b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

}  // namespace incol
