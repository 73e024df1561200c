#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace incol {

using Vertex = int;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are sorted; edges() is sorted lexicographically. Copies are
/// cheap enough for desk-scale instances and are safe to share across threads.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from unordered pairs. Throws GraphError on a self-loop, a
  /// repeated pair (in either orientation) or a vertex outside 0..n-1.
  static Graph from_edge_list(int n, std::span<const Edge> edges);

  /// Edgeless graph on n vertices.
  static Graph null_graph(int n);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex u) const { return adj_.at(u); }
  int degree(Vertex u) const { return static_cast<int>(adj_.at(u).size()); }
  int max_degree() const noexcept { return max_degree_; }
  int min_degree() const noexcept;

  bool has_edge(Vertex a, Vertex b) const;
  /// Position of {a,b} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Number of connected components (isolated vertices count).
  int component_count() const;
  bool is_connected() const { return component_count() <= 1; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  int max_degree_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

}  // namespace incol
