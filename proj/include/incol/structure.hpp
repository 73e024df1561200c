#pragma once

#include <optional>
#include <span>
#include <vector>

#include "incol/graph.hpp"

namespace incol {

/// Degeneracy data of a vertex ordering v_1..v_n.
struct OrderingCheck {
  std::vector<Vertex> ordering;
  /// Largest number of earlier neighbors of any vertex.
  int max_back_degree = 0;
  /// Every set of earlier neighbors induces a clique.
  bool restricted = false;
};

struct StructureReport {
  int order = 0;
  int size = 0;
  int max_degree = 0;
  std::optional<int> regular_degree;
  bool bipartite = false;
  int components = 0;
  /// |E| - |V| + components: the number of independent cycles.
  int cycle_rank = 0;
  bool bipartite_at_most_one_cycle = false;
  int degeneracy = 0;
  /// Reverse of the min-degree elimination order; back-degrees are <= degeneracy.
  std::vector<Vertex> degeneracy_order;
  std::optional<OrderingCheck> ordering;
};

bool is_bipartite(const Graph& g);

/// Throws std::invalid_argument unless ordering is a permutation of 0..n-1.
OrderingCheck check_ordering(const Graph& g, std::span<const Vertex> ordering);

StructureReport structure_report(const Graph& g, std::optional<std::span<const Vertex>> ordering = std::nullopt);

}  // namespace incol
