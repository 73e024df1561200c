#pragma once

#include <span>
#include <vector>

#include "incol/graph.hpp"
#include "incol/incidence.hpp"

namespace incol {

/// True iff every component of the edge set is a star: acyclic with at most one
/// vertex of degree >= 2 per component. Throws std::invalid_argument if an edge
/// is not in g or is repeated.
bool is_star_forest(const Graph& g, std::span<const Edge> part);

/// Center of each star in a star forest, one per component, sorted. A single
/// edge component is centered at its larger endpoint.
std::vector<Vertex> star_centers(std::span<const Edge> part);

struct StarForestDecomposition {
  std::vector<std::vector<Edge>> parts;
  std::vector<std::vector<Vertex>> centers;  ///< centers[i] = star_centers(parts[i])

  int size() const { return static_cast<int>(parts.size()); }
};

/// Parts partition E(g), each part is a star forest, centers match star_centers.
bool is_valid_decomposition(const Graph& g, const StarForestDecomposition& sfd);

/// First-fit decomposition in the solver's edge order.
StarForestDecomposition greedy_star_forests(const Graph& g);

struct StarArboricityResult {
  int st = 0;
  StarForestDecomposition witness;
};

/// Exact star arboricity. Palettes between ceil(|E| / (|V| - γ)) and the
/// first-fit size are decided by exhaustive search. Guard: 2|E| <= arc_guard.
StarArboricityResult star_arboricity_exact(const Graph& g, int arc_guard = kDefaultArcGuard);

struct EdgeColoring {
  std::vector<Edge> edges;  ///< same order as Graph::edges()
  std::vector<int> color;
  int palette_size = 0;
};

/// Edges sharing a vertex get distinct colors; all colors lie in the palette.
bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& ec);

/// Misra-Gries: one fan rotation and one alternating path flip per edge.
/// Uses at most Δ+1 colors; palette_size is the number used.
EdgeColoring edge_coloring_vizing(const Graph& g);

struct ChromaticIndexResult {
  int chi_prime = 0;
  EdgeColoring witness;
};

/// Decides Δ-colorability by backtracking; falls back to Vizing for Δ+1.
ChromaticIndexResult chromatic_index_exact(const Graph& g, int arc_guard = kDefaultArcGuard);

struct DominatingSet {
  std::vector<Vertex> vertices;  ///< sorted
};

bool is_dominating(const Graph& g, std::span<const Vertex> set);

struct DominationResult {
  int gamma = 0;
  DominatingSet witness;
};

/// Minimum dominating set by ascending-size search. Guard: |V| <= arc_guard.
DominationResult domination_number_exact(const Graph& g, int arc_guard = kDefaultArcGuard);

struct StarForestResult {
  int count = 0;
  std::vector<Edge> edges;
};

/// Largest star forest, |V| - γ edges: each vertex outside a minimum dominating
/// set is joined to its smallest dominator.
StarForestResult max_star_forest_edges(const Graph& g, int arc_guard = kDefaultArcGuard);

}  // namespace incol
