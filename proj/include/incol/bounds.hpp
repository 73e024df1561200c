#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "incol/decomp.hpp"
#include "incol/graph.hpp"
#include "incol/incidence.hpp"

namespace incol {

/// Part i colors every arc into a star center with color i; the other arc of
/// each edge (into the leaf) takes st + its edge color. Throws
/// std::invalid_argument on an invalid decomposition or edge coloring.
IncidenceColoring star_forest_coloring(const Graph& g, const StarForestDecomposition& sfd, const EdgeColoring& ec);

/// Which sub-solver produced the inputs of an upper-bound construction.
enum class Provenance { exact, heuristic };

struct StarForestBound {
  IncidenceColoring coloring;
  StarForestDecomposition decomposition;
  EdgeColoring edge_coloring;
  Provenance star_forests = Provenance::exact;    ///< heuristic: first-fit decomposition
  Provenance edge_colors = Provenance::exact;     ///< heuristic: Misra-Gries with Δ+1
};

/// Runs the exact sub-solvers when within the guard, otherwise first-fit star
/// forests and Misra-Gries, and builds the coloring.
StarForestBound star_forest_upper_bound(const Graph& g, int arc_guard = kDefaultArcGuard);

/// ceil(2|E| / (|V| - γ)); 0 for an edgeless graph.
int lower_bound_domination(const Graph& g, int gamma);

struct Rational {
  long long num = 0;
  long long den = 1;  ///< > 0, gcd(num, den) = 1

  long long ceiling() const { return num >= 0 ? (num + den - 1) / den : -((-num) / den); }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// r |V| / (|V| - γ) for an r-regular graph. Throws std::invalid_argument when
/// g is not regular or γ = |V|.
Rational regular_lower_bound(const Graph& g, int gamma);

enum class NecConclusion { at_least_r_plus_2, inconclusive };

struct NecVerdict {
  int r = 0;
  int order = 0;
  bool divisible = false;               ///< (r+1) divides |V|
  std::optional<bool> class_one;        ///< χ' = r, only evaluated for odd r
  std::optional<int> chi_prime;
  NecConclusion conclusion = NecConclusion::inconclusive;

  /// "chi_i >= <r+2>" with the value filled in, or "inconclusive".
  std::string summary() const;
};

/// Checks both necessary conditions for χ_i = r + 1 on an r-regular graph.
/// Condition 2 is left unknown when the chromatic index is beyond the guard.
/// Throws std::invalid_argument on a non-regular graph.
NecVerdict necessary_conditions_regular(const Graph& g, int arc_guard = kDefaultArcGuard);

struct NamedBound {
  std::string name;
  int value = 0;
  std::string hypothesis;
};

struct ClassHints {
  bool planar = false;  ///< caller-asserted, never tested
  std::optional<std::vector<Vertex>> ordering;
};

struct ClassBounds {
  std::vector<NamedBound> upper;
  std::vector<NamedBound> lower;
};

/// Upper bounds whose hypotheses hold, plus "two_delta" (always) and the
/// lower bound "max_degree_plus_one" (graphs with an edge). Restricted
/// degeneracy is checked on the supplied ordering or, without one, on the
/// min-degree elimination ordering.
ClassBounds class_bounds(const Graph& g, const ClassHints& flags);

}  // namespace incol
