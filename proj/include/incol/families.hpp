#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "incol/graph.hpp"

namespace incol {

enum class Family {
  cycle,               // cycle:n              n >= 3
  path,                // path:n               n >= 1 vertices
  complete,            // complete:n           n >= 1
  complete_bipartite,  // complete_bipartite:m,n   m >= n >= 1, parts 0..m-1 and m..m+n-1
  star,                // star:k               K_{1,k}, center 0
  wheel,               // wheel:k              K_1 join C_k, hub 0, k >= 3
  grid,                // grid:r,c             P_r x P_c
  prism,               // prism:k              C_k x K_2, k >= 3
  petersen,            // petersen             Kneser K(5,2)
  random_gnp,          // random_gnp:n,p,seed
  random_ktree,        // random_ktree:k,n,seed   construction order 0..n-1
  matching_pair,       // matching_pair:n,side     side 0: u0u1,u2u3,...  side 1: u1u2,...,u_{n-1}u0
  null_graph,          // null:n
};

/// A family tag plus its parameters. Random families carry their seed, so the
/// description alone determines the graph.
struct FamilySpec {
  Family family = Family::null_graph;
  std::vector<long long> ints;
  double probability = 0.0;
  std::uint64_t seed = 0;

  /// Canonical "name:args" form; parse_family(id()) reproduces the spec.
  std::string id() const;
};

/// Parses "NAME:ARGS". Accepted shorthands: "matching:10a" / "matching:10b"
/// for the two matchings whose union is C_10, and a missing seed on random
/// families, which then takes `default_seed`. Throws GraphError.
FamilySpec parse_family(std::string_view text, std::uint64_t default_seed = 0);

/// Builds the family member. Throws GraphError on out-of-range parameters.
Graph generate(const FamilySpec& spec);

std::string_view family_name(Family f);

}  // namespace incol
