#include "incol/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "incol/errors.hpp"
#include "incol/structure.hpp"

namespace incol {

IncidenceColoring star_forest_coloring(const Graph& g, const StarForestDecomposition& sfd, const EdgeColoring& ec) {
  if (!is_valid_decomposition(g, sfd)) throw std::invalid_argument("invalid star forest decomposition");
  if (!is_proper_edge_coloring(g, ec)) throw std::invalid_argument("invalid edge coloring");

  const int parts = sfd.size();
  auto coloring = IncidenceColoring::blank(g, parts + ec.palette_size);
  for (int i = 0; i < parts; ++i) {
    const auto& centers = sfd.centers[i];
    for (const Edge& e : sfd.parts[i]) {
      const bool u_center = std::binary_search(centers.begin(), centers.end(), e.u);
      const Vertex center = u_center ? e.u : e.v;
      const Vertex leaf = u_center ? e.v : e.u;
      coloring.set_color({leaf, center}, i);
      coloring.set_color({center, leaf}, parts + ec.color[*g.edge_index(e.u, e.v)]);
    }
  }
  if (!verify(g, coloring).valid) throw IntegrityError("star forest + edge coloring construction is not proper");
  return coloring;
}

StarForestBound star_forest_upper_bound(const Graph& g, int arc_guard) {
  StarForestBound out;
  try {
    out.decomposition = star_arboricity_exact(g, arc_guard).witness;
  } catch (const TooLargeError&) {
    out.decomposition = greedy_star_forests(g);
    out.star_forests = Provenance::heuristic;
  }
  try {
    out.edge_coloring = chromatic_index_exact(g, arc_guard).witness;
  } catch (const TooLargeError&) {
    out.edge_coloring = edge_coloring_vizing(g);
    out.edge_colors = Provenance::heuristic;
  }
  out.coloring = star_forest_coloring(g, out.decomposition, out.edge_coloring);
  return out;
}

int lower_bound_domination(const Graph& g, int gamma) {
  if (g.size() == 0) return 0;
  const int free = g.order() - gamma;
  if (gamma < 1 || free <= 0) throw std::invalid_argument("domination number must satisfy 1 <= gamma < |V|");
  return (2 * g.size() + free - 1) / free;
}

Rational regular_lower_bound(const Graph& g, int gamma) {
  if (g.order() == 0 || g.min_degree() != g.max_degree()) throw std::invalid_argument("graph is not regular");
  const long long n = g.order();
  if (gamma < 1 || gamma >= n) throw std::invalid_argument("domination number must satisfy 1 <= gamma < |V|");
  Rational q{static_cast<long long>(g.max_degree()) * n, n - gamma};
  const long long d = std::gcd(q.num, q.den);
  q.num /= d;
  q.den /= d;
  return q;
}

std::string NecVerdict::summary() const {
  return conclusion == NecConclusion::at_least_r_plus_2 ? "chi_i >= " + std::to_string(r + 2) : "inconclusive";
}

NecVerdict necessary_conditions_regular(const Graph& g, int arc_guard) {
  if (g.order() == 0 || g.min_degree() != g.max_degree()) throw std::invalid_argument("graph is not regular");
  NecVerdict v;
  v.r = g.max_degree();
  v.order = g.order();
  v.divisible = v.order % (v.r + 1) == 0;
  if (v.r % 2 == 1) {
    try {
      v.chi_prime = chromatic_index_exact(g, arc_guard).chi_prime;
      v.class_one = *v.chi_prime == v.r;
    } catch (const TooLargeError&) {
    }
  }
  const bool failed = !v.divisible || (v.class_one && !*v.class_one);
  v.conclusion = failed ? NecConclusion::at_least_r_plus_2 : NecConclusion::inconclusive;
  return v;
}

ClassBounds class_bounds(const Graph& g, const ClassHints& flags) {
  ClassBounds out;
  const int delta = g.max_degree();
  out.upper.push_back({"two_delta", 2 * delta, "any graph"});
  if (g.size() > 0) out.lower.push_back({"max_degree_plus_one", delta + 1, "arcs out of a vertex plus one arc into it"});

  if (flags.planar) {
    if (delta == 6) out.upper.push_back({"planar", 12, "planar (declared), max degree 6"});
    else out.upper.push_back({"planar", delta + 5, "planar (declared), max degree != 6"});
  }

  const auto report = structure_report(g);
  const auto check = flags.ordering ? check_ordering(g, *flags.ordering) : check_ordering(g, report.degeneracy_order);
  if (check.restricted) {
    const int k = check.max_back_degree;
    out.upper.push_back({"restricted_k_degenerate", delta + k + 2,
                         std::string(flags.ordering ? "supplied" : "min-degree") +
                             " ordering is restricted " + std::to_string(k) + "-degenerate"});
  }
  if (report.bipartite_at_most_one_cycle) {
    out.upper.push_back({"bipartite_at_most_one_cycle", delta + 2, "bipartite with at most one cycle"});
  }
  return out;
}

}  // namespace incol
