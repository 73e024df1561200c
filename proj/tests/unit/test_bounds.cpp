#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "incol/bounds.hpp"
#include "incol/compose.hpp"
#include "incol/decomp.hpp"
#include "incol/errors.hpp"
#include "incol/families.hpp"
#include "incol/incidence.hpp"
#include "incol/operations.hpp"
#include "incol/report.hpp"
#include "incol/structure.hpp"

#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace incol;

namespace {

Graph fam(const std::string& id) { return generate(parse_family(id)); }

std::optional<int> bound_named(const std::vector<NamedBound>& list, const std::string& name) {
  for (const auto& b : list)
    if (b.name == name) return b.value;
  return std::nullopt;
}

std::optional<int> bound_named(const std::vector<ReportBound>& list, const std::string& name) {
  for (const auto& b : list)
    if (b.name == name) return b.value;
  return std::nullopt;
}

}  // namespace

TEST_CASE("star-forest construction on small cases") {
  const Graph c5 = fam("cycle:5");
  const auto sfd = star_arboricity_exact(c5).witness;
  const auto ec = chromatic_index_exact(c5).witness;
  const auto c = star_forest_coloring(c5, sfd, ec);
  CHECK(verify(c5, c).valid);
  CHECK(c.palette_size() <= 5);

  const Graph k2 = fam("complete:2");
  const auto k2c = star_forest_coloring(k2, star_arboricity_exact(k2).witness, chromatic_index_exact(k2).witness);
  CHECK(k2c.palette_size() == 2);
  // The arc into the center (vertex 1, the larger endpoint) takes part color 0.
  CHECK(k2c.color_of({0, 1}) == 0);
  CHECK(k2c.color_of({1, 0}) == 1);
}

TEST_CASE("star-forest construction rejects invalid inputs") {
  const Graph c5 = fam("cycle:5");
  auto sfd = star_arboricity_exact(c5).witness;
  const auto ec = chromatic_index_exact(c5).witness;
  auto broken_ec = ec;
  broken_ec.color.assign(broken_ec.color.size(), 0);
  CHECK_THROWS_AS(star_forest_coloring(c5, sfd, broken_ec), std::invalid_argument);
  sfd.parts[0].pop_back();
  CHECK_THROWS_AS(star_forest_coloring(c5, sfd, ec), std::invalid_argument);
}

TEST_CASE("sandwich on the corpus") {
  for (const auto& [id, g] : corpus::standard()) {
    CAPTURE(id);
    if (g.size() == 0) continue;
    const int gamma = oracle::brute_gamma(g);
    const int lower = lower_bound_domination(g, gamma);
    const auto st = star_arboricity_exact(g);
    const auto chi_prime = chromatic_index_exact(g);
    const auto construction = star_forest_coloring(g, st.witness, chi_prime.witness);
    const int chi = exact_chi_i(g).chi;
    CHECK(verify(g, construction).valid);
    CHECK(lower <= chi);
    CHECK(chi <= construction.palette_size());
    CHECK(construction.palette_size() <= st.st + chi_prime.chi_prime);

    const auto built = star_forest_upper_bound(g);
    CHECK(built.star_forests == Provenance::exact);
    CHECK(built.edge_colors == Provenance::exact);
    CHECK(built.coloring.palette_size() == st.st + chi_prime.chi_prime);
  }
}

TEST_CASE("star-forest pipeline falls back to heuristics beyond the guard") {
  const Graph g = fam("complete:12");
  const auto built = star_forest_upper_bound(g);
  CHECK(built.star_forests == Provenance::heuristic);
  CHECK(built.edge_colors == Provenance::heuristic);
  CHECK(verify(g, built.coloring).valid);
  CHECK(built.coloring.palette_size() <= built.decomposition.size() + g.max_degree() + 1);
}

TEST_CASE("domination lower bound arithmetic") {
  CHECK(lower_bound_domination(fam("cycle:5"), 2) == 4);
  CHECK(lower_bound_domination(fam("cycle:6"), 2) == 3);
  CHECK(lower_bound_domination(fam("complete:4"), 1) == 4);
  CHECK(lower_bound_domination(fam("null:3"), 3) == 0);
}

TEST_CASE("regular lower bound") {
  CHECK(regular_lower_bound(fam("cycle:5"), 2) == Rational{10, 3});
  CHECK(regular_lower_bound(fam("cycle:5"), 2).ceiling() == 4);
  CHECK(regular_lower_bound(fam("cycle:5"), 2).str() == "10/3");
  CHECK(regular_lower_bound(fam("complete:4"), 1).ceiling() == 4);
  CHECK(regular_lower_bound(fam("cycle:6"), 2).ceiling() == 3);
  CHECK_THROWS_AS(regular_lower_bound(fam("path:3"), 1), std::invalid_argument);
  for (const auto& [id, g] : corpus::standard()) {
    if (g.size() == 0 || !structure_report(g).regular_degree) continue;
    CAPTURE(id);
    const int gamma = oracle::brute_gamma(g);
    CHECK(regular_lower_bound(g, gamma).ceiling() == lower_bound_domination(g, gamma));
  }
}

TEST_CASE("necessary conditions for r+1 colors on regular graphs") {
  const auto k33 = necessary_conditions_regular(fam("complete_bipartite:3,3"));
  CHECK(k33.r == 3);
  CHECK_FALSE(k33.divisible);
  CHECK(k33.summary() == "chi_i >= 5");
  CHECK(k33.conclusion == NecConclusion::at_least_r_plus_2);

  const auto pet = necessary_conditions_regular(fam("petersen"));
  CHECK_FALSE(pet.divisible);
  CHECK(pet.chi_prime == 4);
  CHECK(pet.class_one == false);
  CHECK(pet.conclusion == NecConclusion::at_least_r_plus_2);

  const auto c6 = necessary_conditions_regular(fam("cycle:6"));
  CHECK(c6.divisible);
  CHECK_FALSE(c6.class_one.has_value());
  CHECK(c6.conclusion == NecConclusion::inconclusive);
  CHECK(c6.summary() == "inconclusive");

  CHECK_THROWS_AS(necessary_conditions_regular(fam("path:3")), std::invalid_argument);
}

TEST_CASE("regular graphs with chi_i = r+1 satisfy both necessary conditions") {
  int tight = 0;
  for (const auto& [id, g] : corpus::standard()) {
    const auto s = structure_report(g);
    if (!s.regular_degree || g.size() == 0) continue;
    CAPTURE(id);
    const int r = *s.regular_degree;
    const int chi = exact_chi_i(g).chi;
    const auto nec = necessary_conditions_regular(g);
    if (chi == r + 1) {
      ++tight;
      CHECK(g.order() % (r + 1) == 0);
      if (r % 2 == 1) CHECK(chromatic_index_exact(g).chi_prime == r);
      CHECK(nec.conclusion == NecConclusion::inconclusive);
    }
    if (nec.conclusion == NecConclusion::at_least_r_plus_2) CHECK(chi >= r + 2);
  }
  CHECK(tight > 0);
}

TEST_CASE("graph-class upper bounds") {
  ClassHints planar;
  planar.planar = true;
  const auto w8 = class_bounds(fam("wheel:8"), planar);
  CHECK(bound_named(w8.upper, "planar") == 13);
  CHECK(bound_named(w8.upper, "two_delta") == 16);
  CHECK(bound_named(w8.lower, "max_degree_plus_one") == 9);
  for (int k = 7; k <= 9; ++k) {
    const Graph w = fam("wheel:" + std::to_string(k));
    CHECK(bound_named(class_bounds(w, planar).upper, "planar") == w.max_degree() + 5);
  }
  CHECK(bound_named(class_bounds(fam("wheel:6"), planar).upper, "planar") == 12);
  CHECK_FALSE(bound_named(class_bounds(fam("wheel:8"), {}).upper, "planar").has_value());

  // Bipartite, one cycle, Δ = 4: C4 with two pendant vertices on vertex 0 and one on 2.
  const std::vector<Edge> b{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {0, 5}, {2, 6}};
  const Graph uni = Graph::from_edge_list(7, b);
  REQUIRE(uni.max_degree() == 4);
  CHECK(bound_named(class_bounds(uni, {}).upper, "bipartite_at_most_one_cycle") == 6);
  CHECK_FALSE(bound_named(class_bounds(fam("complete_bipartite:3,3"), {}).upper, "bipartite_at_most_one_cycle"));

  // A 2-tree with Δ = 4 in its construction order.
  Graph kt = Graph::null_graph(0);
  for (std::uint64_t seed = 0;; ++seed) {
    kt = fam("random_ktree:2,7," + std::to_string(seed));
    if (kt.max_degree() == 4) break;
  }
  ClassHints ordered;
  ordered.ordering = std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6};
  CHECK(bound_named(class_bounds(kt, ordered).upper, "restricted_k_degenerate") == 4 + 2 + 2);
  // C4 in natural order is 2-degenerate but not restricted.
  ClassHints c4order;
  c4order.ordering = std::vector<Vertex>{0, 1, 2, 3};
  CHECK_FALSE(bound_named(class_bounds(fam("cycle:4"), c4order).upper, "restricted_k_degenerate"));
}

TEST_CASE("graph-class bounds hold on the corpus") {
  for (const auto& [id, g] : corpus::standard()) {
    if (g.size() == 0) continue;
    CAPTURE(id);
    const int chi = exact_chi_i(g).chi;
    const auto bounds = class_bounds(g, {});
    for (const auto& b : bounds.upper) CHECK(chi <= b.value);
    for (const auto& b : bounds.lower) CHECK(chi >= b.value);
  }
}

TEST_CASE("union composer") {
  const Graph a = fam("matching:10a"), b = fam("matching:10b");
  const auto ca = exact_chi_i(a).witness, cb = exact_chi_i(b).witness;
  CHECK(ca.palette_size() == 2);
  const auto u = compose_union_coloring(a, ca, b, cb);
  CHECK(u.graph == fam("cycle:10"));
  CHECK(u.coloring.palette_size() == 4);
  CHECK(verify(u.graph, u.coloring).valid);
  CHECK(exact_chi_i(u.graph).chi == 4);

  const Graph p = fam("petersen");
  const auto cp = exact_chi_i(p).witness;
  const auto with_empty = compose_union_coloring(p, cp, fam("null:10"), IncidenceColoring::blank(fam("null:10"), 0));
  CHECK(with_empty.coloring == cp);

  // Two stars on disjoint edge sets.
  const std::vector<Edge> s1{{0, 1}, {0, 2}}, s2{{3, 1}, {3, 2}, {3, 4}};
  const Graph g1 = Graph::from_edge_list(5, s1), g2 = Graph::from_edge_list(5, s2);
  const auto star_union = compose_union_coloring(g1, greedy_coloring(g1), g2, greedy_coloring(g2));
  CHECK(verify(star_union.graph, star_union.coloring).valid);

  // Shared edges keep the first operand's colors.
  const Graph c4 = fam("cycle:4");
  const auto c4c = exact_chi_i(c4).witness;
  const auto self = compose_union_coloring(c4, c4c, c4, c4c);
  CHECK(self.graph == c4);
  for (const Arc& arc : arcs(c4)) CHECK(self.coloring.color_of(arc) == c4c.color_of(arc));

  auto invalid = c4c;
  invalid.set_color_at(0, invalid.colors()[1]);
  CHECK_THROWS_AS(compose_union_coloring(c4, invalid, c4, c4c), std::invalid_argument);
}

TEST_CASE("cartesian composer") {
  const Graph c3 = fam("cycle:3");
  const auto cc = exact_chi_i(c3).witness;
  const auto sq = compose_cartesian_coloring(c3, cc, c3, cc);
  CHECK(sq.coloring.palette_size() == 6);
  CHECK(verify(sq.graph, sq.coloring).valid);
  CHECK(exact_chi_i(sq.graph).chi == 6);

  const Graph p = fam("petersen");
  const auto cp = exact_chi_i(p).witness;
  const Graph k1 = fam("complete:1");
  const auto same = compose_cartesian_coloring(p, cp, k1, IncidenceColoring::blank(k1, 0));
  CHECK(same.coloring == cp);

  const Graph k2 = fam("complete:2");
  const auto kc = exact_chi_i(k2).witness;
  const auto c4 = compose_cartesian_coloring(k2, kc, k2, kc);
  CHECK(verify(c4.graph, c4.coloring).valid);
  CHECK(c4.coloring.palette_size() <= 4);
  CHECK(exact_chi_i(c4.graph).chi == 4);
}

TEST_CASE("join composer on the named examples") {
  const auto k32 = compose_join_coloring(fam("null:3"), IncidenceColoring::blank(fam("null:3"), 0), fam("null:2"),
                                         IncidenceColoring::blank(fam("null:2"), 0));
  CHECK(k32.branch == JoinBranch::shared_base);
  CHECK(k32.coloring.palette_size() == 5);
  CHECK(verify(k32.graph, k32.coloring).valid);
  CHECK(exact_chi_i(k32.graph).chi == 5);

  const Graph k3 = fam("complete:3"), k2 = fam("complete:2");
  const auto k5 = compose_join_coloring(k3, exact_chi_i(k3).witness, k2, exact_chi_i(k2).witness);
  CHECK(k5.graph == fam("complete:5"));
  CHECK(k5.coloring.palette_size() == 5);
  CHECK(verify(k5.graph, k5.coloring).valid);

  const Graph c4 = fam("cycle:4");
  const auto cc = exact_chi_i(c4).witness;
  const auto c4c4 = compose_join_coloring(c4, cc, c4, cc);
  CHECK(verify(c4c4.graph, c4c4.coloring).valid);
  CHECK(c4c4.coloring.palette_size() <= 8);

  // One-vertex side: only the head-index branch applies.
  const Graph k1 = fam("complete:1");
  const auto wheel = compose_join_coloring(k1, IncidenceColoring::blank(k1, 0), c4, cc);
  CHECK(wheel.branch == JoinBranch::head_index);
  CHECK(verify(wheel.graph, wheel.coloring).valid);
}

TEST_CASE("complete bipartite cross colorings") {
  for (int m = 1; m <= 30; ++m) {
    for (int n = 1; n <= 30; ++n) {
      const auto c = complete_bipartite_arc_coloring(m, n);
      CHECK(c.palette_size() == std::max(m, n) + 2);
      CHECK(verify(join(Graph::null_graph(m), Graph::null_graph(n)), c).valid);
    }
  }
  // One color fewer is impossible once both sides have two vertices.
  for (int m = 2; m <= 5; ++m) {
    for (int n = 2; n <= m; ++n) {
      const Graph k = join(Graph::null_graph(m), Graph::null_graph(n));
      CHECK_FALSE(find_incidence_coloring(k, m + 1).has_value());
      CHECK(exact_chi_i(k).chi == m + 2);
    }
  }
}

TEST_CASE("large joins use the shared-base branch") {
  const Graph p = fam("petersen");
  const auto cp = exact_chi_i(p).witness;
  const auto r = compose_join_coloring(p, cp, p, cp);
  CHECK(r.branch == JoinBranch::shared_base);
  CHECK(r.coloring.palette_size() == 5 + 10 + 2);
  CHECK(verify(r.graph, r.coloring).valid);
}

TEST_CASE("randomized compositions stay valid within budget") {
  std::mt19937_64 rng(2024);
  const std::vector<std::string> pool{"cycle:4", "cycle:5", "path:3", "star:3", "complete:3", "complete:4",
                                      "null:2", "null:3", "petersen", "wheel:4", "grid:2,3"};
  for (int trial = 0; trial < 60; ++trial) {
    const std::string a = pool[rng() % pool.size()], b = pool[rng() % pool.size()];
    CAPTURE(a);
    CAPTURE(b);
    const Graph g1 = fam(a), g2 = fam(b);
    const bool exact = rng() % 2 == 0;
    const auto c1 = exact ? exact_chi_i(g1).witness : greedy_coloring(g1);
    const auto c2 = exact ? exact_chi_i(g2).witness : greedy_coloring(g2);
    const int p1 = c1.palette_size(), p2 = c2.palette_size();
    switch (trial % 3) {
      case 0: {
        const auto r = compose_union_coloring(g1, c1, g2, c2);
        CHECK(verify(r.graph, r.coloring).valid);
        CHECK(r.coloring.palette_size() <= p1 + p2);
        break;
      }
      case 1: {
        const auto r = compose_cartesian_coloring(g1, c1, g2, c2);
        CHECK(verify(r.graph, r.coloring).valid);
        CHECK(r.coloring.palette_size() <= p1 + p2);
        break;
      }
      default: {
        const auto r = compose_join_coloring(g1, c1, g2, c2);
        const int m = g1.order(), n = g2.order();
        CHECK(verify(r.graph, r.coloring).valid);
        int budget = m + n;
        if (std::min(m, n) >= 2) budget = std::min(budget, std::max(p1, p2) + std::max(m, n) + 2);
        CHECK(r.coloring.palette_size() <= budget);
      }
    }
  }
}

TEST_CASE("bound report for cycles, Petersen and wheels") {
  const auto c5 = build_bound_report(fam("cycle:5"));
  REQUIRE(c5.exact.has_value());
  CHECK(c5.exact->chi == 4);
  CHECK(c5.lower.front().value == 4);
  CHECK(bound_named(c5.lower, "domination") == 4);
  for (std::size_t i = 1; i < c5.lower.size(); ++i) CHECK(c5.lower[i - 1].value >= c5.lower[i].value);
  for (std::size_t i = 1; i < c5.upper.size(); ++i) CHECK(c5.upper[i - 1].value <= c5.upper[i].value);

  const auto pet = build_bound_report(fam("petersen"));
  REQUIRE(pet.nec.has_value());
  CHECK(pet.nec->summary() == "chi_i >= 5");
  CHECK_FALSE(pet.nec->divisible);

  ReportOptions planar;
  planar.planar = true;
  const auto w8 = build_bound_report(fam("wheel:8"), planar);
  CHECK(bound_named(w8.upper, "planar") == 13);

  ReportOptions skip;
  skip.exact = ExactMode::skip;
  CHECK_FALSE(build_bound_report(fam("cycle:5"), skip).exact.has_value());

  const auto big = build_bound_report(fam("complete:12"));
  CHECK_FALSE(big.exact.has_value());
  CHECK_FALSE(big.warnings.empty());
  REQUIRE(big.star_forest.has_value());
  CHECK(verify(fam("complete:12"), big.star_forest->coloring).valid);
}

TEST_CASE("bound report brackets the exact value on the corpus") {
  for (const auto& [id, g] : corpus::standard()) {
    CAPTURE(id);
    const auto report = build_bound_report(g);
    REQUIRE(report.exact.has_value());
    for (const auto& b : report.lower) CHECK(b.value <= report.exact->chi);
    for (const auto& b : report.upper) CHECK(report.exact->chi <= b.value);
  }
}
