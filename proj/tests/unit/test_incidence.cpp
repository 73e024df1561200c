#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"

#include "incol/decomp.hpp"
#include "incol/errors.hpp"
#include "incol/families.hpp"
#include "incol/graph_io.hpp"
#include "incol/incidence.hpp"

#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace incol;

namespace {

Graph fam(const std::string& id) { return generate(parse_family(id)); }

// Exhaustive pairwise check, independent of verify().
bool proper_by_pairs(const Graph& g, const IncidenceColoring& c) {
  const auto list = oracle::all_arcs(g);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      const Arc a{list[i].tail, list[i].head}, b{list[j].tail, list[j].head};
      if (oracle::arcs_conflict(list[i], list[j]) && c.color_of(a) == c.color_of(b)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("arcs are the sorted orientations of the edges") {
  CHECK(arcs(fam("complete:3")).size() == 6);
  CHECK(arcs(fam("complete:4")).size() == 12);
  const auto single = arcs(fam("path:2"));
  REQUIRE(single.size() == 2);
  CHECK(single[0] == Arc{0, 1});
  CHECK(single[1] == Arc{1, 0});
  for (const auto& [id, g] : corpus::standard()) {
    const auto list = arcs(g);
    CHECK(list.size() == static_cast<std::size_t>(2 * g.size()));
    CHECK(std::is_sorted(list.begin(), list.end()));
    for (std::size_t i = 0; i < list.size(); ++i) CHECK(arc_index(g, list[i]) == i);
  }
  CHECK_FALSE(arc_index(fam("path:3"), {0, 2}).has_value());
}

TEST_CASE("arc adjacency cases") {
  const Vertex u = 0, v = 1, w = 2, z = 3;
  CHECK(adjacent({u, v}, {u, w}));
  CHECK(adjacent({u, v}, {v, w}));
  CHECK(adjacent({v, w}, {u, v}));
  CHECK_FALSE(adjacent({u, v}, {w, z}));
  CHECK(adjacent({u, v}, {v, u}));
  // Arcs sharing only a head do not conflict.
  CHECK_FALSE(adjacent({u, v}, {w, v}));
}

TEST_CASE("conflict relation is symmetric and matches the predicate") {
  for (const auto& [id, g] : corpus::standard()) {
    CAPTURE(id);
    const auto list = arcs(g);
    const auto conflicts = arc_conflicts(g);
    for (std::size_t a = 0; a < list.size(); ++a) {
      std::vector<bool> marked(list.size(), false);
      for (int b : conflicts[a]) marked[b] = true;
      for (std::size_t b = 0; b < list.size(); ++b) {
        if (a == b) continue;
        CHECK(adjacent(list[a], list[b]) == adjacent(list[b], list[a]));
        CHECK(marked[b] == adjacent(list[a], list[b]));
      }
      CHECK(adjacent(list[a], {list[a].head, list[a].tail}));
    }
  }
}

TEST_CASE("verify: head-index coloring of K_n, violations and incompleteness") {
  for (int n = 2; n <= 7; ++n) {
    const Graph k = fam("complete:" + std::to_string(n));
    auto c = IncidenceColoring::blank(k, n);
    for (const Arc& a : arcs(k)) c.set_color(a, a.head);
    CHECK(verify(k, c).valid);
    CHECK(proper_by_pairs(k, c));
    CHECK(c.colors_used() == n);
  }

  // Distinct colors everywhere except one edge whose two arcs share color 0.
  const Graph c4 = fam("cycle:4");
  auto wide = IncidenceColoring::blank(c4, 8);
  int next = 1;
  for (const Arc& a : arcs(c4)) wide.set_color(a, (a == Arc{0, 1} || a == Arc{1, 0}) ? 0 : next++);
  const auto verdict = verify(c4, wide);
  CHECK_FALSE(verdict.valid);
  REQUIRE(verdict.violations.size() == 1);
  CHECK(verdict.violations[0].color == 0);

  auto partial = IncidenceColoring::blank(c4, 4);
  CHECK_THROWS_AS(verify(c4, partial), IncompleteColoringError);

  const Graph edgeless = fam("null:3");
  const auto empty = IncidenceColoring::blank(edgeless, 0);
  CHECK(verify(edgeless, empty).valid);
  CHECK(empty.colors_used() == 0);

  auto out_of_palette = IncidenceColoring::blank(fam("path:2"), 1);
  out_of_palette.set_color_at(0, 0);
  out_of_palette.set_color_at(1, 1);
  CHECK_THROWS_AS(verify(fam("path:2"), out_of_palette), std::invalid_argument);
  CHECK_THROWS_AS(verify(fam("path:3"), greedy_coloring(fam("path:2"))), std::invalid_argument);
}

TEST_CASE("in and out color sets") {
  const Graph k3 = fam("complete:3");
  auto c = IncidenceColoring::blank(k3, 3);
  for (const Arc& a : arcs(k3)) c.set_color(a, a.head);
  CHECK(c.colors_into(0) == std::vector<int>{0});
  CHECK(c.colors_out_of(0) == std::vector<int>{1, 2});
  CHECK_THROWS_AS((void)c.color_of({0, 0}), std::out_of_range);
}

TEST_CASE("greedy is valid, deterministic and within the arc-degree bound") {
  CHECK(greedy_coloring(fam("star:3")).palette_size() == 4);
  const auto c5 = greedy_coloring(fam("cycle:5"), ArcOrder::natural);
  CHECK(verify(fam("cycle:5"), c5).valid);
  CHECK(c5.palette_size() <= 4);
  CHECK(greedy_coloring(fam("complete:1")).palette_size() == 0);

  for (const auto& [id, g] : corpus::standard()) {
    CAPTURE(id);
    for (ArcOrder order : {ArcOrder::natural, ArcOrder::head_degree}) {
      const auto c = greedy_coloring(g, order);
      CHECK(verify(g, c).valid);
      CHECK(c == greedy_coloring(g, order));
      int bound = 0;
      for (const Arc& a : arcs(g)) bound = std::max(bound, 2 * g.degree(a.tail) + g.degree(a.head) - 2);
      CHECK(c.palette_size() <= bound + 1);
      CHECK(c.palette_size() <= 2 * g.max_degree() + 1);
    }
  }
}

TEST_CASE("exact solver on named graphs") {
  CHECK(exact_chi_i(fam("cycle:5")).chi == 4);
  CHECK(exact_chi_i(fam("cycle:6")).chi == 3);
  CHECK(oracle::naive_chi_i(fam("cycle:6")) == 3);
  CHECK(exact_chi_i(fam("complete:4")).chi == 4);
  CHECK(exact_chi_i(fam("path:2")).chi == 2);
  CHECK(exact_chi_i(fam("null:4")).chi == 0);
  CHECK(exact_chi_i(fam("star:5")).chi == 6);
  CHECK(exact_chi_i(fam("petersen")).chi == 5);
  CHECK(exact_chi_i(fam("complete_bipartite:3,3")).chi == 5);
  for (int n = 3; n <= 12; ++n) CHECK(exact_chi_i(fam("cycle:" + std::to_string(n))).chi == (n % 3 == 0 ? 3 : 4));
}

TEST_CASE("exact witnesses are valid and use exactly chi colors") {
  for (const auto& [id, g] : corpus::standard()) {
    CAPTURE(id);
    const auto r = exact_chi_i(g);
    CHECK(verify(g, r.witness).valid);
    CHECK(proper_by_pairs(g, r.witness));
    CHECK(r.witness.palette_size() == r.chi);
    CHECK(r.witness.colors_used() == r.chi);
    CHECK(r.chi >= g.max_degree() + 1);
    CHECK(r.chi <= 2 * g.max_degree());
    if (r.chi > g.max_degree() + 1) CHECK_FALSE(find_incidence_coloring(g, r.chi - 1).has_value());
  }
}

TEST_CASE("exact solver equals naive enumeration on every connected graph up to 5 vertices") {
  int checked = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : oracle::connected_graphs_up_to_iso(n)) {
      CAPTURE(to_graph6(g));
      CHECK(exact_chi_i(g).chi == oracle::naive_chi_i(g));
      ++checked;
    }
  }
  CHECK(checked == 1 + 1 + 2 + 6 + 21);
}

TEST_CASE("exact solver hints and guard") {
  const Graph c5 = fam("cycle:5");
  ExactOptions hinted;
  hinted.lower_hint = 4;
  hinted.upper_hint = 5;
  CHECK(exact_chi_i(c5, hinted).chi == 4);

  ExactOptions wrong_upper;
  wrong_upper.upper_hint = 3;
  CHECK_THROWS_AS(exact_chi_i(c5, wrong_upper), std::invalid_argument);

  ExactOptions tight;
  tight.arc_guard = 9;
  CHECK_THROWS_AS(exact_chi_i(c5, tight), TooLargeError);
  CHECK_THROWS_AS(find_incidence_coloring(c5, 4, 9), TooLargeError);
  CHECK_THROWS_AS(max_independent_arc_set(c5, 9), TooLargeError);

  ExactOptions unguarded;
  unguarded.arc_guard = -1;
  CHECK(exact_chi_i(fam("grid:6,6"), unguarded).chi == 5);
}

TEST_CASE("find_incidence_coloring decides a fixed palette") {
  CHECK_FALSE(find_incidence_coloring(fam("cycle:5"), 3).has_value());
  const auto c = find_incidence_coloring(fam("cycle:5"), 4);
  REQUIRE(c.has_value());
  CHECK(verify(fam("cycle:5"), *c).valid);
  CHECK_FALSE(find_incidence_coloring(fam("complete:4"), 3).has_value());
}

TEST_CASE("maximum independent arc sets") {
  for (int k = 1; k <= 6; ++k) {
    const auto set = max_independent_arc_set(fam("star:" + std::to_string(k)));
    CHECK(set.size() == static_cast<std::size_t>(k));
  }
  CHECK(max_independent_arc_set(fam("cycle:4")).size() == 2);
  for (int n = 2; n <= 5; ++n) {
    const Graph k = fam("complete:" + std::to_string(n));
    CHECK(max_independent_arc_set(k).size() == static_cast<std::size_t>(n - 1));
    CHECK(oracle::brute_max_independent_arcs(k) == n - 1);
  }
  for (const auto& [id, g] : corpus::standard()) {
    CAPTURE(id);
    const auto set = max_independent_arc_set(g);
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j) CHECK_FALSE(adjacent(set[i], set[j]));
    CHECK(static_cast<int>(set.size()) == g.order() - oracle::brute_gamma(g));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate(FamilySpec{Family::random_gnp, {7}, 0.4, seed});
    CHECK(static_cast<int>(max_independent_arc_set(g).size()) == oracle::brute_max_independent_arcs(g));
  }
}

TEST_CASE("one arc per edge colored by a proper edge coloring is conflict free") {
  for (const auto& [id, g] : corpus::standard()) {
    CAPTURE(id);
    const auto ec = edge_coloring_vizing(g);
    // Orient each edge toward its larger endpoint.
    std::vector<oracle::RefArc> chosen;
    std::vector<int> color;
    for (std::size_t i = 0; i < ec.edges.size(); ++i) {
      chosen.push_back({ec.edges[i].u, ec.edges[i].v});
      color.push_back(ec.color[i]);
    }
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = i + 1; j < chosen.size(); ++j)
        if (oracle::arcs_conflict(chosen[i], chosen[j])) CHECK(color[i] != color[j]);
  }
}

TEST_CASE("arcs into the centers of a star forest are independent") {
  for (const auto& [id, g] : corpus::standard()) {
    CAPTURE(id);
    for (const auto& part : greedy_star_forests(g).parts) {
      const auto centers = star_centers(part);
      std::vector<Arc> into;
      for (const Edge& e : part) {
        const bool v_center = std::binary_search(centers.begin(), centers.end(), e.v);
        into.push_back(v_center ? Arc{e.u, e.v} : Arc{e.v, e.u});
      }
      for (std::size_t i = 0; i < into.size(); ++i)
        for (std::size_t j = i + 1; j < into.size(); ++j) CHECK_FALSE(adjacent(into[i], into[j]));
    }
  }
}
