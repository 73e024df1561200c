#include <algorithm>
#include <string>

#include "detail/dsatur.hpp"
#include "detail/guard.hpp"
#include "incol/decomp.hpp"
#include "incol/errors.hpp"

namespace incol {

bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& ec) {
  if (!std::equal(ec.edges.begin(), ec.edges.end(), g.edges().begin(), g.edges().end())) return false;
  if (ec.color.size() != ec.edges.size()) return false;
  std::vector<std::vector<char>> seen(g.order(), std::vector<char>(ec.palette_size, 0));
  for (std::size_t i = 0; i < ec.edges.size(); ++i) {
    const int c = ec.color[i];
    if (c < 0 || c >= ec.palette_size) return false;
    for (Vertex x : {ec.edges[i].u, ec.edges[i].v}) {
      if (seen[x][c]) return false;
      seen[x][c] = 1;
    }
  }
  return true;
}

namespace {

class MisraGries {
 public:
  explicit MisraGries(const Graph& g)
      : g_(g), palette_(g.max_degree() + 1), color_(g.edges().size(), -1), at_(g.order(), std::vector<Vertex>(palette_, -1)) {}

  EdgeColoring run() {
    for (const Edge& e : g_.edges()) color_edge(e.u, e.v);
    EdgeColoring ec;
    ec.edges.assign(g_.edges().begin(), g_.edges().end());
    ec.color = color_;
    ec.palette_size = color_.empty() ? 0 : *std::max_element(color_.begin(), color_.end()) + 1;
    return ec;
  }

 private:
  int color(Vertex a, Vertex b) const { return color_[*g_.edge_index(a, b)]; }
  bool is_free(Vertex v, int c) const { return at_[v][c] == -1; }

  int lowest_free(Vertex v) const {
    int c = 0;
    while (!is_free(v, c)) ++c;
    return c;
  }

  void uncolor(Vertex a, Vertex b) {
    int& c = color_[*g_.edge_index(a, b)];
    if (c < 0) return;
    at_[a][c] = -1;
    at_[b][c] = -1;
    c = -1;
  }

  void paint(Vertex a, Vertex b, int c) {
    color_[*g_.edge_index(a, b)] = c;
    at_[a][c] = b;
    at_[b][c] = a;
  }

  void color_edge(Vertex u, Vertex v) {
    // Maximal fan around u starting at v, extended by smallest neighbor.
    std::vector<Vertex> fan{v};
    while (true) {
      const Vertex last = fan.back();
      Vertex next = -1;
      for (Vertex x : g_.neighbors(u)) {
        if (std::find(fan.begin(), fan.end(), x) != fan.end()) continue;
        const int c = color(u, x);
        if (c >= 0 && is_free(last, c)) {
          next = x;
          break;
        }
      }
      if (next == -1) break;
      fan.push_back(next);
    }

    const int c = lowest_free(u);
    const int d = lowest_free(fan.back());

    // Flip the maximal path from u whose edges alternate d, c.
    if (c != d) {
      std::vector<std::pair<Vertex, Vertex>> path;
      std::vector<int> path_colors;
      Vertex cur = u;
      int want = d;
      while (at_[cur][want] != -1) {
        const Vertex nxt = at_[cur][want];
        path.emplace_back(cur, nxt);
        path_colors.push_back(want);
        cur = nxt;
        want = want == d ? c : d;
      }
      for (auto [a, b] : path) uncolor(a, b);
      for (std::size_t i = 0; i < path.size(); ++i) paint(path[i].first, path[i].second, path_colors[i] == d ? c : d);
    }

    // Shortest fan prefix that is still a fan and ends in a vertex missing d.
    std::size_t w = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0) {
        const int ci = color(u, fan[i]);
        if (ci < 0 || !is_free(fan[i - 1], ci)) break;
      }
      if (is_free(fan[i], d)) {
        w = i;
        break;
      }
    }
    if (w == fan.size()) throw IntegrityError("edge coloring: no rotatable fan prefix");

    std::vector<int> shifted;
    for (std::size_t i = 0; i < w; ++i) shifted.push_back(color(u, fan[i + 1]));
    for (std::size_t i = 1; i <= w; ++i) uncolor(u, fan[i]);
    for (std::size_t i = 0; i < w; ++i) paint(u, fan[i], shifted[i]);
    paint(u, fan[w], d);
  }

  const Graph& g_;
  int palette_;
  std::vector<int> color_;
  std::vector<std::vector<Vertex>> at_;  // at_[v][c]: neighbor joined to v by color c
};

}  // namespace

EdgeColoring edge_coloring_vizing(const Graph& g) {
  auto ec = MisraGries(g).run();
  if (!is_proper_edge_coloring(g, ec) || ec.palette_size > g.max_degree() + 1) {
    throw IntegrityError("edge coloring: Misra-Gries produced an improper coloring");
  }
  return ec;
}

ChromaticIndexResult chromatic_index_exact(const Graph& g, int arc_guard) {
  detail::enforce_arc_guard(g, arc_guard);
  ChromaticIndexResult result;
  const auto& edges = g.edges();
  if (edges.empty()) return result;
  const int delta = g.max_degree();

  // Line graph conflicts.
  std::vector<std::vector<int>> conflicts(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
        conflicts[i].push_back(static_cast<int>(j));
        conflicts[j].push_back(static_cast<int>(i));
      }
    }

  detail::DsaturSearch search(conflicts, delta);
  Vertex hub = 0;
  while (g.degree(hub) != delta) ++hub;
  int next = 0;
  for (Vertex x : g.neighbors(hub)) search.fix(static_cast<int>(*g.edge_index(hub, x)), next++);
  if (search.run()) {
    result.chi_prime = delta;
    result.witness.edges.assign(edges.begin(), edges.end());
    result.witness.color = search.colors();
    result.witness.palette_size = delta;
    return result;
  }
  result.chi_prime = delta + 1;
  result.witness = edge_coloring_vizing(g);
  result.witness.palette_size = delta + 1;
  return result;
}

}  // namespace incol
