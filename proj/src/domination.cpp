#include <algorithm>
#include <string>

#include "incol/decomp.hpp"
#include "incol/errors.hpp"

namespace incol {

bool is_dominating(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> dominated(g.order(), 0);
  for (Vertex v : set) {
    if (v < 0 || v >= g.order()) return false;
    dominated[v] = 1;
    for (Vertex w : g.neighbors(v)) dominated[w] = 1;
  }
  return std::all_of(dominated.begin(), dominated.end(), [](char c) { return c != 0; });
}

namespace {

class DominationSearch {
 public:
  DominationSearch(const Graph& g, int budget) : g_(g), budget_(budget), hits_(g.order(), 0) {}

  bool run() { return search(g_.order()); }
  const std::vector<Vertex>& chosen() const { return chosen_; }

 private:
  void toggle(Vertex v, int delta, int& undominated) {
    auto bump = [&](Vertex x) {
      if (delta > 0 && hits_[x]++ == 0) --undominated;
      if (delta < 0 && --hits_[x] == 0) ++undominated;
    };
    bump(v);
    for (Vertex w : g_.neighbors(v)) bump(w);
  }

  bool search(int undominated) {
    if (undominated == 0) return true;
    const int left = budget_ - static_cast<int>(chosen_.size());
    if (left <= 0 || undominated > left * (g_.max_degree() + 1)) return false;

    Vertex target = 0;
    while (hits_[target] > 0) ++target;
    std::vector<Vertex> candidates{target};
    for (Vertex w : g_.neighbors(target)) candidates.push_back(w);
    std::sort(candidates.begin(), candidates.end());
    for (Vertex v : candidates) {
      chosen_.push_back(v);
      toggle(v, +1, undominated);
      if (search(undominated)) return true;
      toggle(v, -1, undominated);
      chosen_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int budget_;
  std::vector<int> hits_;
  std::vector<Vertex> chosen_;
};

}  // namespace

DominationResult domination_number_exact(const Graph& g, int arc_guard) {
  int active = 0;
  for (Vertex v = 0; v < g.order(); ++v) active += g.degree(v) > 0 ? 1 : 0;
  if (arc_guard >= 0 && active > arc_guard) {
    throw TooLargeError("domination: " + std::to_string(active) + " non-isolated vertices, guard is " +
                        std::to_string(arc_guard));
  }
  DominationResult result;
  if (g.order() == 0) return result;
  const int lower = (g.order() + g.max_degree()) / (g.max_degree() + 1);
  for (int size = lower;; ++size) {
    DominationSearch search(g, size);
    if (search.run()) {
      result.gamma = size;
      result.witness.vertices = search.chosen();
      std::sort(result.witness.vertices.begin(), result.witness.vertices.end());
      return result;
    }
  }
}

StarForestResult max_star_forest_edges(const Graph& g, int arc_guard) {
  const auto dom = domination_number_exact(g, arc_guard);
  std::vector<char> in_set(g.order(), 0);
  for (Vertex v : dom.witness.vertices) in_set[v] = 1;
  StarForestResult result;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_set[v]) continue;
    for (Vertex w : g.neighbors(v)) {
      if (in_set[w]) {
        result.edges.push_back(make_edge(v, w));
        break;
      }
    }
  }
  std::sort(result.edges.begin(), result.edges.end());
  result.count = static_cast<int>(result.edges.size());
  return result;
}

}  // namespace incol
