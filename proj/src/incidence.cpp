#include "incol/incidence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "incol/errors.hpp"

namespace incol {

std::vector<Arc> arcs(const Graph& g) {
  std::vector<Arc> out;
  out.reserve(2 * g.edges().size());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u)) out.push_back({u, v});
  return out;
}

std::optional<std::size_t> arc_index(const Graph& g, Arc a) {
  if (!g.has_edge(a.tail, a.head)) return std::nullopt;
  std::size_t offset = 0;
  for (Vertex u = 0; u < a.tail; ++u) offset += static_cast<std::size_t>(g.degree(u));
  auto nb = g.neighbors(a.tail);
  return offset + static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), a.head) - nb.begin());
}

std::vector<std::vector<int>> arc_conflicts(const Graph& g) {
  const int n = g.order();
  std::vector<int> first_out(n + 1, 0);
  for (Vertex u = 0; u < n; ++u) first_out[u + 1] = first_out[u] + g.degree(u);
  auto index_of = [&](Vertex tail, Vertex head) {
    auto nb = g.neighbors(tail);
    return first_out[tail] + static_cast<int>(std::lower_bound(nb.begin(), nb.end(), head) - nb.begin());
  };

  std::vector<std::vector<int>> out(first_out[n]);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      const int a = index_of(u, v);
      auto& list = out[a];
      // Same tail.
      for (int b = first_out[u]; b < first_out[u + 1]; ++b)
        if (b != a) list.push_back(b);
      // Head of a is the tail of b.
      for (int b = first_out[v]; b < first_out[v + 1]; ++b) list.push_back(b);
      // Head of b is the tail of a; (v,u) was already added above.
      for (Vertex w : g.neighbors(u))
        if (w != v) list.push_back(index_of(w, u));
      std::sort(list.begin(), list.end());
    }
  }
  return out;
}

IncidenceColoring::IncidenceColoring(std::vector<Arc> arcs, std::vector<int> colors, int palette_size)
    : arcs_(std::move(arcs)), colors_(std::move(colors)), palette_size_(palette_size) {
  if (arcs_.size() != colors_.size()) throw std::invalid_argument("one color per arc required");
  if (!std::is_sorted(arcs_.begin(), arcs_.end()) ||
      std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) {
    throw std::invalid_argument("coloring arcs must be sorted and distinct");
  }
  if (palette_size_ < 0) throw std::invalid_argument("palette size must be non-negative");
}

IncidenceColoring IncidenceColoring::blank(const Graph& g, int palette_size) {
  auto list = incol::arcs(g);
  std::vector<int> colors(list.size(), -1);
  return {std::move(list), std::move(colors), palette_size};
}

std::optional<std::size_t> IncidenceColoring::find(Arc a) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
  if (it == arcs_.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - arcs_.begin());
}

int IncidenceColoring::color_of(Arc a) const {
  auto i = find(a);
  if (!i) throw std::out_of_range("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") not colored here");
  return colors_[*i];
}

void IncidenceColoring::set_color(Arc a, int color) {
  auto i = find(a);
  if (!i) throw std::out_of_range("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") not colored here");
  colors_[*i] = color;
}

bool IncidenceColoring::complete() const noexcept {
  return std::none_of(colors_.begin(), colors_.end(), [](int c) { return c < 0; });
}

int IncidenceColoring::colors_used() const {
  std::vector<int> used;
  for (int c : colors_)
    if (c >= 0) used.push_back(c);
  std::sort(used.begin(), used.end());
  return static_cast<int>(std::unique(used.begin(), used.end()) - used.begin());
}

namespace {

std::vector<int> distinct_colors(const std::vector<Arc>& arcs, const std::vector<int>& colors, auto&& keep) {
  std::vector<int> out;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    if (keep(arcs[i]) && colors[i] >= 0) out.push_back(colors[i]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<int> IncidenceColoring::colors_into(Vertex u) const {
  return distinct_colors(arcs_, colors_, [u](Arc a) { return a.head == u; });
}

std::vector<int> IncidenceColoring::colors_out_of(Vertex u) const {
  return distinct_colors(arcs_, colors_, [u](Arc a) { return a.tail == u; });
}

Verdict verify(const Graph& g, const IncidenceColoring& c) {
  const auto expected = arcs(g);
  if (!std::equal(expected.begin(), expected.end(), c.arcs().begin(), c.arcs().end())) {
    throw std::invalid_argument("coloring arcs do not match the graph");
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const int color = c.colors()[i];
    if (color < 0) {
      throw IncompleteColoringError("arc (" + std::to_string(expected[i].tail) + "," +
                                    std::to_string(expected[i].head) + ") is uncolored");
    }
    if (color >= c.palette_size()) {
      throw std::invalid_argument("color " + std::to_string(color) + " outside palette of size " +
                                  std::to_string(c.palette_size()));
    }
  }
  Verdict verdict;
  const auto conflicts = arc_conflicts(g);
  for (std::size_t a = 0; a < expected.size(); ++a) {
    for (int b : conflicts[a]) {
      if (static_cast<std::size_t>(b) <= a) continue;
      if (c.colors()[a] == c.colors()[b]) verdict.violations.push_back({expected[a], expected[b], c.colors()[a]});
    }
  }
  verdict.valid = verdict.violations.empty();
  return verdict;
}

IncidenceColoring greedy_coloring(const Graph& g, ArcOrder order) {
  auto list = arcs(g);
  const auto conflicts = arc_conflicts(g);
  std::vector<int> sequence(list.size());
  std::iota(sequence.begin(), sequence.end(), 0);
  if (order == ArcOrder::head_degree) {
    std::stable_sort(sequence.begin(), sequence.end(),
                     [&](int a, int b) { return g.degree(list[a].head) > g.degree(list[b].head); });
  }
  std::vector<int> colors(list.size(), -1);
  int palette = 0;
  std::vector<char> taken;
  for (int a : sequence) {
    taken.assign(conflicts[a].size() + 1, 0);
    for (int b : conflicts[a])
      if (colors[b] >= 0 && colors[b] < static_cast<int>(taken.size())) taken[colors[b]] = 1;
    int color = 0;
    while (taken[color]) ++color;
    colors[a] = color;
    palette = std::max(palette, color + 1);
  }
  return {std::move(list), std::move(colors), palette};
}

}  // namespace incol
