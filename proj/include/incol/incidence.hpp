#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "incol/graph.hpp"

namespace incol {

/// Default cap on 2|E| for the exhaustive solvers.
inline constexpr int kDefaultArcGuard = 120;

/// One of the two orientations of an edge {tail, head}.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// All 2|E| arcs of g sorted by (tail, head). The position of an arc in this
/// list is its index everywhere else in the library.
std::vector<Arc> arcs(const Graph& g);

/// Index of arc (tail, head) in arcs(g), if {tail, head} is an edge.
std::optional<std::size_t> arc_index(const Graph& g, Arc a);

/// Conflict relation between distinct arcs uv and xy: u = x, v = x or y = u.
constexpr bool adjacent(Arc a, Arc b) noexcept {
  return a.tail == b.tail || a.head == b.tail || b.head == a.tail;
}

/// Neighbor lists of the arc conflict graph, indexed like arcs(g).
std::vector<std::vector<int>> arc_conflicts(const Graph& g);

/// Arc -> color map over the arcs of one graph. Color -1 marks an uncolored arc.
class IncidenceColoring {
 public:
  IncidenceColoring() = default;
  IncidenceColoring(std::vector<Arc> arcs, std::vector<int> colors, int palette_size);

  /// All arcs of g uncolored.
  static IncidenceColoring blank(const Graph& g, int palette_size);

  std::span<const Arc> arcs() const noexcept { return arcs_; }
  std::span<const int> colors() const noexcept { return colors_; }
  int palette_size() const noexcept { return palette_size_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  /// Color of arc a, -1 if uncolored. Throws std::out_of_range if a is not an arc here.
  int color_of(Arc a) const;
  void set_color(Arc a, int color);
  void set_color_at(std::size_t index, int color) { colors_.at(index) = color; }

  bool complete() const noexcept;
  /// Number of distinct colors actually used.
  int colors_used() const;

  /// Sorted distinct colors on arcs entering u.
  std::vector<int> colors_into(Vertex u) const;
  /// Sorted distinct colors on arcs leaving u.
  std::vector<int> colors_out_of(Vertex u) const;

  friend bool operator==(const IncidenceColoring&, const IncidenceColoring&) = default;

 private:
  std::optional<std::size_t> find(Arc a) const;

  std::vector<Arc> arcs_;
  std::vector<int> colors_;
  int palette_size_ = 0;
};

struct Violation {
  Arc first;
  Arc second;
  int color = 0;
};

struct Verdict {
  bool valid = true;
  std::vector<Violation> violations;
};

/// Checks c against g pair by pair. Throws std::invalid_argument when the arc
/// sets differ or a color is outside the palette, IncompleteColoringError when
/// some arc is uncolored.
Verdict verify(const Graph& g, const IncidenceColoring& c);

enum class ArcOrder {
  natural,      ///< (tail, head)
  head_degree,  ///< head degree descending, then (tail, head)
};

/// Lowest-free-color greedy over the chosen arc order. Palette = colors used.
IncidenceColoring greedy_coloring(const Graph& g, ArcOrder order = ArcOrder::head_degree);

struct ExactOptions {
  std::optional<int> lower_hint;
  std::optional<int> upper_hint;
  int arc_guard = kDefaultArcGuard;
};

struct ExactResult {
  int chi = 0;
  IncidenceColoring witness;
  std::uint64_t search_nodes = 0;
};

/// Incidence chromatic number by iterative deepening on the palette size. Each
/// step searches over the set of colors leaving every vertex, so a palette
/// below the answer is refuted by exhausted search. Throws TooLargeError when 2|E| exceeds the guard.
ExactResult exact_chi_i(const Graph& g, const ExactOptions& options = {});

/// Decision version: a valid coloring with at most `palette` colors, or nullopt
/// when none exists. Same guard as exact_chi_i.
std::optional<IncidenceColoring> find_incidence_coloring(const Graph& g, int palette,
                                                         int arc_guard = kDefaultArcGuard);

/// A maximum set of pairwise non-adjacent arcs, certified by branch and bound.
std::vector<Arc> max_independent_arc_set(const Graph& g, int arc_guard = kDefaultArcGuard);

}  // namespace incol
