#include <algorithm>
#include <bit>
#include <span>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "detail/guard.hpp"
#include "incol/errors.hpp"
#include "incol/incidence.hpp"

namespace incol {

namespace {

using ColorSet = std::uint64_t;
constexpr int kMaxPalette = 64;

// A coloring is fixed by the out-color sets S_u (|S_u| = d(u)): arc (u,v) takes
// a color of S_u outside S_v, and the out-arcs of u take distinct colors. So a
// k-coloring exists iff some choice of sets gives every u a perfect matching
// N(u) -> S_u in which v may only take colors outside S_v.
class OutSetSearch {
 public:
  OutSetSearch(const Graph& g, int palette)
      : g_(g), palette_(palette), set_(g.order(), 0), fixed_(g.order(), false) {}

  void fix(Vertex v, ColorSet s) {
    set_[v] = s;
    fixed_[v] = true;
    used_ |= s;
    ++fixed_count_;
  }

  bool run() { return search(); }
  std::uint64_t nodes() const { return nodes_; }

  /// Colors of the out-arcs of u, in neighbor order. Requires a finished search.
  std::vector<int> out_colors(Vertex u) const {
    std::vector<int> assignment;
    matchable(u, &assignment);
    return assignment;
  }

 private:
  ColorSet allowed(Vertex u, Vertex v) const { return fixed_[v] ? set_[u] & ~set_[v] : set_[u]; }

  bool augment(Vertex u, std::span<const Vertex> nb, std::size_t i, std::vector<int>& owner,
               std::vector<int>& match, ColorSet& seen) const {
    ColorSet candidates = allowed(u, nb[i]) & ~seen;
    while (candidates != 0) {
      const int c = std::countr_zero(candidates);
      candidates &= candidates - 1;
      seen |= ColorSet{1} << c;
      if (owner[c] == -1 || augment(u, nb, static_cast<std::size_t>(owner[c]), owner, match, seen)) {
        owner[c] = static_cast<int>(i);
        match[i] = c;
        return true;
      }
    }
    return false;
  }

  bool matchable(Vertex u, std::vector<int>* assignment = nullptr) const {
    auto nb = g_.neighbors(u);
    std::vector<int> owner(palette_, -1);
    std::vector<int> match(nb.size(), -1);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      ColorSet seen = 0;
      if (!augment(u, nb, i, owner, match, seen)) return false;
    }
    if (assignment != nullptr) *assignment = std::move(match);
    return true;
  }

  bool consistent(Vertex u) const {
    if (!matchable(u)) return false;
    for (Vertex v : g_.neighbors(u))
      if (fixed_[v] && !matchable(v)) return false;
    return true;
  }

  // The `count` lowest colors of `pool`.
  static ColorSet lowest(ColorSet pool, int count) {
    ColorSet out = 0;
    for (int i = 0; i < count; ++i) {
      out |= pool & (~pool + 1);
      pool &= pool - 1;
    }
    return out;
  }

  bool search() {
    ++nodes_;
    if (fixed_count_ == g_.order()) return true;

    // Touches a fixed vertex, then highest degree, then most fixed neighbors.
    Vertex pick = -1;
    int pick_fixed = -1;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (fixed_[v]) continue;
      int fixed_neighbors = 0;
      for (Vertex w : g_.neighbors(v)) fixed_neighbors += fixed_[w] ? 1 : 0;
      const bool touches = fixed_neighbors > 0, pick_touches = pick_fixed > 0;
      if (pick == -1 || (touches && !pick_touches) ||
          (touches == pick_touches && (g_.degree(v) > g_.degree(pick) ||
                                       (g_.degree(v) == g_.degree(pick) && fixed_neighbors > pick_fixed)))) {
        pick = v;
        pick_fixed = fixed_neighbors;
      }
    }

    const int d = g_.degree(pick);
    if (d > palette_) return false;
    const ColorSet all = palette_ == kMaxPalette ? ~ColorSet{0} : (ColorSet{1} << palette_) - 1;
    const ColorSet fresh = all & ~used_;
    const ColorSet saved_used = used_;

    // Size-d subsets in lexicographic order. Colors nobody uses yet are
    // interchangeable, so only the lowest ones may enter.
    std::vector<int> index(d);
    for (int i = 0; i < d; ++i) index[i] = i;
    while (true) {
      ColorSet s = 0;
      for (int i : index) s |= ColorSet{1} << i;
      const ColorSet new_colors = s & fresh;
      if (new_colors == lowest(fresh, std::popcount(new_colors))) {
        set_[pick] = s;
        fixed_[pick] = true;
        ++fixed_count_;
        used_ = saved_used | s;
        if (consistent(pick) && search()) return true;
        fixed_[pick] = false;
        --fixed_count_;
        set_[pick] = 0;
        used_ = saved_used;
      }
      int i = d - 1;
      while (i >= 0 && index[i] == palette_ - d + i) --i;
      if (i < 0) break;
      ++index[i];
      for (int j = i + 1; j < d; ++j) index[j] = index[j - 1] + 1;
    }
    return false;
  }

  const Graph& g_;
  int palette_;
  std::vector<ColorSet> set_;
  std::vector<bool> fixed_;
  ColorSet used_ = 0;
  int fixed_count_ = 0;
  std::uint64_t nodes_ = 0;
};

struct Attempt {
  std::optional<IncidenceColoring> coloring;
  std::uint64_t nodes = 0;
};

// Arcs out of a maximum-degree vertex form a clique, so palettes below Δ+1
// fail outright and that vertex's out-set can be fixed to {0..Δ-1}.
Attempt attempt_palette(const Graph& g, int palette) {
  const int delta = g.max_degree();
  if (palette < delta + 1) return {};
  if (palette > kMaxPalette) {
    throw TooLargeError("palette of " + std::to_string(palette) + " colors exceeds the solver limit of " +
                        std::to_string(kMaxPalette));
  }
  OutSetSearch search(g, palette);
  Vertex hub = 0;
  while (g.degree(hub) != delta) ++hub;
  search.fix(hub, (ColorSet{1} << delta) - 1);

  Attempt result;
  const bool found = search.run();
  result.nodes = search.nodes();
  if (!found) return result;

  auto coloring = IncidenceColoring::blank(g, palette);
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto colors = search.out_colors(u);
    auto nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) coloring.set_color({u, nb[i]}, colors[i]);
  }
  if (!verify(g, coloring).valid) throw IntegrityError("out-set search produced an improper coloring");
  result.coloring = std::move(coloring);
  return result;
}

}  // namespace

ExactResult exact_chi_i(const Graph& g, const ExactOptions& options) {
  detail::enforce_arc_guard(g, options.arc_guard);
  ExactResult result;
  if (g.size() == 0) {
    result.witness = IncidenceColoring::blank(g, 0);
    return result;
  }
  auto greedy = greedy_coloring(g, ArcOrder::head_degree);

  int k = g.max_degree() + 1;
  if (options.lower_hint) k = std::max(k, *options.lower_hint);
  if (k > greedy.palette_size()) {
    throw std::invalid_argument("lower hint " + std::to_string(k) + " exceeds a known coloring with " +
                                std::to_string(greedy.palette_size()) + " colors");
  }
  for (;; ++k) {
    if (options.upper_hint && k > *options.upper_hint) {
      throw std::invalid_argument("upper hint " + std::to_string(*options.upper_hint) + " is below the optimum");
    }
    if (k == greedy.palette_size()) {
      result.chi = k;
      result.witness = std::move(greedy);
      return result;
    }
    auto attempt = attempt_palette(g, k);
    result.search_nodes += attempt.nodes;
    if (attempt.coloring) {
      result.chi = k;
      result.witness = std::move(*attempt.coloring);
      return result;
    }
  }
}

std::optional<IncidenceColoring> find_incidence_coloring(const Graph& g, int palette, int arc_guard) {
  detail::enforce_arc_guard(g, arc_guard);
  if (palette < 0) return std::nullopt;
  if (g.size() == 0) return IncidenceColoring::blank(g, palette);
  return attempt_palette(g, palette).coloring;
}

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// Maximum clique in the compatibility graph (arcs that do not conflict), with
// greedy-coloring bounds.
class IndependentArcSearch {
 public:
  explicit IndependentArcSearch(const std::vector<std::vector<int>>& conflicts) {
    const std::size_t n = conflicts.size();
    compatible_.assign(n, Bits(n));
    for (std::size_t a = 0; a < n; ++a) {
      compatible_[a].set();
      compatible_[a].reset(a);
      for (int b : conflicts[a]) compatible_[a].reset(static_cast<std::size_t>(b));
    }
  }

  std::vector<int> run() {
    Bits all(compatible_.size());
    all.set();
    std::vector<int> current;
    expand(current, all);
    return best_;
  }

 private:
  void expand(std::vector<int>& current, Bits candidates) {
    std::vector<std::size_t> order;
    std::vector<int> bound;
    Bits uncolored = candidates;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bits q = uncolored;
      for (auto v = q.find_first(); v != Bits::npos; v = q.find_first()) {
        q.reset(v);
        uncolored.reset(v);
        q -= compatible_[v];
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) return;
      const std::size_t v = order[i];
      current.push_back(static_cast<int>(v));
      Bits next = candidates & compatible_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  std::vector<Bits> compatible_;
  std::vector<int> best_;
};

}  // namespace

std::vector<Arc> max_independent_arc_set(const Graph& g, int arc_guard) {
  detail::enforce_arc_guard(g, arc_guard);
  const auto list = arcs(g);
  if (list.empty()) return {};
  auto chosen = IndependentArcSearch(arc_conflicts(g)).run();
  std::sort(chosen.begin(), chosen.end());
  std::vector<Arc> out;
  for (int a : chosen) out.push_back(list[a]);
  return out;
}

}  // namespace incol
