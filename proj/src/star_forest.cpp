#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "detail/guard.hpp"
#include "incol/decomp.hpp"

namespace incol {

namespace {

struct Components {
  std::map<Vertex, int> degree;
  std::map<Vertex, Vertex> parent;
  bool cyclic = false;

  Vertex find(Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

Components analyse(std::span<const Edge> part) {
  Components c;
  for (const Edge& e : part) {
    for (Vertex x : {e.u, e.v}) {
      ++c.degree[x];
      c.parent.try_emplace(x, x);
    }
    Vertex a = c.find(e.u);
    Vertex b = c.find(e.v);
    if (a == b) c.cyclic = true;
    else c.parent[a] = b;
  }
  return c;
}

}  // namespace

bool is_star_forest(const Graph& g, std::span<const Edge> part) {
  std::vector<Edge> sorted;
  for (const Edge& e : part) {
    if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("edge is not in the graph");
    sorted.push_back(make_edge(e.u, e.v));
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("edge repeated in part");
  }
  Components c = analyse(sorted);
  if (c.cyclic) return false;
  std::map<Vertex, int> hubs;
  for (auto [v, d] : c.degree)
    if (d >= 2 && ++hubs[c.find(v)] > 1) return false;
  return true;
}

std::vector<Vertex> star_centers(std::span<const Edge> part) {
  Components c = analyse(part);
  if (c.cyclic) throw std::invalid_argument("part is not a star forest");
  std::map<Vertex, Vertex> center;  // component root -> center
  for (auto [v, d] : c.degree) {
    if (d < 2) continue;
    auto [it, fresh] = center.try_emplace(c.find(v), v);
    if (!fresh) throw std::invalid_argument("part is not a star forest");
  }
  for (const Edge& e : part) center.try_emplace(c.find(e.u), std::max(e.u, e.v));
  std::vector<Vertex> out;
  for (auto [root, v] : center) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_valid_decomposition(const Graph& g, const StarForestDecomposition& sfd) {
  if (sfd.centers.size() != sfd.parts.size()) return false;
  std::vector<Edge> all;
  for (std::size_t i = 0; i < sfd.parts.size(); ++i) {
    const auto& part = sfd.parts[i];
    if (part.empty()) return false;
    for (const Edge& e : part) {
      if (!g.has_edge(e.u, e.v)) return false;
      all.push_back(make_edge(e.u, e.v));
    }
    try {
      if (!is_star_forest(g, part) || star_centers(part) != sfd.centers[i]) return false;
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  std::sort(all.begin(), all.end());
  return std::equal(all.begin(), all.end(), g.edges().begin(), g.edges().end());
}

namespace {

// Edge -> part labeling with star-forest feasibility per part.
class StarPartSearch {
 public:
  StarPartSearch(const Graph& g, int parts, int part_capacity)
      : n_(g.order()), k_(parts), capacity_(part_capacity) {
    edges_.assign(g.edges().begin(), g.edges().end());
    auto key = [&g](const Edge& e) {
      return std::pair{std::max(g.degree(e.u), g.degree(e.v)), std::min(g.degree(e.u), g.degree(e.v))};
    };
    std::stable_sort(edges_.begin(), edges_.end(), [&](const Edge& a, const Edge& b) { return key(a) > key(b); });
    label_.assign(edges_.size(), -1);
    adj_.assign(static_cast<std::size_t>(k_), std::vector<std::vector<Vertex>>(n_));
    covered_.assign(k_, 0);
    size_.assign(k_, 0);
  }

  std::optional<StarForestDecomposition> run() {
    if (!search(0)) return std::nullopt;
    StarForestDecomposition sfd;
    sfd.parts.assign(opened_, {});
    for (std::size_t e = 0; e < edges_.size(); ++e) sfd.parts[label_[e]].push_back(edges_[e]);
    for (auto& part : sfd.parts) {
      std::sort(part.begin(), part.end());
      sfd.centers.push_back(star_centers(part));
    }
    return sfd;
  }

  /// Adding e keeps part p a star forest.
  static bool fits(const std::vector<std::vector<Vertex>>& adj, const Edge& e) {
    const auto du = adj[e.u].size();
    const auto dv = adj[e.v].size();
    if (du > 0 && dv > 0) return false;
    if (du == 0 && dv == 0) return true;
    const Vertex covered = du > 0 ? e.u : e.v;
    if (adj[covered].size() >= 2) return true;
    return adj[adj[covered].front()].size() == 1;
  }

 private:
  void add(int p, const Edge& e) {
    auto& adj = adj_[p];
    if (adj[e.u].empty()) ++covered_[p];
    if (adj[e.v].empty()) ++covered_[p];
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
    ++size_[p];
  }

  void remove(int p, const Edge& e) {
    auto& adj = adj_[p];
    adj[e.u].pop_back();
    adj[e.v].pop_back();
    if (adj[e.u].empty()) --covered_[p];
    if (adj[e.v].empty()) --covered_[p];
    --size_[p];
  }

  bool search(std::size_t assigned) {
    if (assigned == edges_.size()) return true;

    // Each further edge in part p needs a vertex not yet covered by p, and no
    // part exceeds the largest star forest of the graph.
    long long room = static_cast<long long>(k_ - opened_) * capacity_;
    for (int p = 0; p < opened_; ++p) room += std::min(capacity_ - size_[p], n_ - covered_[p]);
    if (room < static_cast<long long>(edges_.size() - assigned)) return false;

    std::size_t pick = edges_.size();
    int pick_options = 0;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (label_[e] != -1) continue;
      int options = opened_ < k_ ? 1 : 0;
      for (int p = 0; p < opened_; ++p)
        if (fits(adj_[p], edges_[e])) ++options;
      if (options == 0) return false;
      if (pick == edges_.size() || options < pick_options) {
        pick = e;
        pick_options = options;
      }
    }

    const Edge& e = edges_[pick];
    for (int p = 0; p < opened_; ++p) {
      if (!fits(adj_[p], e)) continue;
      add(p, e);
      label_[pick] = p;
      if (search(assigned + 1)) return true;
      label_[pick] = -1;
      remove(p, e);
    }
    if (opened_ < k_) {
      const int p = opened_++;
      add(p, e);
      label_[pick] = p;
      if (search(assigned + 1)) return true;
      label_[pick] = -1;
      remove(p, e);
      --opened_;
    }
    return false;
  }

  int n_;
  int k_;
  int capacity_;
  int opened_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> label_;
  std::vector<std::vector<std::vector<Vertex>>> adj_;
  std::vector<int> covered_;
  std::vector<int> size_;
};

}  // namespace

StarForestDecomposition greedy_star_forests(const Graph& g) {
  std::vector<std::vector<std::vector<Vertex>>> adj;
  StarForestDecomposition sfd;
  for (const Edge& e : g.edges()) {
    std::size_t p = 0;
    while (p < adj.size() && !StarPartSearch::fits(adj[p], e)) ++p;
    if (p == adj.size()) {
      adj.emplace_back(g.order());
      sfd.parts.emplace_back();
    }
    adj[p][e.u].push_back(e.v);
    adj[p][e.v].push_back(e.u);
    sfd.parts[p].push_back(e);
  }
  for (const auto& part : sfd.parts) sfd.centers.push_back(star_centers(part));
  return sfd;
}

StarArboricityResult star_arboricity_exact(const Graph& g, int arc_guard) {
  detail::enforce_arc_guard(g, arc_guard);
  StarArboricityResult result;
  if (g.size() == 0) return result;

  const int gamma = domination_number_exact(g, arc_guard).gamma;
  const int capacity = g.order() - gamma;
  auto greedy = greedy_star_forests(g);
  const int lower = (g.size() + capacity - 1) / capacity;
  for (int k = lower; k < greedy.size(); ++k) {
    if (auto sfd = StarPartSearch(g, k, capacity).run()) {
      result.st = k;
      result.witness = std::move(*sfd);
      return result;
    }
  }
  result.st = greedy.size();
  result.witness = std::move(greedy);
  return result;
}

}  // namespace incol
