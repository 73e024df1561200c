#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace incol::detail {

// DSATUR backtracking for "is the conflict graph k-colorable". Colors are
// introduced in increasing order, which removes palette permutations.
class DsaturSearch {
 public:
  DsaturSearch(const std::vector<std::vector<int>>& conflicts, int palette)
      : conflicts_(conflicts),
        palette_(palette),
        color_(conflicts.size(), -1),
        forbid_(conflicts.size() * static_cast<std::size_t>(palette), 0),
        blocked_(conflicts.size(), 0),
        free_degree_(conflicts.size(), 0) {
    for (std::size_t a = 0; a < conflicts.size(); ++a) free_degree_[a] = static_cast<int>(conflicts[a].size());
  }

  /// Fixes an arc before the search starts; false if it clashes with an earlier fix.
  bool fix(int arc, int color) {
    if (color_[arc] != -1 || forbidden(arc, color)) return false;
    assign(arc, color);
    ++colored_;
    max_used_ = std::max(max_used_, color);
    return true;
  }

  bool run() { return search(); }

  const std::vector<int>& colors() const { return color_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool forbidden(int arc, int color) const {
    return forbid_[static_cast<std::size_t>(arc) * static_cast<std::size_t>(palette_) + color] > 0;
  }

  void assign(int arc, int color) {
    color_[arc] = color;
    for (int b : conflicts_[arc]) {
      --free_degree_[b];
      if (color_[b] != -1) continue;
      auto& count = forbid_[static_cast<std::size_t>(b) * static_cast<std::size_t>(palette_) + color];
      if (count++ == 0) ++blocked_[b];
    }
  }

  void unassign(int arc) {
    const int color = color_[arc];
    color_[arc] = -1;
    for (int b : conflicts_[arc]) {
      ++free_degree_[b];
      if (color_[b] != -1) continue;
      auto& count = forbid_[static_cast<std::size_t>(b) * static_cast<std::size_t>(palette_) + color];
      if (--count == 0) --blocked_[b];
    }
  }

  bool search() {
    ++nodes_;
    if (colored_ == static_cast<int>(color_.size())) return true;

    // Most saturated arc, then most uncolored conflicts, then lowest index.
    int pick = -1;
    int pick_free = 0;
    for (int a = 0; a < static_cast<int>(color_.size()); ++a) {
      if (color_[a] != -1) continue;
      const int available = palette_ - blocked_[a];
      if (available == 0) return false;
      if (pick == -1 || available < pick_free ||
          (available == pick_free && free_degree_[a] > free_degree_[pick])) {
        pick = a;
        pick_free = available;
      }
    }

    const int saved_max = max_used_;
    const int limit = std::min(palette_, max_used_ + 2);
    for (int c = 0; c < limit; ++c) {
      if (forbidden(pick, c)) continue;
      assign(pick, c);
      ++colored_;
      max_used_ = std::max(saved_max, c);
      if (search()) return true;
      --colored_;
      unassign(pick);
      max_used_ = saved_max;
    }
    return false;
  }

  const std::vector<std::vector<int>>& conflicts_;
  int palette_;
  std::vector<int> color_;
  std::vector<int> forbid_;
  std::vector<int> blocked_;
  std::vector<int> free_degree_;
  int colored_ = 0;
  int max_used_ = -1;
  std::uint64_t nodes_ = 0;
};

}  // namespace incol::detail
