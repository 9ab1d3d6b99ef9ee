#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gencol/graph.hpp"

namespace gencol::detail {

// Reusable depth-bounded BFS. Marks are epoch-stamped so a run only pays for
// the region it explores.
class BoundedBfs {
 public:
  explicit BoundedBfs(int n) : stamp_(n, 0), dist_(n, 0) { queue_.reserve(n); }

  // Explores from `root`. `expand(w)` decides whether a discovered vertex w
  // passes the search on; `visit(w, d)` fires once per discovered w != root.
  template <class Expand, class Visit>
  void run(const Graph& g, Vertex root, int max_depth, Expand&& expand,
           Visit&& visit) {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    queue_.clear();
    stamp_[root] = epoch_;
    dist_[root] = 0;
    queue_.push_back(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      Vertex x = queue_[head];
      int dx = dist_[x];
      if (dx >= max_depth) continue;
      if (x != root && !expand(x)) continue;
      for (Vertex y : g.neighbors(x)) {
        if (stamp_[y] == epoch_) continue;
        stamp_[y] = epoch_;
        dist_[y] = dx + 1;
        queue_.push_back(y);
        visit(y, dx + 1);
      }
    }
  }

  bool seen(Vertex v) const { return stamp_[v] == epoch_; }
  int distance(Vertex v) const { return dist_[v]; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::vector<int> dist_;
  std::vector<Vertex> queue_;
  std::uint32_t epoch_ = 0;
};

}  // namespace gencol::detail
