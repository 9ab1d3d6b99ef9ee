#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gencol/graph.hpp"
#include "gencol/reachability.hpp"

namespace gencol {

// State after one greedy step: `placed` was appended with estimate `est`,
// and `est_cache[v]` is current for every unplaced v.
struct GreedyStep {
  Vertex placed;
  int est;
  const PrefixOrder& prefix;
  std::span<const int> est_cache;
};

struct GreedyOptions {
  std::function<void(const GreedyStep&)> on_step;
};

struct GreedyResult {
  PrefixOrder order;
  ReachReport report;
  // Largest estimate of an extracted vertex. Never exceeds adm_r(G).
  int max_est_seen = 0;
};

// Repeatedly places the unplaced vertex of least estimated backconnectivity
// (smallest id on ties), refreshing only the vertices it can now reach.
GreedyResult bounded_coloring(const Graph& g, int r, const GreedyOptions& options = {});

// Guarantees for an order built when adm_r(G) <= k. For k < 2 the formulas
// collapse; col is then reported as max(1, ...) and the wcol bound is absent.
struct TheoremBounds {
  int k = 0;
  int radius = 1;
  bool degenerate = false;
  std::uint64_t col_bound = 0;
  std::optional<std::uint64_t> wcol_bound;
};
TheoremBounds theorem_bounds(int k, int r);

// Per vertex, the sum over v in reach_r(u) of (k-1)^(r - d_v). Requires k >= 2.
// Values saturate at UINT64_MAX.
std::vector<std::uint64_t> weighted_reach_sum(const ReachReport& report, int k);
std::vector<std::uint64_t> weighted_reach_sum(const Graph& g, const PrefixOrder& sigma, int r,
                                              int k);

}  // namespace gencol
