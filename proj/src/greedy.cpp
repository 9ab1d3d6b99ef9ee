#include "gencol/greedy.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "bucket_queue.hpp"
#include "gencol/backconnectivity.hpp"

namespace gencol {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return b > kSaturated - a ? kSaturated : a + b;
}

std::uint64_t sat_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out = sat_mul(out, base);
  return out;
}

}  // namespace

GreedyResult bounded_coloring(const Graph& g, int r, const GreedyOptions& options) {
  if (r < 1) throw std::invalid_argument("radius must be at least 1");
  const int n = g.num_vertices();
  GreedyResult result;
  PrefixOrder sigma(n);
  std::vector<int> est(n);
  detail::BucketQueue queue(n);
  // With nothing placed only single edges qualify, so est is the degree.
  for (Vertex v = 0; v < n; ++v) {
    est[v] = g.degree(v);
    queue.insert(v, est[v]);
  }
  while (!queue.empty()) {
    Vertex u = queue.pop_min();
    int placed_est = est[u];
    result.max_est_seen = std::max(result.max_est_seen, placed_est);
    sigma.place(u);
    // Only vertices u now reaches can see u as a new internal vertex.
    for (const ReachEntry& e : reach_set(g, sigma, u, r)) {
      est[e.vertex] = estimated_bcon(g, sigma, e.vertex, r);
      queue.update(e.vertex, est[e.vertex]);
    }
    if (options.on_step) options.on_step({u, placed_est, sigma, est});
  }
  result.report = evaluate_order(g, sigma, r);
  result.order = std::move(sigma);
  return result;
}

TheoremBounds theorem_bounds(int k, int r) {
  if (r < 1) throw std::invalid_argument("radius must be at least 1");
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  TheoremBounds b;
  b.k = k;
  b.radius = r;
  if (k < 2) {
    b.degenerate = true;
    b.col_bound = std::max<std::uint64_t>(1, sat_mul(k, sat_pow(k == 0 ? 0 : k - 1, r - 1)));
    return b;
  }
  std::uint64_t uk = static_cast<std::uint64_t>(k);
  b.col_bound = sat_mul(uk, sat_pow(uk - 1, r - 1));
  // (k^(r+1) - 1)/(k - 1) = 1 + k + ... + k^r
  std::uint64_t sum = 0;
  for (int i = 0; i <= r; ++i) sum = sat_add(sum, sat_pow(uk, i));
  b.wcol_bound = sum;
  return b;
}

std::vector<std::uint64_t> weighted_reach_sum(const ReachReport& report, int k) {
  if (k < 2) throw std::invalid_argument("weighted reach sum needs k >= 2");
  const int r = report.radius;
  std::vector<std::uint64_t> sums(report.reach.size(), 0);
  for (std::size_t u = 0; u < report.reach.size(); ++u) {
    for (const ReachEntry& e : report.reach[u]) {
      sums[u] = sat_add(sums[u], sat_pow(static_cast<std::uint64_t>(k - 1), r - e.distance));
    }
  }
  return sums;
}

std::vector<std::uint64_t> weighted_reach_sum(const Graph& g, const PrefixOrder& sigma, int r,
                                              int k) {
  return weighted_reach_sum(evaluate_order(g, sigma, r), k);
}

}  // namespace gencol
