#include "gencol/backconnectivity.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "bounded_bfs.hpp"
#include "gencol/errors.hpp"
#include "prefix_search.hpp"

namespace gencol {

std::vector<Vertex> LevelDag::sinks() const {
  std::vector<Vertex> out;
  for (const auto& node : nodes) {
    if (node.sink) out.push_back(node.vertex);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> LevelDag::internal() const {
  std::vector<Vertex> out;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!nodes[i].sink) out.push_back(nodes[i].vertex);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int LevelDag::layer_of(Vertex v) const {
  for (const auto& node : nodes) {
    if (node.vertex == v) return node.layer;
  }
  return -1;
}

std::string LevelDag::dump() const {
  std::map<int, std::vector<const LevelNode*>> by_layer;
  for (const auto& node : nodes) by_layer[node.layer].push_back(&node);
  std::ostringstream out;
  for (auto& [layer, list] : by_layer) {
    std::sort(list.begin(), list.end(),
              [](const LevelNode* a, const LevelNode* b) { return a->vertex < b->vertex; });
    out << layer << ':';
    for (const LevelNode* node : list) {
      out << ' ' << node->vertex << (node->sink ? "*" : "");
    }
    out << '\n';
  }
  return out.str();
}

LevelDag build_level_dag(const Graph& g, const PrefixOrder& sigma, Vertex u, int r) {
  if (r < 1) throw std::invalid_argument("radius must be at least 1");
  if (!g.contains(u) || sigma.size() != g.num_vertices()) {
    throw std::invalid_argument("vertex or order does not match graph");
  }
  const int n = g.num_vertices();
  detail::BoundedBfs bfs(n);
  std::vector<Vertex> discovered;
  bfs.run(
      g, u, r, [&](Vertex w) { return sigma.precedes(w, u); },
      [&](Vertex w, int) { discovered.push_back(w); });

  auto is_internal = [&](Vertex w) { return sigma.precedes(w, u); };
  auto layer = [&](Vertex w) { return w == u ? 0 : bfs.distance(w); };

  // Keep internal vertices that have a forward path to some sink; process in
  // decreasing layer so children are settled first.
  std::vector<char> alive(n, 0);
  std::vector<Vertex> by_layer = discovered;
  std::stable_sort(by_layer.begin(), by_layer.end(),
                   [&](Vertex a, Vertex b) { return layer(a) > layer(b); });
  for (Vertex w : by_layer) {
    if (!is_internal(w)) {
      alive[w] = 1;
      continue;
    }
    for (Vertex y : g.neighbors(w)) {
      if (y != u && bfs.seen(y) && layer(y) == layer(w) + 1 && alive[y]) {
        alive[w] = 1;
        break;
      }
    }
  }

  LevelDag dag;
  dag.root = u;
  dag.radius = r;
  dag.nodes.push_back({u, 0, false});
  std::vector<int> index(n, -1);
  index[u] = 0;
  std::vector<Vertex> kept;
  for (Vertex w : discovered) {
    if (alive[w]) kept.push_back(w);
  }
  std::sort(kept.begin(), kept.end(), [&](Vertex a, Vertex b) {
    return layer(a) != layer(b) ? layer(a) < layer(b) : a < b;
  });
  for (Vertex w : kept) {
    index[w] = static_cast<int>(dag.nodes.size());
    dag.nodes.push_back({w, layer(w), !is_internal(w)});
  }
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    const LevelNode& from = dag.nodes[i];
    if (from.sink) continue;
    for (Vertex y : g.neighbors(from.vertex)) {
      int j = index[y];
      if (j > 0 && dag.nodes[j].layer == from.layer + 1) {
        dag.arcs.emplace_back(static_cast<int>(i), j);
      }
    }
  }
  return dag;
}

int estimated_bcon(const LevelDag& dag) {
  const int count = static_cast<int>(dag.nodes.size());
  // Node i is split into in = 2i and out = 2i + 1; the root needs no split.
  FlowNetwork net(2 * count + 1);
  const int super_sink = 2 * count;
  for (int i = 1; i < count; ++i) {
    if (dag.nodes[i].sink) {
      net.add_arc(2 * i, super_sink, 1);
    } else {
      net.add_arc(2 * i, 2 * i + 1, 1);
    }
  }
  for (auto [a, b] : dag.arcs) {
    int from = a == 0 ? 0 : 2 * a + 1;
    net.add_arc(from, 2 * b, 1);
  }
  return net.max_flow(0, super_sink);
}

int estimated_bcon(const Graph& g, const PrefixOrder& sigma, Vertex u, int r) {
  return estimated_bcon(build_level_dag(g, sigma, u, r));
}

std::vector<std::vector<Vertex>> qualifying_paths(const Graph& g,
                                                  const PrefixOrder& sigma,
                                                  Vertex u, int r,
                                                  std::size_t max_paths) {
  if (r < 1) throw std::invalid_argument("radius must be at least 1");
  if (!g.contains(u) || sigma.size() != g.num_vertices()) {
    throw std::invalid_argument("vertex or order does not match graph");
  }
  std::vector<std::vector<Vertex>> paths;
  std::vector<Vertex> stack;
  std::vector<char> on_path(g.num_vertices(), 0);
  on_path[u] = 1;

  auto extend = [&](auto&& self, Vertex x) -> void {
    for (Vertex y : g.neighbors(x)) {
      if (on_path[y]) continue;
      stack.push_back(y);
      if (!sigma.precedes(y, u)) {
        if (paths.size() >= max_paths) {
          throw SizeLimitError("more than " + std::to_string(max_paths) +
                               " qualifying paths");
        }
        paths.push_back(stack);
      } else if (static_cast<int>(stack.size()) < r) {
        on_path[y] = 1;
        self(self, y);
        on_path[y] = 0;
      }
      stack.pop_back();
    }
  };
  extend(extend, u);
  return paths;
}

namespace {

// Maximum set of pairwise disjoint paths, with paths grouped by their first
// vertex (disjoint paths always leave u through distinct neighbors).
class PathPacker {
 public:
  explicit PathPacker(const std::vector<std::vector<Vertex>>& paths) {
    std::map<Vertex, int> local;
    for (const auto& p : paths) {
      for (Vertex v : p) local.emplace(v, 0);
    }
    int next = 0;
    for (auto& [v, id] : local) id = next++;
    words_ = (next + 63) / 64;

    std::map<Vertex, std::vector<std::vector<std::uint64_t>>> groups;
    for (const auto& p : paths) {
      std::vector<std::uint64_t> mask(words_, 0);
      for (Vertex v : p) {
        int id = local[v];
        mask[id / 64] |= std::uint64_t{1} << (id % 64);
      }
      groups[p.front()].push_back(std::move(mask));
    }
    for (auto& [first, masks] : groups) {
      drop_dominated(masks);
      groups_.push_back(std::move(masks));
    }
    // Small groups first keeps the branching factor low near the root.
    std::sort(groups_.begin(), groups_.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
  }

  int solve() {
    std::vector<std::uint64_t> used(words_, 0);
    best_ = 0;
    search(0, used, 0);
    return best_;
  }

 private:
  static bool subset(const std::vector<std::uint64_t>& a,
                     const std::vector<std::uint64_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] & ~b[i]) return false;
    }
    return true;
  }

  // A path whose vertex set contains another path's set is never needed.
  static void drop_dominated(std::vector<std::vector<std::uint64_t>>& masks) {
    if (masks.size() > 4000) return;
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<char> dead(masks.size(), 0);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      for (std::size_t j = 0; j < masks.size() && !dead[i]; ++j) {
        if (i != j && !dead[j] && subset(masks[j], masks[i])) dead[i] = 1;
      }
    }
    std::size_t out = 0;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (dead[i]) continue;
      if (out != i) masks[out] = std::move(masks[i]);
      ++out;
    }
    masks.resize(out);
  }

  void search(std::size_t group, std::vector<std::uint64_t>& used, int count) {
    if (count + static_cast<int>(groups_.size() - group) <= best_) return;
    if (group == groups_.size()) {
      best_ = count;
      return;
    }
    for (const auto& mask : groups_[group]) {
      bool clash = false;
      for (std::size_t i = 0; i < mask.size() && !clash; ++i) clash = mask[i] & used[i];
      if (clash) continue;
      for (std::size_t i = 0; i < mask.size(); ++i) used[i] |= mask[i];
      search(group + 1, used, count + 1);
      for (std::size_t i = 0; i < mask.size(); ++i) used[i] &= ~mask[i];
      if (count + static_cast<int>(groups_.size() - group) <= best_) return;
    }
    search(group + 1, used, count);
  }

  int words_ = 0;
  int best_ = 0;
  std::vector<std::vector<std::vector<std::uint64_t>>> groups_;
};

}  // namespace

int exact_bcon(const Graph& g, const PrefixOrder& sigma, Vertex u, int r,
               std::size_t max_paths) {
  auto paths = qualifying_paths(g, sigma, u, r, max_paths);
  if (paths.empty()) return 0;
  return PathPacker(paths).solve();
}

AdmissibilityResult exact_admissibility(const Graph& g, int r, SearchBudget budget) {
  if (r < 1) throw std::invalid_argument("radius must be at least 1");
  AdmissibilityResult result;
  result.order = PrefixOrder::identity(g.num_vertices());
  if (g.num_vertices() == 0) return result;

  // Upper bound from any order: the largest back-connectivity it realizes.
  int hi = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    hi = std::max(hi, exact_bcon(g, result.order, v, r));
  }
  int lo = degeneracy(g);
  std::vector<Vertex> hint(result.order.placed().begin(), result.order.placed().end());
  while (hi > lo) {
    detail::PrefixSearchConfig config;
    config.objective = Parameter::adm;
    config.radius = r;
    config.threshold = hi - 1;
    config.budget = budget;
    config.hint = hint;
    if (budget.max_nodes <= result.nodes_expanded) {
      throw SizeLimitError("admissibility search budget exhausted");
    }
    config.budget.max_nodes = budget.max_nodes - result.nodes_expanded;
    auto outcome = detail::prefix_search(g, config);
    result.nodes_expanded += outcome.nodes;
    if (outcome.answer == Answer::budget_exhausted) {
      throw SizeLimitError("admissibility search budget exhausted");
    }
    if (outcome.answer == Answer::no) break;
    result.order = PrefixOrder(g.num_vertices(), outcome.order);
    hint = outcome.order;
    --hi;
  }
  result.value = hi;
  return result;
}

DecisionResult exact_admissibility(const Graph& g, int r, int k, SearchBudget budget) {
  if (r < 1) throw std::invalid_argument("radius must be at least 1");
  if (k < 0) throw std::invalid_argument("threshold must be non-negative");
  detail::PrefixSearchConfig config;
  config.objective = Parameter::adm;
  config.radius = r;
  config.threshold = k;
  config.budget = budget;
  auto outcome = detail::prefix_search(g, config);
  DecisionResult result;
  result.answer = outcome.answer;
  result.nodes_expanded = outcome.nodes;
  if (outcome.answer == Answer::yes) {
    result.witness = PrefixOrder(g.num_vertices(), outcome.order);
  }
  return result;
}

}  // namespace gencol
