#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gencol/graph.hpp"
#include "gencol/reachability.hpp"
#include "gencol/search.hpp"

namespace gencol {

struct LevelNode {
  Vertex vertex;
  int layer;
  bool sink;
};

/// Shortest-qualifying-path DAG rooted at u.
///
/// Internal nodes are vertices before u, kept at their BFS layer and only if
/// some sink lies below them. Sinks are vertices not before u, at their
/// minimal qualifying distance; they have no outgoing arcs. Every arc goes
/// from layer i to layer i + 1, so every root-to-sink path is a shortest
/// qualifying path of length at most r.
struct LevelDag {
  Vertex root = 0;
  int radius = 0;
  std::vector<LevelNode> nodes;            // nodes[0] is the root
  std::vector<std::pair<int, int>> arcs;   // indices into `nodes`

  std::vector<Vertex> sinks() const;
  std::vector<Vertex> internal() const;
  // Layer of v in the DAG, or -1 if v is not a node.
  int layer_of(Vertex v) const;
  // One line per layer: `layer: v v* ...` with sinks starred.
  std::string dump() const;
};

LevelDag build_level_dag(const Graph& g, const PrefixOrder& sigma, Vertex u, int r);

/// Integral max flow on small networks with integer capacities
/// (shortest augmenting paths).
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes = 0);

  int add_node();
  int add_arc(int from, int to, int capacity);
  int num_nodes() const { return static_cast<int>(head_.size()); }

  int max_flow(int source, int sink);
  int flow_on(int arc) const;

 private:
  struct Arc {
    int to;
    int capacity;
    int next;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

// Maximum number of shortest r-qualifying paths from u that are disjoint
// apart from u (endpoints included), via unit-capacity flow on the level DAG.
int estimated_bcon(const Graph& g, const PrefixOrder& sigma, Vertex u, int r);
int estimated_bcon(const LevelDag& dag);

inline constexpr std::size_t kDefaultMaxPaths = 1'000'000;

// All r-qualifying paths from u as vertex sequences excluding u. Throws
// SizeLimitError past `max_paths`.
std::vector<std::vector<Vertex>> qualifying_paths(const Graph& g,
                                                  const PrefixOrder& sigma,
                                                  Vertex u, int r,
                                                  std::size_t max_paths = kDefaultMaxPaths);

// Exact r-backconnectivity by path enumeration and exhaustive packing.
int exact_bcon(const Graph& g, const PrefixOrder& sigma, Vertex u, int r,
               std::size_t max_paths = kDefaultMaxPaths);

struct AdmissibilityResult {
  int value = 0;
  PrefixOrder order;
  std::uint64_t nodes_expanded = 0;
};

// adm_r(G) by branch and bound over prefixes. Throws SizeLimitError when the
// budget runs out.
AdmissibilityResult exact_admissibility(const Graph& g, int r,
                                        SearchBudget budget = {});
// Decides adm_r(G) <= k.
DecisionResult exact_admissibility(const Graph& g, int r, int k,
                                   SearchBudget budget = {});

}  // namespace gencol
