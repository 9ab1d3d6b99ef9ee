#pragma once

#include <compare>
#include <cstddef>
#include <deque>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gencol {

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;

  auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on the vertex ids 0..n-1.
///
/// Adjacency is stored in compressed form with every neighbor list sorted.
/// Construction collapses duplicate edges and rejects self-loops.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return targets_.size() / 2; }
  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  int max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  // Every edge once with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
};

/// Accumulates vertices and edges, then freezes them into a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n = 0);
  explicit GraphBuilder(const Graph& g);

  Vertex add_vertex();
  // Adds `count` vertices and returns the id of the first one.
  Vertex add_vertices(int count);
  void add_edge(Vertex u, Vertex v);

  // Joins u and v by an induced path with `ell` fresh internal vertices
  // (ell = 0 adds the plain edge). Calling this repeatedly on the same pair
  // yields internally disjoint paths. Returns the fresh ids from u towards v.
  std::vector<Vertex> subdivide_edge(Vertex u, Vertex v, int ell);

  int num_vertices() const { return n_; }
  Graph build() const;

 private:
  void check(Vertex v) const;

  int n_;
  std::vector<Edge> edges_;
};

struct Subdivision {
  Graph graph;
  std::vector<Vertex> path;
};

Subdivision subdivide_edge(const Graph& g, Vertex u, Vertex v, int ell);

enum class GraphFormat { dimacs, edge_list };

// DIMACS: `p edge n m` header, `e u v` lines with 1-based ids, `c` comments.
// Edge list: one `u v` pair per line, 0-based, `#` starts a comment.
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph(std::string_view text, GraphFormat format);
void write_graph(std::ostream& out, const Graph& g, GraphFormat format);
std::string to_string(const Graph& g, GraphFormat format);

// Picks DIMACS when the first significant line starts with `p` or `c`.
GraphFormat detect_graph_format(std::string_view text);

inline constexpr int kUnreached = -1;

/// Breadth-first layers from `root` up to `max_depth`. A vertex is expanded
/// only if it is the root or satisfies `allowed`; vertices failing `allowed`
/// still receive a layer when discovered. Unreached vertices get kUnreached.
template <class Allowed>
std::vector<int> bfs_layers(const Graph& g, Vertex root, Allowed&& allowed,
                            int max_depth) {
  std::vector<int> layer(g.num_vertices(), kUnreached);
  std::deque<Vertex> queue{root};
  layer[root] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (layer[x] >= max_depth) continue;
    if (x != root && !allowed(x)) continue;
    for (Vertex y : g.neighbors(x)) {
      if (layer[y] != kUnreached) continue;
      layer[y] = layer[x] + 1;
      queue.push_back(y);
    }
  }
  return layer;
}

// Smallest-last (Matula-Beck) elimination order, returned left to right so
// that every vertex has at most degeneracy(g) neighbors after it.
std::vector<Vertex> degeneracy_order(const Graph& g);
int degeneracy(const Graph& g);

}  // namespace gencol
