#include "gencol/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

#include "gencol/errors.hpp"

namespace gencol {

namespace {

std::string line_error(std::size_t line_no, const std::string& what) {
  return "line " + std::to_string(line_no) + ": " + what;
}

std::string_view strip_comment(std::string_view line, char marker) {
  auto pos = line.find(marker);
  return pos == std::string_view::npos ? line : line.substr(0, pos);
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

Graph parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::istringstream tokens(line);
    std::string tag;
    tokens >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) throw InputError(line_error(line_no, "duplicate header"));
      std::string kind;
      long long count = -1;
      long long m = -1;
      if (!(tokens >> kind >> count >> m) || (kind != "edge" && kind != "col") ||
          count < 0 || m < 0) {
        throw InputError(line_error(line_no, "malformed header, expected `p edge n m`"));
      }
      n = static_cast<int>(count);
      continue;
    }
    if (tag == "e") {
      if (n < 0) throw InputError(line_error(line_no, "edge before header"));
      long long u = 0;
      long long v = 0;
      std::string rest;
      if (!(tokens >> u >> v) || (tokens >> rest)) {
        throw InputError(line_error(line_no, "malformed edge line"));
      }
      if (u < 1 || u > n || v < 1 || v > n) {
        throw InputError(line_error(line_no, "vertex id out of range"));
      }
      if (u == v) throw InputError(line_error(line_no, "self-loop"));
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
      continue;
    }
    throw InputError(line_error(line_no, "unknown line type `" + tag + "`"));
  }
  if (n < 0) throw InputError("missing `p edge` header");
  return Graph(n, edges);
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long max_id = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = strip_comment(line, '#');
    if (blank(body)) continue;
    std::istringstream tokens{std::string(body)};
    long long u = 0;
    long long v = 0;
    std::string rest;
    if (!(tokens >> u >> v) || (tokens >> rest)) {
      throw InputError(line_error(line_no, "expected `u v`"));
    }
    if (u < 0 || v < 0 || u > 1'000'000'000 || v > 1'000'000'000) {
      throw InputError(line_error(line_no, "vertex id out of range"));
    }
    if (u == v) throw InputError(line_error(line_no, "self-loop"));
    max_id = std::max({max_id, u, v});
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph(static_cast<int>(max_id + 1), edges);
}

}  // namespace

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::vector<Edge> arcs;
  arcs.reserve(2 * edges.size());
  for (const Edge& e : edges) {
    if (!contains(e.u) || !contains(e.v)) {
      throw InputError("edge endpoint out of range");
    }
    if (e.u == e.v) throw InputError("self-loop on vertex " + std::to_string(e.u));
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  offsets_.assign(n_ + 1, 0);
  for (const Edge& a : arcs) ++offsets_[a.u + 1];
  for (int v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  targets_.reserve(arcs.size());
  for (const Edge& a : arcs) targets_.push_back(a.v);
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

GraphBuilder::GraphBuilder(const Graph& g)
    : n_(g.num_vertices()), edges_(g.edges()) {}

Vertex GraphBuilder::add_vertex() { return n_++; }

Vertex GraphBuilder::add_vertices(int count) {
  if (count < 0) throw std::invalid_argument("negative vertex count");
  Vertex first = n_;
  n_ += count;
  return first;
}

void GraphBuilder::check(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
  edges_.push_back({u, v});
}

std::vector<Vertex> GraphBuilder::subdivide_edge(Vertex u, Vertex v, int ell) {
  check(u);
  check(v);
  if (ell < 0) throw std::invalid_argument("negative subdivision count");
  if (u == v) throw InputError("cannot subdivide a self-loop");
  std::vector<Vertex> path;
  path.reserve(ell);
  Vertex prev = u;
  for (int i = 0; i < ell; ++i) {
    Vertex s = add_vertex();
    path.push_back(s);
    edges_.push_back({prev, s});
    prev = s;
  }
  edges_.push_back({prev, v});
  return path;
}

Graph GraphBuilder::build() const { return Graph(n_, edges_); }

Subdivision subdivide_edge(const Graph& g, Vertex u, Vertex v, int ell) {
  GraphBuilder builder(g);
  auto path = builder.subdivide_edge(u, v, ell);
  return {builder.build(), std::move(path)};
}

Graph parse_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::dimacs ? parse_dimacs(in) : parse_edge_list(in);
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  std::istringstream in{std::string(text)};
  return parse_graph(in, format);
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
  auto edges = g.edges();
  if (format == GraphFormat::dimacs) {
    out << "p edge " << g.num_vertices() << ' ' << edges.size() << '\n';
    for (const Edge& e : edges) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  } else {
    for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
  }
}

std::string to_string(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  write_graph(out, g, format);
  return out.str();
}

GraphFormat detect_graph_format(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    auto line = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      char c = line[first];
      return (c == 'p' || c == 'c' || c == 'e') ? GraphFormat::dimacs
                                                : GraphFormat::edge_list;
    }
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return GraphFormat::edge_list;
}

std::vector<Vertex> degeneracy_order(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> deg(n);
  int max_deg = 0;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  // Bucket queue keyed by remaining degree; stale entries are skipped.
  std::vector<std::vector<Vertex>> buckets(max_deg + 1);
  for (Vertex v = n - 1; v >= 0; --v) buckets[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  int low = 0;
  while (static_cast<int>(order.size()) < n) {
    low = std::max(low - 1, 0);
    while (buckets[low].empty()) ++low;
    Vertex v = buckets[low].back();
    buckets[low].pop_back();
    if (removed[v] || deg[v] != low) continue;
    removed[v] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      --deg[w];
      buckets[deg[w]].push_back(w);
    }
  }
  return order;
}

int degeneracy(const Graph& g) {
  auto order = degeneracy_order(g);
  std::vector<int> pos(g.num_vertices());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  int best = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    int forward = 0;
    for (Vertex w : g.neighbors(v)) forward += pos[w] > pos[v];
    best = std::max(best, forward);
  }
  return best;
}

}  // namespace gencol
