#include "gencol/reachability.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bounded_bfs.hpp"
#include "gencol/errors.hpp"

namespace gencol {

namespace {

void check_radius(int r) {
  if (r < 1) throw std::invalid_argument("radius must be at least 1");
}

void check_vertex(const Graph& g, const PrefixOrder& sigma, Vertex u) {
  if (sigma.size() != g.num_vertices()) {
    throw std::invalid_argument("order size does not match graph");
  }
  if (!g.contains(u)) throw std::out_of_range("vertex out of range");
}

}  // namespace

PrefixOrder::PrefixOrder(int n) : position_(n, kUnplaced) {}

PrefixOrder::PrefixOrder(int n, std::span<const Vertex> placed)
    : PrefixOrder(n) {
  placed_.reserve(placed.size());
  for (Vertex v : placed) {
    if (v < 0 || v >= n) {
      throw InputError("order entry " + std::to_string(v) + " out of range");
    }
    if (is_placed(v)) {
      throw InputError("order entry " + std::to_string(v) + " repeated");
    }
    place(v);
  }
}

PrefixOrder PrefixOrder::identity(int n) {
  PrefixOrder sigma(n);
  for (Vertex v = 0; v < n; ++v) sigma.place(v);
  return sigma;
}

void PrefixOrder::place(Vertex v) {
  if (position_[v] != kUnplaced) {
    throw std::logic_error("vertex " + std::to_string(v) + " already placed");
  }
  position_[v] = placed_count();
  placed_.push_back(v);
}

void PrefixOrder::unplace_last() {
  if (placed_.empty()) throw std::logic_error("nothing to unplace");
  position_[placed_.back()] = kUnplaced;
  placed_.pop_back();
}

PrefixOrder PrefixOrder::reversed() const {
  if (!is_total()) throw std::invalid_argument("reversal needs a total order");
  std::vector<Vertex> rev(placed_.rbegin(), placed_.rend());
  return PrefixOrder(size(), rev);
}

std::vector<ReachEntry> reach_set(const Graph& g, const PrefixOrder& sigma,
                                  Vertex u, int r) {
  check_radius(r);
  check_vertex(g, sigma, u);
  detail::BoundedBfs bfs(g.num_vertices());
  std::vector<ReachEntry> out;
  bfs.run(
      g, u, r, [&](Vertex w) { return sigma.precedes(w, u); },
      [&](Vertex w, int d) {
        if (!sigma.precedes(w, u)) out.push_back({w, d});
      });
  std::sort(out.begin(), out.end(),
            [](const ReachEntry& a, const ReachEntry& b) { return a.vertex < b.vertex; });
  return out;
}

std::vector<Vertex> wreach_set(const Graph& g, const PrefixOrder& sigma,
                               Vertex u, int r) {
  check_radius(r);
  check_vertex(g, sigma, u);
  const int n = g.num_vertices();
  detail::BoundedBfs ball(n);
  std::vector<Vertex> candidates;
  ball.run(
      g, u, r, [](Vertex) { return true; },
      [&](Vertex v, int) {
        if (!sigma.precedes(v, u)) candidates.push_back(v);
      });

  // A candidate v qualifies if u is within r of v through vertices before v.
  detail::BoundedBfs back(n);
  std::vector<Vertex> out;
  for (Vertex v : candidates) {
    bool hit = false;
    back.run(
        g, v, r, [&](Vertex w) { return w != u && sigma.precedes(w, v); },
        [&](Vertex w, int) { hit = hit || w == u; });
    if (hit) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReachReport evaluate_order(const Graph& g, const PrefixOrder& sigma, int r) {
  check_radius(r);
  if (sigma.size() != g.num_vertices()) {
    throw std::invalid_argument("order size does not match graph");
  }
  if (!sigma.is_total()) throw std::invalid_argument("order is not total");
  const int n = g.num_vertices();
  ReachReport report;
  report.radius = r;
  report.reach.resize(n);
  report.wreach.resize(n);
  detail::BoundedBfs bfs(n);

  for (Vertex u = 0; u < n; ++u) {
    const int pu = sigma.position(u);
    auto& reach = report.reach[u];
    bfs.run(
        g, u, r, [&](Vertex w) { return sigma.position(w) < pu; },
        [&](Vertex w, int d) {
          if (sigma.position(w) > pu) reach.push_back({w, d});
        });
    std::sort(reach.begin(), reach.end(),
              [](const ReachEntry& a, const ReachEntry& b) { return a.vertex < b.vertex; });
  }

  // Backward search from each target v through vertices before v; every
  // earlier vertex found weakly reaches v.
  for (Vertex v = 0; v < n; ++v) {
    const int pv = sigma.position(v);
    bfs.run(
        g, v, r, [&](Vertex w) { return sigma.position(w) < pv; },
        [&](Vertex w, int) {
          if (sigma.position(w) < pv) report.wreach[w].push_back(v);
        });
  }

  for (Vertex u = 0; u < n; ++u) {
    std::sort(report.wreach[u].begin(), report.wreach[u].end());
    report.col = std::max(report.col, static_cast<int>(report.reach[u].size()));
    report.wcol = std::max(report.wcol, static_cast<int>(report.wreach[u].size()));
  }
  return report;
}

int col_of_order(const Graph& g, const PrefixOrder& sigma, int r) {
  return evaluate_order(g, sigma, r).col;
}

int wcol_of_order(const Graph& g, const PrefixOrder& sigma, int r) {
  return evaluate_order(g, sigma, r).wcol;
}

PrefixOrder parse_order(std::istream& in, int n) {
  std::vector<Vertex> ids;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw InputError("order token `" + token + "` is not an integer");
    }
    if (used != token.size()) {
      throw InputError("order token `" + token + "` is not an integer");
    }
    if (value < 0 || value >= n) {
      throw InputError("order entry " + token + " out of range");
    }
    ids.push_back(static_cast<Vertex>(value));
  }
  return PrefixOrder(n, ids);
}

void write_order(std::ostream& out, const PrefixOrder& sigma) {
  bool first = true;
  for (Vertex v : sigma.placed()) {
    if (!first) out << ' ';
    out << v;
    first = false;
  }
  out << '\n';
}

}  // namespace gencol
