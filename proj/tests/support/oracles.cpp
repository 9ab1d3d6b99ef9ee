#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

std::vector<std::vector<Vertex>> simple_paths(const Graph& g, Vertex u, int r) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path{u};
  auto walk = [&](auto&& self) -> void {
    if (static_cast<int>(path.size()) > r) return;
    for (Vertex y : g.neighbors(path.back())) {
      if (std::find(path.begin(), path.end(), y) != path.end()) continue;
      path.push_back(y);
      out.push_back(path);
      self(self);
      path.pop_back();
    }
  };
  walk(walk);
  return out;
}

namespace {

bool internals_before(const std::vector<Vertex>& p, const PrefixOrder& sigma, Vertex pivot) {
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    if (!sigma.precedes(p[i], pivot)) return false;
  }
  return true;
}

std::map<Vertex, int> collect(const Graph& g, const PrefixOrder& sigma, Vertex u, int r,
                              bool weak) {
  std::map<Vertex, int> out;
  for (const auto& p : simple_paths(g, u, r)) {
    Vertex v = p.back();
    if (sigma.precedes(v, u)) continue;
    if (!internals_before(p, sigma, weak ? v : u)) continue;
    int len = static_cast<int>(p.size()) - 1;
    auto it = out.find(v);
    if (it == out.end() || it->second > len) out[v] = len;
  }
  return out;
}

}  // namespace

std::map<Vertex, int> naive_reach(const Graph& g, const PrefixOrder& sigma, Vertex u, int r) {
  return collect(g, sigma, u, r, false);
}

std::map<Vertex, int> naive_wreach(const Graph& g, const PrefixOrder& sigma, Vertex u, int r) {
  return collect(g, sigma, u, r, true);
}

int brute_packing(const Graph& g, const PrefixOrder& sigma, Vertex u, int r, bool shortest_only) {
  auto dist = naive_reach(g, sigma, u, r);
  std::vector<std::vector<Vertex>> paths;
  for (const auto& p : simple_paths(g, u, r)) {
    Vertex v = p.back();
    if (sigma.precedes(v, u) || !internals_before(p, sigma, u)) continue;
    if (shortest_only && static_cast<int>(p.size()) - 1 != dist.at(v)) continue;
    paths.emplace_back(p.begin() + 1, p.end());
  }
  int best = 0;
  std::vector<char> used(g.num_vertices(), 0);
  auto pack = [&](auto&& self, std::size_t i, int count) -> void {
    best = std::max(best, count);
    if (i == paths.size() || count + static_cast<int>(paths.size() - i) <= best) return;
    const auto& p = paths[i];
    bool free = std::none_of(p.begin(), p.end(), [&](Vertex v) { return used[v]; });
    if (free) {
      for (Vertex v : p) used[v] = 1;
      self(self, i + 1, count + 1);
      for (Vertex v : p) used[v] = 0;
    }
    self(self, i + 1, count);
  };
  pack(pack, 0, 0);
  return best;
}

int permutation_minimum(const Graph& g, gencol::Parameter p, int r) {
  const int n = g.num_vertices();
  if (n == 0) return 0;
  if (n > 10) throw std::invalid_argument("permutation oracle is for tiny graphs");
  const std::size_t subsets = std::size_t{1} << n;
  // value[v][mask]: col/adm value of v, or for wcol the mask of earlier
  // vertices whose weak reach contains v.
  std::vector<std::vector<int>> value(n, std::vector<int>(subsets, -1));
  auto order_for = [&](unsigned mask, Vertex v) {
    std::vector<Vertex> placed;
    for (Vertex w = 0; w < n; ++w) {
      if (mask >> w & 1) placed.push_back(w);
    }
    placed.push_back(v);
    return PrefixOrder(n, placed);
  };
  auto lookup = [&](Vertex v, unsigned mask) {
    int& slot = value[v][mask];
    if (slot >= 0) return slot;
    PrefixOrder sigma = order_for(mask, v);
    switch (p) {
      case gencol::Parameter::col:
        slot = static_cast<int>(naive_reach(g, sigma, v, r).size());
        break;
      case gencol::Parameter::adm:
        slot = brute_packing(g, sigma, v, r, false);
        break;
      case gencol::Parameter::wcol: {
        int reached_by = 0;
        for (const auto& path : simple_paths(g, v, r)) {
          Vertex u = path.back();
          if ((mask >> u & 1) && internals_before(path, sigma, v)) reached_by |= 1 << u;
        }
        slot = reached_by;
        break;
      }
    }
    return slot;
  };

  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = n;
  do {
    int worst = 0;
    unsigned mask = 0;
    std::vector<int> weak(n, 0);
    for (Vertex v : perm) {
      int x = lookup(v, mask);
      if (p == gencol::Parameter::wcol) {
        for (Vertex u = 0; u < n; ++u) {
          if (x >> u & 1) worst = std::max(worst, ++weak[u]);
        }
      } else {
        worst = std::max(worst, x);
      }
      if (worst >= best) break;
      mask |= 1u << v;
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

int peel_degeneracy(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> deg(n);
  std::vector<char> gone(n, 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  int best = 0;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!gone[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    }
    best = std::max(best, deg[pick]);
    gone[pick] = 1;
    for (Vertex w : g.neighbors(pick)) {
      if (!gone[w]) --deg[w];
    }
  }
  return best;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  gencol::GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  return b.build();
}

PrefixOrder random_prefix(std::mt19937_64& rng, int n, int placed) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  perm.resize(placed);
  return PrefixOrder(n, perm);
}

namespace {

gencol::Literal signed_literal(std::mt19937_64& rng, int var) {
  return std::bernoulli_distribution(0.5)(rng) ? var : -var;
}

}  // namespace

gencol::CnfFormula random_tovey(std::mt19937_64& rng, int vars, int clauses) {
  std::vector<int> budget(vars + 1, 3);
  std::vector<std::vector<gencol::Literal>> out;
  std::uniform_int_distribution<int> width(1, 3);
  for (int c = 0; c < clauses; ++c) {
    std::vector<int> free;
    for (int j = 1; j <= vars; ++j) {
      if (budget[j] > 0) free.push_back(j);
    }
    if (free.empty()) break;
    std::shuffle(free.begin(), free.end(), rng);
    int w = std::min<int>(width(rng), static_cast<int>(free.size()));
    std::vector<gencol::Literal> clause;
    for (int i = 0; i < w; ++i) {
      --budget[free[i]];
      clause.push_back(signed_literal(rng, free[i]));
    }
    out.push_back(std::move(clause));
  }
  return gencol::CnfFormula::from_clauses(vars, std::move(out));
}

gencol::CnfFormula random_2clause3sat(std::mt19937_64& rng, int vars) {
  std::vector<gencol::Literal> tokens;
  for (int j = 1; j <= vars; ++j) {
    for (int t = 0; t < 2; ++t) {
      tokens.push_back(j);
      tokens.push_back(-j);
    }
  }
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::shuffle(tokens.begin(), tokens.end(), rng);
    std::vector<std::vector<gencol::Literal>> clauses;
    std::size_t i = 0;
    bool ok = true;
    while (i < tokens.size() && ok) {
      std::size_t left = tokens.size() - i;
      std::size_t w = left == 2 || left == 3 ? left : (left == 4 ? 2 : 2 + rng() % 2);
      std::vector<gencol::Literal> clause(tokens.begin() + i, tokens.begin() + i + w);
      for (std::size_t a = 0; a < w && ok; ++a) {
        for (std::size_t b = a + 1; b < w; ++b) {
          if (gencol::var_of(clause[a]) == gencol::var_of(clause[b])) ok = false;
        }
      }
      clauses.push_back(std::move(clause));
      i += w;
    }
    if (ok) return gencol::CnfFormula::from_clauses(vars, std::move(clauses));
  }
  throw std::runtime_error("could not draw a 2-Clause 3-SAT formula");
}

gencol::CnfFormula random_exact(std::mt19937_64& rng, int vars, int clauses, int r) {
  std::vector<int> ids(vars);
  std::iota(ids.begin(), ids.end(), 1);
  std::vector<std::vector<gencol::Literal>> out;
  for (int c = 0; c < clauses; ++c) {
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<gencol::Literal> clause;
    for (int i = 0; i < r; ++i) clause.push_back(signed_literal(rng, ids[i]));
    out.push_back(std::move(clause));
  }
  return gencol::CnfFormula::from_clauses(vars, std::move(out));
}

gencol::CnfFormula random_cnf(std::mt19937_64& rng, int vars, int clauses, int max_width) {
  std::vector<int> ids(vars);
  std::iota(ids.begin(), ids.end(), 1);
  std::uniform_int_distribution<int> width(1, std::min(max_width, vars));
  std::vector<std::vector<gencol::Literal>> out;
  for (int c = 0; c < clauses; ++c) {
    std::shuffle(ids.begin(), ids.end(), rng);
    int w = width(rng);
    std::vector<gencol::Literal> clause;
    for (int i = 0; i < w; ++i) clause.push_back(signed_literal(rng, ids[i]));
    out.push_back(std::move(clause));
  }
  return gencol::CnfFormula::from_clauses(vars, std::move(out));
}

bool truth_table_sat(const gencol::CnfFormula& phi) {
  const int n = phi.num_vars;
  if (n > 26) throw std::invalid_argument("truth table too large");
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    bool all = true;
    for (const auto& c : phi.clauses) {
      bool any = false;
      for (gencol::Literal l : c) {
        bool value = bits >> (gencol::var_of(l) - 1) & 1;
        if (value == (l > 0)) {
          any = true;
          break;
        }
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

namespace {

using Clauses = std::vector<std::vector<gencol::Literal>>;

Clauses assume(const Clauses& clauses, gencol::Literal l) {
  Clauses out;
  for (const auto& c : clauses) {
    if (std::find(c.begin(), c.end(), l) != c.end()) continue;
    std::vector<gencol::Literal> rest;
    for (gencol::Literal x : c) {
      if (x != -l) rest.push_back(x);
    }
    out.push_back(std::move(rest));
  }
  return out;
}

bool dpll(const Clauses& clauses) {
  if (clauses.empty()) return true;
  const std::vector<gencol::Literal>* shortest = &clauses.front();
  for (const auto& c : clauses) {
    if (c.size() < shortest->size()) shortest = &c;
  }
  if (shortest->empty()) return false;
  gencol::Literal l = shortest->front();
  if (dpll(assume(clauses, l))) return true;
  return shortest->size() > 1 && dpll(assume(clauses, -l));
}

}  // namespace

bool dpll_sat(const gencol::CnfFormula& phi) { return dpll(phi.clauses); }

}  // namespace oracle
