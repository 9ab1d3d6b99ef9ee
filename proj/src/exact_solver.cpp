#include "gencol/exact_solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gencol/backconnectivity.hpp"
#include "gencol/errors.hpp"
#include "gencol/greedy.hpp"
#include "prefix_search.hpp"

namespace gencol {

std::string_view to_string(Parameter p) {
  switch (p) {
    case Parameter::col:
      return "col";
    case Parameter::wcol:
      return "wcol";
    case Parameter::adm:
      return "adm";
  }
  return "?";
}

Parameter parse_parameter(std::string_view name) {
  if (name == "col") return Parameter::col;
  if (name == "wcol") return Parameter::wcol;
  if (name == "adm") return Parameter::adm;
  throw InputError("unknown parameter '" + std::string(name) + "' (want col, wcol or adm)");
}

std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::yes:
      return "yes";
    case Answer::no:
      return "no";
    case Answer::budget_exhausted:
      return "budget_exhausted";
  }
  return "?";
}

int order_value(const Graph& g, Parameter p, const PrefixOrder& sigma, int r) {
  switch (p) {
    case Parameter::col:
      return col_of_order(g, sigma, r);
    case Parameter::wcol:
      return wcol_of_order(g, sigma, r);
    case Parameter::adm: {
      if (!sigma.is_total()) throw std::invalid_argument("order is not total");
      int best = 0;
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        best = std::max(best, exact_bcon(g, sigma, v, r));
      }
      return best;
    }
  }
  return 0;
}

DecisionResult decide(const Graph& g, Parameter p, int r, int k, SearchBudget budget,
                      const SearchOptions& options) {
  if (k < 0) throw std::invalid_argument("threshold must be non-negative");
  detail::PrefixSearchConfig config;
  config.objective = p;
  config.radius = r;
  config.threshold = k;
  config.budget = budget;
  config.twin_symmetry = options.twin_symmetry;
  config.threads = options.threads;
  config.hint = options.hint;
  auto outcome = detail::prefix_search(g, config);

  DecisionResult result;
  result.answer = outcome.answer;
  result.nodes_expanded = outcome.nodes;
  if (outcome.answer == Answer::yes) {
    PrefixOrder sigma(g.num_vertices(), outcome.order);
    int value = order_value(g, p, sigma, r);
    if (value > k) {
      throw std::logic_error("search produced an order of value " + std::to_string(value) +
                             " for threshold " + std::to_string(k));
    }
    result.witness = std::move(sigma);
  }
  return result;
}

DecisionResult decide_col(const Graph& g, int r, int k, SearchBudget budget,
                          const SearchOptions& options) {
  return decide(g, Parameter::col, r, k, budget, options);
}

DecisionResult decide_wcol(const Graph& g, int r, int k, SearchBudget budget,
                           const SearchOptions& options) {
  return decide(g, Parameter::wcol, r, k, budget, options);
}

DecisionResult decide_adm(const Graph& g, int r, int k, SearchBudget budget,
                          const SearchOptions& options) {
  return decide(g, Parameter::adm, r, k, budget, options);
}

MinimizeResult minimize(const Graph& g, Parameter p, int r, SearchBudget budget,
                        const SearchOptions& options) {
  if (r < 1) throw std::invalid_argument("radius must be at least 1");
  MinimizeResult result;
  result.parameter = p;
  result.radius = r;
  const int n = g.num_vertices();

  // Start from the better of the greedy order and the degeneracy order.
  PrefixOrder best = bounded_coloring(g, r).order;
  int hi = order_value(g, p, best, r);
  PrefixOrder peel(n, degeneracy_order(g));
  if (int v = order_value(g, p, peel, r); v < hi) {
    hi = v;
    best = peel;
  }
  // Every parameter is at least the degeneracy: the first vertex of a
  // minimum-degree-peel subgraph reaches all its neighbors there.
  int lo = degeneracy(g);
  result.order = best;

  SearchOptions opts = options;
  opts.hint.assign(best.placed().begin(), best.placed().end());
  while (hi > lo) {
    if (result.nodes_expanded >= budget.max_nodes) break;
    SearchBudget remaining = budget;
    remaining.max_nodes = budget.max_nodes - result.nodes_expanded;
    auto d = decide(g, p, r, hi - 1, remaining, opts);
    result.nodes_expanded += d.nodes_expanded;
    if (d.answer == Answer::budget_exhausted) break;
    if (d.answer == Answer::no) {
      lo = hi;
      break;
    }
    result.order = *d.witness;
    hi = order_value(g, p, result.order, r);
    opts.hint.assign(result.order.placed().begin(), result.order.placed().end());
  }
  result.lo = lo;
  result.hi = hi;
  return result;
}

}  // namespace gencol
