#pragma once

#include <cstdint>
#include <vector>

#include "gencol/graph.hpp"
#include "gencol/reachability.hpp"
#include "gencol/search.hpp"

namespace gencol {

struct SearchOptions {
  // Place interchangeable twins in id order only. Sound for all three
  // parameters since swapping twins is an automorphism.
  bool twin_symmetry = true;
  // Workers split the first-placement branches. Results are no longer
  // deterministic with more than one.
  int threads = 1;
  // Preferred candidate order, e.g. a witness for a larger threshold.
  std::vector<Vertex> hint;
};

// Decide whether some total order keeps col_r (wcol_r, adm_r) at most k.
// A "yes" witness has been re-evaluated from scratch before it is returned.
DecisionResult decide_col(const Graph& g, int r, int k, SearchBudget budget = {},
                          const SearchOptions& options = {});
DecisionResult decide_wcol(const Graph& g, int r, int k, SearchBudget budget = {},
                           const SearchOptions& options = {});
DecisionResult decide_adm(const Graph& g, int r, int k, SearchBudget budget = {},
                          const SearchOptions& options = {});
DecisionResult decide(const Graph& g, Parameter p, int r, int k, SearchBudget budget = {},
                      const SearchOptions& options = {});

// Value of the parameter realized by a total order (adm via exact packing).
int order_value(const Graph& g, Parameter p, const PrefixOrder& sigma, int r);

struct MinimizeResult {
  Parameter parameter = Parameter::col;
  int radius = 1;
  int lo = 0;  // proven lower bound
  int hi = 0;  // value of `order`
  PrefixOrder order;
  std::uint64_t nodes_expanded = 0;

  bool exact() const { return lo == hi; }
};

// Descends from the greedy upper bound until the search says "no". When the
// budget runs out the result is the bracket [lo, hi] instead.
MinimizeResult minimize(const Graph& g, Parameter p, int r, SearchBudget budget = {},
                        const SearchOptions& options = {});

}  // namespace gencol
