#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gencol/backconnectivity.hpp"
#include "gencol/graph.hpp"
#include "gencol/search.hpp"

namespace gencol::detail {

struct PrefixSearchConfig {
  Parameter objective = Parameter::col;
  int radius = 1;
  int threshold = 0;
  SearchBudget budget;
  bool twin_symmetry = true;
  int threads = 1;
  // Candidates are tried in this order first (e.g. a previous witness).
  std::vector<Vertex> hint;
  std::size_t max_paths = kDefaultMaxPaths;
};

struct PrefixSearchOutcome {
  Answer answer = Answer::no;
  std::vector<Vertex> order;
  std::uint64_t nodes = 0;
};

// Depth-first search over prefix extensions deciding whether some total
// order keeps the objective at or below the threshold.
PrefixSearchOutcome prefix_search(const Graph& g, const PrefixSearchConfig& config);

// Classes of pairwise twins (equal open or equal closed neighborhoods).
// twin_rank[v] is the index of v inside its class, class_of[v] its class id,
// members lists each class in increasing vertex order.
struct TwinClasses {
  std::vector<int> class_of;
  std::vector<std::vector<Vertex>> members;
};
TwinClasses twin_classes(const Graph& g);

}  // namespace gencol::detail
