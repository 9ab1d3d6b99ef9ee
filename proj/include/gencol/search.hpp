#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "gencol/reachability.hpp"

namespace gencol {

enum class Parameter { col, wcol, adm };

std::string_view to_string(Parameter p);
// Throws InputError for anything other than col, wcol, adm.
Parameter parse_parameter(std::string_view name);

/// Limits for an exhaustive search. Both limits must be positive.
struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
  std::optional<std::chrono::milliseconds> time_limit;
};

enum class Answer { yes, no, budget_exhausted };

std::string_view to_string(Answer a);

struct DecisionResult {
  Answer answer = Answer::no;
  std::optional<PrefixOrder> witness;  // present iff answer == yes
  std::uint64_t nodes_expanded = 0;
};

}  // namespace gencol
