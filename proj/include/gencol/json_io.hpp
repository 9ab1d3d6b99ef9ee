#pragma once

#include <map>

#include <json.hpp>

#include "gencol/exact_solver.hpp"
#include "gencol/greedy.hpp"
#include "gencol/reachability.hpp"
#include "gencol/reductions.hpp"
#include "gencol/search.hpp"

namespace gencol {

using json = nlohmann::ordered_json;

json order_json(const PrefixOrder& sigma);

// {r, col, wcol, reach: {u: [v...]}, wreach: {u: [v...]}}
json to_json(const ReachReport& report);

json to_json(const DecisionResult& result, Parameter p, int r, int k);

// {parameter, r, value | bracket, order, nodes_expanded}
json to_json(const MinimizeResult& result);

// {r, col, wcol, max_est_seen, bound_check, order}
json greedy_report(const GreedyResult& result);

// {vertex_id: role}
json roles_json(const ReductionGraph& rg);

// {original_var: new_var}
json var_map_json(const std::map<int, int>& var_map);

}  // namespace gencol
