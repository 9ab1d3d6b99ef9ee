#include "gencol/json_io.hpp"

#include <string>

namespace gencol {

json order_json(const PrefixOrder& sigma) {
  return json(std::vector<Vertex>(sigma.placed().begin(), sigma.placed().end()));
}

json to_json(const ReachReport& report) {
  json out;
  out["r"] = report.radius;
  out["col"] = report.col;
  out["wcol"] = report.wcol;
  json reach = json::object();
  for (std::size_t u = 0; u < report.reach.size(); ++u) {
    json row = json::array();
    for (const ReachEntry& e : report.reach[u]) row.push_back(e.vertex);
    reach[std::to_string(u)] = std::move(row);
  }
  json wreach = json::object();
  for (std::size_t u = 0; u < report.wreach.size(); ++u) {
    wreach[std::to_string(u)] = report.wreach[u];
  }
  out["reach"] = std::move(reach);
  out["wreach"] = std::move(wreach);
  return out;
}

json to_json(const DecisionResult& result, Parameter p, int r, int k) {
  json out;
  out["parameter"] = std::string(to_string(p));
  out["r"] = r;
  out["k"] = k;
  out["answer"] = std::string(to_string(result.answer));
  if (result.witness) out["order"] = order_json(*result.witness);
  out["nodes_expanded"] = result.nodes_expanded;
  return out;
}

json to_json(const MinimizeResult& result) {
  json out;
  out["parameter"] = std::string(to_string(result.parameter));
  out["r"] = result.radius;
  if (result.exact()) {
    out["value"] = result.hi;
  } else {
    out["bracket"] = {result.lo, result.hi};
  }
  out["order"] = order_json(result.order);
  out["nodes_expanded"] = result.nodes_expanded;
  return out;
}

json greedy_report(const GreedyResult& result) {
  json out;
  out["r"] = result.report.radius;
  out["col"] = result.report.col;
  out["wcol"] = result.report.wcol;
  out["max_est_seen"] = result.max_est_seen;
  // The bounds hold with k = max_est_seen as well as with k = adm_r(G),
  // since only the estimates at extraction time enter the argument.
  TheoremBounds b = theorem_bounds(result.max_est_seen, result.report.radius);
  json check;
  check["k"] = b.k;
  check["degenerate"] = b.degenerate;
  check["col_bound"] = b.col_bound;
  check["col_ok"] = static_cast<std::uint64_t>(result.report.col) <= b.col_bound;
  if (b.wcol_bound) {
    check["wcol_bound"] = *b.wcol_bound;
    check["wcol_ok"] = static_cast<std::uint64_t>(result.report.wcol) <= *b.wcol_bound;
  } else {
    check["wcol_bound"] = nullptr;
    check["wcol_ok"] = nullptr;
  }
  out["bound_check"] = std::move(check);
  out["order"] = order_json(result.order);
  return out;
}

json roles_json(const ReductionGraph& rg) {
  json out = json::object();
  for (std::size_t v = 0; v < rg.roles.size(); ++v) out[std::to_string(v)] = to_string(rg.roles[v]);
  return out;
}

json var_map_json(const std::map<int, int>& var_map) {
  json out = json::object();
  for (auto [from, to] : var_map) out[std::to_string(from)] = to;
  return out;
}

}  // namespace gencol
