// Command line front end. Exit codes: 0 ok, 1 decision "no", 2 input error,
// 3 budget exhausted.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "gencol/errors.hpp"
#include "gencol/exact_solver.hpp"
#include "gencol/graph.hpp"
#include "gencol/greedy.hpp"
#include "gencol/json_io.hpp"
#include "gencol/reachability.hpp"
#include "gencol/reductions.hpp"
#include "gencol/sat.hpp"

using namespace gencol;

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;
constexpr int kExhausted = 3;

struct Common {
  int r = 1;
  std::string format = "json";
  std::string graph_format = "auto";
  int threads = 1;
  std::uint64_t seed = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

Graph load_graph(const std::string& path, const std::string& format) {
  std::string text = read_file(path);
  GraphFormat f;
  if (format == "dimacs") {
    f = GraphFormat::dimacs;
  } else if (format == "edges") {
    f = GraphFormat::edge_list;
  } else {
    f = detect_graph_format(text);
  }
  return parse_graph(text, f);
}

GraphFormat output_format(const std::string& name) {
  return name == "dimacs" ? GraphFormat::dimacs : GraphFormat::edge_list;
}

std::string order_text(const PrefixOrder& sigma) {
  std::ostringstream out;
  write_order(out, sigma);
  return out.str();
}

// Text mode flattens the top level of the JSON document.
void emit(const json& doc, const Common& c) {
  if (c.format == "text") {
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      std::cout << it.key() << ": " << it.value().dump() << '\n';
    }
  } else {
    std::cout << doc.dump(2) << '\n';
  }
}

void add_common(CLI::App* app, Common& c, bool with_r = true) {
  if (with_r) app->add_option("--r", c.r, "radius")->check(CLI::PositiveNumber);
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app->add_option("--graph-format", c.graph_format, "input graph format")
      ->check(CLI::IsMember({"auto", "dimacs", "edges"}));
  app->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
  app->add_option("--seed", c.seed, "random seed");
}

int cmd_order(const Common& c, const std::string& graph_path, const std::string& order_out) {
  Graph g = load_graph(graph_path, c.graph_format);
  GreedyResult result = bounded_coloring(g, c.r);
  if (!order_out.empty()) write_file(order_out, order_text(result.order));
  emit(greedy_report(result), c);
  return kOk;
}

int cmd_compute(const Common& c, const std::string& graph_path, const std::string& param,
                std::optional<int> k, std::uint64_t budget_nodes,
                std::optional<long long> time_limit_ms, const std::string& order_out) {
  Graph g = load_graph(graph_path, c.graph_format);
  Parameter p = parse_parameter(param);
  SearchBudget budget;
  budget.max_nodes = budget_nodes;
  if (time_limit_ms) budget.time_limit = std::chrono::milliseconds(*time_limit_ms);
  SearchOptions options;
  options.threads = c.threads;

  if (k) {
    DecisionResult d = decide(g, p, c.r, *k, budget, options);
    if (d.witness && !order_out.empty()) write_file(order_out, order_text(*d.witness));
    emit(to_json(d, p, c.r, *k), c);
    switch (d.answer) {
      case Answer::yes:
        return kOk;
      case Answer::no:
        return kNo;
      case Answer::budget_exhausted:
        return kExhausted;
    }
  }
  MinimizeResult m = minimize(g, p, c.r, budget, options);
  if (!order_out.empty()) write_file(order_out, order_text(m.order));
  emit(to_json(m), c);
  return m.exact() ? kOk : kExhausted;
}

int cmd_eval(const Common& c, const std::string& graph_path, const std::string& order_path) {
  Graph g = load_graph(graph_path, c.graph_format);
  std::istringstream in(read_file(order_path));
  PrefixOrder sigma = parse_order(in, g.num_vertices());
  if (!sigma.is_total()) {
    throw InputError("order lists " + std::to_string(sigma.placed_count()) + " of " +
                     std::to_string(g.num_vertices()) + " vertices");
  }
  emit(to_json(evaluate_order(g, sigma, c.r)), c);
  return kOk;
}

struct ReduceArgs {
  std::string cnf;
  std::string kind;
  std::string graph_out;
  std::string graph_out_format = "edges";
  std::string roles_out;
  std::string witness;
  std::string order_out;
};

int cmd_reduce(const Common& c, const ReduceArgs& a) {
  CnfFormula phi = parse_cnf(read_file(a.cnf));
  ReductionKind kind = parse_reduction_kind(a.kind);
  int r = c.r;
  if (kind == ReductionKind::wcol2) r = 2;
  ReductionGraph rg = build_reduction(phi, kind, r);
  if (!a.graph_out.empty()) {
    write_file(a.graph_out, to_string(rg.graph, output_format(a.graph_out_format)));
  }
  if (!a.roles_out.empty()) write_file(a.roles_out, roles_json(rg).dump(2) + "\n");

  json doc;
  doc["kind"] = std::string(to_string(kind));
  doc["r"] = rg.radius;
  doc["n"] = rg.graph.num_vertices();
  doc["m"] = rg.graph.num_edges();
  doc["parameter"] = std::string(to_string(rg.parameter()));
  doc["threshold"] = rg.threshold();
  doc["strict_shape"] = rg.strict_shape;
  AuditReport audit = audit_structure(rg);
  doc["audit_clean"] = audit.clean();
  if (!a.witness.empty()) {
    std::istringstream in(read_file(a.witness));
    Assignment assignment = parse_assignment(in, phi.num_vars);
    if (!satisfies(phi, assignment)) throw InputError("witness assignment does not satisfy formula");
    PrefixOrder sigma = witness_order(rg, assignment);
    if (!a.order_out.empty()) write_file(a.order_out, order_text(sigma));
    doc["witness_value"] = order_value(rg.graph, rg.parameter(), sigma, rg.radius);
    doc["witness_order"] = order_json(sigma);
  }
  emit(doc, c);
  return kOk;
}

int cmd_sat(const Common& c, const std::string& action, const std::string& cnf,
            const std::string& out_path, const std::string& var_map_path, int width,
            int max_vars) {
  CnfFormula phi = parse_cnf(read_file(cnf));
  json doc;
  doc["action"] = action;
  doc["input_vars"] = phi.num_vars;
  doc["input_clauses"] = phi.clauses.size();
  if (action == "solve") {
    SatResult s = brute_force_sat(phi, max_vars);
    doc["satisfiable"] = s.satisfiable;
    if (s.satisfiable) {
      json lits = json::array();
      for (int j = 1; j <= phi.num_vars; ++j) lits.push_back(s.assignment[j] ? j : -j);
      doc["assignment"] = std::move(lits);
    }
    emit(doc, c);
    return s.satisfiable ? kOk : kNo;
  }
  CnfFormula result;
  if (action == "normalize2c3") {
    NormalizedFormula norm = normalize_to_2clause3sat(phi);
    result = norm.formula;
    doc["trivially_unsat"] = norm.trivially_unsat;
    doc["var_map"] = var_map_json(norm.var_map);
    if (!var_map_path.empty()) write_file(var_map_path, var_map_json(norm.var_map).dump(2) + "\n");
  } else {
    result = repair_exact_rsat(phi, width);
  }
  doc["output_vars"] = result.num_vars;
  doc["output_clauses"] = result.clauses.size();
  if (out_path.empty()) {
    std::cout << to_dimacs(result);
  } else {
    write_file(out_path, to_dimacs(result));
    emit(doc, c);
  }
  return kOk;
}

int cmd_gen(const Common& c, int n, double avg_degree, const std::string& out_path,
            const std::string& out_format) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  std::mt19937_64 rng(c.seed);
  double p = n > 1 ? std::min(1.0, avg_degree / (n - 1)) : 0.0;
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  std::string text = to_string(b.build(), output_format(out_format));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized coloring numbers: exact search, greedy ordering, reductions"};
  app.require_subcommand(1);
  Common common;

  std::string graph_path, order_path, order_out;
  auto* order = app.add_subcommand("order", "greedy ordering by estimated backconnectivity");
  add_common(order, common);
  order->add_option("graph", graph_path, "graph file")->required();
  order->add_option("--order-out", order_out, "write the order here");

  std::string param = "col";
  std::optional<int> k;
  std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
  std::optional<long long> time_limit_ms;
  auto* compute = app.add_subcommand("compute", "exact decision or minimization");
  add_common(compute, common);
  compute->add_option("graph", graph_path, "graph file")->required();
  compute->add_option("--param", param, "col, wcol or adm")
      ->check(CLI::IsMember({"col", "wcol", "adm"}));
  compute->add_option("--k", k, "decide value <= k instead of minimizing")
      ->check(CLI::NonNegativeNumber);
  compute->add_option("--budget-nodes", budget_nodes, "search node budget")
      ->check(CLI::PositiveNumber);
  compute->add_option("--time-limit-ms", time_limit_ms, "wall clock cap")
      ->check(CLI::PositiveNumber);
  compute->add_option("--order-out", order_out, "write the witness order here");

  auto* eval = app.add_subcommand("eval", "evaluate a total order");
  add_common(eval, common);
  eval->add_option("graph", graph_path, "graph file")->required();
  eval->add_option("order", order_path, "order file")->required();

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "build a hardness reduction graph");
  add_common(reduce, common);
  reduce->add_option("cnf", reduce_args.cnf, "DIMACS CNF file")->required();
  reduce->add_option("--kind", reduce_args.kind, "wcol2, wcolr or colr")
      ->required()
      ->check(CLI::IsMember({"wcol2", "wcolr", "colr"}));
  reduce->add_option("--graph-out", reduce_args.graph_out, "write the graph here");
  reduce->add_option("--graph-out-format", reduce_args.graph_out_format, "dimacs or edges")
      ->check(CLI::IsMember({"dimacs", "edges"}));
  reduce->add_option("--roles-out", reduce_args.roles_out, "write the role table here");
  reduce->add_option("--witness", reduce_args.witness, "satisfying assignment file");
  reduce->add_option("--order-out", reduce_args.order_out, "write the witness order here");

  std::string sat_action, cnf_path, sat_out, var_map_out;
  int width = 3;
  int max_vars = kDefaultSatVarCap;
  auto* sat = app.add_subcommand("sat", "CNF transformations and brute-force solving");
  add_common(sat, common, false);
  sat->add_option("action", sat_action, "normalize2c3, exact-r or solve")
      ->required()
      ->check(CLI::IsMember({"normalize2c3", "exact-r", "solve"}));
  sat->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
  sat->add_option("--r", width, "clause width for exact-r")->check(CLI::PositiveNumber);
  sat->add_option("--out", sat_out, "write the transformed formula here");
  sat->add_option("--var-map", var_map_out, "write the variable map here");
  sat->add_option("--max-vars", max_vars, "variable cap for solve")->check(CLI::PositiveNumber);

  int gen_n = 10;
  double gen_degree = 3.0;
  std::string gen_out, gen_format = "edges";
  auto* gen = app.add_subcommand("gen", "random graph with a given average degree");
  add_common(gen, common, false);
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--avg-degree", gen_degree, "expected average degree");
  gen->add_option("--out", gen_out, "output file");
  gen->add_option("--out-format", gen_format, "dimacs or edges")
      ->check(CLI::IsMember({"dimacs", "edges"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (order->parsed()) return cmd_order(common, graph_path, order_out);
    if (compute->parsed()) {
      return cmd_compute(common, graph_path, param, k, budget_nodes, time_limit_ms, order_out);
    }
    if (eval->parsed()) return cmd_eval(common, graph_path, order_path);
    if (reduce->parsed()) return cmd_reduce(common, reduce_args);
    if (sat->parsed()) return cmd_sat(common, sat_action, cnf_path, sat_out, var_map_out, width, max_vars);
    if (gen->parsed()) return cmd_gen(common, gen_n, gen_degree, gen_out, gen_format);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExhausted;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
