#include <doctest.h>

#include <algorithm>
#include <random>

#include "gencol/errors.hpp"
#include "gencol/reductions.hpp"
#include "oracles.hpp"

using namespace gencol;

namespace {

const char* kTwoClause = "p cnf 4 2\n1 2 3 0\n-3 4 0\n";
const char* kFourSquare = "p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n";

int value_of(const ReductionGraph& rg, const PrefixOrder& sigma) {
  auto rep = evaluate_order(rg.graph, sigma, rg.radius);
  return rg.parameter() == Parameter::col ? rep.col : rep.wcol;
}

ReductionGraph drop_edge(ReductionGraph rg, std::size_t which) {
  auto edges = rg.graph.edges();
  edges.erase(edges.begin() + static_cast<long>(which));
  rg.graph = Graph(rg.graph.num_vertices(), edges);
  return rg;
}

}  // namespace

TEST_CASE("weak radius two census") {
  auto rg = build_wcol2(parse_cnf(kTwoClause));
  CHECK(rg.graph.num_vertices() == 22);
  CHECK(rg.graph.num_edges() == 46);
  CHECK(rg.threshold() == 5);
  CHECK(rg.parameter() == Parameter::wcol);
  CHECK_FALSE(rg.strict_shape);
  CHECK(audit_structure(rg).clean());
  CHECK(audit_structure(rg).expected_vertices == 22);
  // each u sees exactly its clause's literal vertices, plus fillers for
  // two-literal clauses
  for (std::size_t i = 0; i < rg.clause_vertices.size(); ++i) {
    int width = static_cast<int>(rg.formula.clauses[i].size());
    for (Vertex u : rg.clause_vertices[i]) CHECK(rg.graph.degree(u) == width + (width == 2 ? 2 : 0));
  }
  auto empty = build_wcol2(CnfFormula{3, {}});
  CHECK(empty.graph.num_vertices() == 6);
  CHECK(empty.graph.num_edges() == 3);
  CHECK(build_wcol2(parse_cnf(kFourSquare)).strict_shape);
  CHECK_THROWS_AS(build_wcol2(parse_cnf("p cnf 2 1\n1 0\n")), InputError);
  CHECK_THROWS_AS(build_wcol2(parse_cnf("p cnf 4 1\n1 2 3 4 0\n")), InputError);
}

TEST_CASE("weak radius r census and distances") {
  auto rg = build_wcolr(parse_cnf("p cnf 3 1\n1 2 3 0\n"), 3);
  CHECK(rg.graph.num_vertices() == 48);
  CHECK(rg.graph.num_edges() == 75);
  CHECK(rg.threshold() == 5);
  CHECK(audit_structure(rg).clean());
  for (const auto& p : rg.paths) CHECK(p.inner.size() == 1);

  std::mt19937_64 rng(4);
  for (int r = 3; r <= 4; ++r) {
    auto big = build_wcolr(oracle::random_exact(rng, 5, 3, r), r);
    CHECK(audit_structure(big).clean());
    std::vector<Vertex> us;
    for (const auto& block : big.clause_vertices) us.insert(us.end(), block.begin(), block.end());
    for (Vertex a : us) {
      auto layer = bfs_layers(big.graph, a, [](Vertex) { return true; }, r);
      for (Vertex b : us) {
        if (b != a) CHECK(layer[b] == kUnreached);
      }
    }
  }
  try {
    build_wcolr(parse_cnf("p cnf 2 1\n1 2 0\n"), 2);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("wcol2") != std::string::npos);
  }
  CHECK_THROWS_AS(build_wcolr(parse_cnf("p cnf 3 1\n1 2 0\n"), 3), InputError);
}

TEST_CASE("strong radius r census and clique") {
  auto rg = build_colr(parse_cnf("p cnf 3 1\n1 2 3 0\n"), 2);
  CHECK(rg.graph.num_vertices() == 17);
  CHECK(rg.graph.num_edges() == 52);
  CHECK(rg.threshold() == 6);
  CHECK(rg.parameter() == Parameter::col);
  CHECK(audit_structure(rg).clean());
  REQUIRE(rg.clique.size() == 7);
  for (Vertex a : rg.clique)
    for (Vertex b : rg.clique)
      if (a != b) CHECK(rg.graph.has_edge(a, b));
  Vertex u = rg.clause_vertices[0][0];
  CHECK_FALSE(rg.graph.has_edge(u, rg.clique[4]));

  auto two = build_colr(parse_cnf("p cnf 2 1\n1 -2 0\n"), 3);
  CHECK(two.graph.has_edge(two.clause_vertices[0][0], two.clique[4]));
  CHECK(audit_structure(two).clean());
  for (const auto& p : two.paths) CHECK(p.inner.size() == 2);
  CHECK_THROWS_AS(build_colr(parse_cnf(kFourSquare), 1), InputError);
}

TEST_CASE("audit catches a missing edge") {
  std::mt19937_64 rng(8);
  auto phi = oracle::random_2clause3sat(rng, 3);
  for (auto kind : {ReductionKind::wcol2, ReductionKind::colr}) {
    auto rg = build_reduction(phi, kind, 2);
    REQUIRE(audit_structure(rg).clean());
    for (std::size_t e = 0; e < rg.graph.num_edges(); e += 7) {
      auto report = audit_structure(drop_edge(rg, e));
      CHECK_FALSE(report.clean());
      CHECK(report.actual_edges + 1 == report.expected_edges);
    }
  }
  auto wr = build_wcolr(parse_cnf("p cnf 3 1\n1 -2 3 0\n"), 3);
  CHECK_FALSE(audit_structure(drop_edge(wr, 0)).clean());
}

TEST_CASE("audit catches a rewired edge") {
  auto rg = build_wcol2(parse_cnf(kFourSquare));
  auto edges = rg.graph.edges();
  // swap one literal attachment to the other polarity
  Vertex u = rg.clause_vertices[0][0];
  auto it = std::find(edges.begin(), edges.end(),
                      Edge{std::min(u, rg.pos_literal[0]), std::max(u, rg.pos_literal[0])});
  REQUIRE(it != edges.end());
  *it = Edge{std::min(u, rg.neg_literal[0]), std::max(u, rg.neg_literal[0])};
  rg.graph = Graph(rg.graph.num_vertices(), edges);
  auto report = audit_structure(rg);
  CHECK_FALSE(report.clean());
}

TEST_CASE("witness orders meet the thresholds and round trip") {
  std::mt19937_64 rng(55);
  int done[3] = {0, 0, 0};
  for (int trial = 0; trial < 400 && *std::min_element(done, done + 3) < 20; ++trial) {
    int kind_index = trial % 3;
    auto kind = static_cast<ReductionKind>(kind_index);
    CnfFormula phi = kind == ReductionKind::wcolr
                         ? oracle::random_exact(rng, 3 + trial % 3, 1 + trial % 4, 3)
                         : oracle::random_2clause3sat(rng, 2 + trial % 4);
    auto sat = brute_force_sat(phi);
    if (!sat.satisfiable) continue;
    auto rg = build_reduction(phi, kind, kind == ReductionKind::wcolr ? 3 : 2);
    auto sigma = witness_order(rg, sat.assignment);
    REQUIRE(sigma.is_total());
    CHECK(value_of(rg, sigma) <= rg.threshold());
    CHECK(satisfies(phi, extract_assignment(rg, sigma)));
    ++done[kind_index];
  }
  for (int c : done) CHECK(c >= 20);
}

TEST_CASE("literal order conventions") {
  auto weak = build_wcol2(parse_cnf(kFourSquare));
  auto strong = build_colr(parse_cnf(kFourSquare), 2);
  for (const auto* rg : {&weak, &strong}) {
    std::vector<Vertex> ids;
    ids.push_back(rg->pos_literal[0]);
    ids.push_back(rg->neg_literal[0]);
    ids.push_back(rg->neg_literal[1]);
    ids.push_back(rg->pos_literal[1]);
    for (Vertex v = 0; v < rg->graph.num_vertices(); ++v) {
      if (std::find(ids.begin(), ids.end(), v) == ids.end()) ids.push_back(v);
    }
    auto a = extract_assignment(*rg, PrefixOrder(rg->graph.num_vertices(), ids));
    bool colr = rg->kind == ReductionKind::colr;
    CHECK(a[1] == colr);
    CHECK(a[2] == !colr);
  }
}

TEST_CASE("witness needs a satisfying assignment") {
  auto rg = build_wcol2(parse_cnf(kTwoClause));
  Assignment none(5, false);
  CHECK_THROWS_AS(witness_order(rg, none), std::invalid_argument);
}

TEST_CASE("role names") {
  CHECK(to_string(VertexRole{RoleKind::clause, 2, 3}) == "u(2,3)");
  CHECK(to_string(VertexRole{RoleKind::literal_neg, 4, 0}) == "v'(4)");
  CHECK(to_string(VertexRole{RoleKind::clique, 7, 0}) == "w(7)");
  CHECK(parse_reduction_kind("colr") == ReductionKind::colr);
  CHECK_THROWS_AS(parse_reduction_kind("col"), InputError);
  auto rg = build_colr(parse_cnf(kFourSquare), 3);
  CHECK(rg.roles.size() == static_cast<std::size_t>(rg.graph.num_vertices()));
  CHECK(rg.roles[rg.clique[0]] == VertexRole{RoleKind::clique, 1, 0});
}
