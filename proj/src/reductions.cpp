#include "gencol/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gencol/errors.hpp"

namespace gencol {

std::string_view to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::wcol2:
      return "wcol2";
    case ReductionKind::wcolr:
      return "wcolr";
    case ReductionKind::colr:
      return "colr";
  }
  return "?";
}

ReductionKind parse_reduction_kind(std::string_view name) {
  if (name == "wcol2") return ReductionKind::wcol2;
  if (name == "wcolr") return ReductionKind::wcolr;
  if (name == "colr") return ReductionKind::colr;
  throw InputError("unknown reduction kind '" + std::string(name) +
                   "' (want wcol2, wcolr or colr)");
}

std::string to_string(const VertexRole& role) {
  std::ostringstream out;
  switch (role.kind) {
    case RoleKind::clause:
      out << "u(" << role.index << ',' << role.sub << ')';
      break;
    case RoleKind::literal_pos:
      out << "v(" << role.index << ')';
      break;
    case RoleKind::literal_neg:
      out << "v'(" << role.index << ')';
      break;
    case RoleKind::filler:
      out << (role.sub == 0 ? "f(" : "f'(") << role.index << ')';
      break;
    case RoleKind::subdivision:
      out << "s(" << role.index << ',' << role.sub << ')';
      break;
    case RoleKind::clique:
      out << "w(" << role.index << ')';
      break;
  }
  return out.str();
}

int ReductionGraph::threshold() const {
  switch (kind) {
    case ReductionKind::wcol2:
      return 5;
    case ReductionKind::wcolr:
      return 2 * radius - 1;
    case ReductionKind::colr:
      return 6;
  }
  return 0;
}

Parameter ReductionGraph::parameter() const {
  return kind == ReductionKind::colr ? Parameter::col : Parameter::wcol;
}

namespace {

void check_widths(const CnfFormula& phi, int lo, int hi, std::string_view what) {
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    int w = static_cast<int>(phi.clauses[i].size());
    if (w < lo || w > hi) {
      std::ostringstream msg;
      msg << what << ": clause " << i + 1 << " has " << w << " literals";
      throw InputError(msg.str());
    }
  }
}

// Literal vertex pairs, appended after whatever the builder already holds.
void add_literal_pairs(ReductionGraph& rg, GraphBuilder& b) {
  for (int j = 1; j <= rg.formula.num_vars; ++j) {
    Vertex v = b.add_vertex();
    Vertex v_neg = b.add_vertex();
    rg.pos_literal.push_back(v);
    rg.neg_literal.push_back(v_neg);
    rg.roles.push_back({RoleKind::literal_pos, j});
    rg.roles.push_back({RoleKind::literal_neg, j});
    b.add_edge(v, v_neg);
  }
}

void add_path(ReductionGraph& rg, GraphBuilder& b, Vertex clause_end, Vertex literal_end,
              int ell) {
  auto inner = b.subdivide_edge(clause_end, literal_end, ell);
  const int id = static_cast<int>(rg.paths.size()) + 1;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    rg.roles.push_back({RoleKind::subdivision, id, static_cast<int>(i) + 1});
  }
  rg.paths.push_back({clause_end, literal_end, std::move(inner)});
}

}  // namespace

ReductionGraph build_wcol2(const CnfFormula& phi) {
  check_widths(phi, 2, 3, "wcol2 reduction");
  ReductionGraph rg;
  rg.kind = ReductionKind::wcol2;
  rg.radius = 2;
  rg.formula = phi;
  rg.strict_shape = is_2clause3sat(phi);
  GraphBuilder b;
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    const int ci = static_cast<int>(i) + 1;
    std::vector<Vertex> us;
    for (int l = 1; l <= 6; ++l) {
      us.push_back(b.add_vertex());
      rg.roles.push_back({RoleKind::clause, ci, l});
    }
    std::vector<Vertex> fs;
    if (phi.clauses[i].size() == 2) {
      for (int t = 0; t < 2; ++t) {
        Vertex f = b.add_vertex();
        rg.roles.push_back({RoleKind::filler, ci, t});
        for (Vertex u : us) b.add_edge(f, u);
        fs.push_back(f);
      }
    }
    rg.clause_vertices.push_back(std::move(us));
    rg.fillers.push_back(std::move(fs));
  }
  add_literal_pairs(rg, b);
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    for (Literal l : phi.clauses[i]) {
      for (Vertex u : rg.clause_vertices[i]) b.add_edge(rg.literal_vertex(l), u);
    }
  }
  rg.graph = b.build();
  return rg;
}

ReductionGraph build_wcolr(const CnfFormula& phi, int r) {
  if (r < 3) {
    throw InputError("wcolr reduction needs r >= 3; use the wcol2 reduction for r = 2");
  }
  check_widths(phi, r, r, "wcolr reduction");
  ReductionGraph rg;
  rg.kind = ReductionKind::wcolr;
  rg.radius = r;
  rg.formula = phi;
  rg.strict_shape = true;
  GraphBuilder b;
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    std::vector<Vertex> us;
    for (int l = 1; l <= 2 * r; ++l) {
      us.push_back(b.add_vertex());
      rg.roles.push_back({RoleKind::clause, static_cast<int>(i) + 1, l});
    }
    rg.clause_vertices.push_back(std::move(us));
    rg.fillers.emplace_back();
  }
  add_literal_pairs(rg, b);
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    for (Vertex u : rg.clause_vertices[i]) {
      for (Literal l : phi.clauses[i]) {
        add_path(rg, b, u, rg.literal_vertex(l), r - 2);
        add_path(rg, b, u, rg.literal_vertex(l), r - 2);
      }
    }
  }
  rg.graph = b.build();
  return rg;
}

ReductionGraph build_colr(const CnfFormula& phi, int r) {
  if (r < 2) throw InputError("colr reduction needs r >= 2");
  check_widths(phi, 2, 3, "colr reduction");
  ReductionGraph rg;
  rg.kind = ReductionKind::colr;
  rg.radius = r;
  rg.formula = phi;
  rg.strict_shape = is_2clause3sat(phi);
  GraphBuilder b;
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    rg.clause_vertices.push_back({b.add_vertex()});
    rg.roles.push_back({RoleKind::clause, static_cast<int>(i) + 1, 1});
    rg.fillers.emplace_back();
  }
  add_literal_pairs(rg, b);
  for (int t = 1; t <= 7; ++t) {
    rg.clique.push_back(b.add_vertex());
    rg.roles.push_back({RoleKind::clique, t});
  }
  auto w = [&](int t) { return rg.clique[t - 1]; };
  for (int s = 1; s <= 7; ++s) {
    for (int t = s + 1; t <= 7; ++t) b.add_edge(w(s), w(t));
  }
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    Vertex u = rg.clause_vertices[i].front();
    for (int t = 1; t <= 4; ++t) b.add_edge(u, w(t));
    if (phi.clauses[i].size() == 2) b.add_edge(u, w(5));
  }
  for (int j = 0; j < phi.num_vars; ++j) {
    for (int t = 2; t <= 4; ++t) b.add_edge(rg.pos_literal[j], w(t));
    for (int t = 5; t <= 7; ++t) b.add_edge(rg.neg_literal[j], w(t));
  }
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    for (Literal l : phi.clauses[i]) {
      add_path(rg, b, rg.clause_vertices[i].front(), rg.literal_vertex(l), r - 1);
    }
  }
  rg.graph = b.build();
  return rg;
}

ReductionGraph build_reduction(const CnfFormula& phi, ReductionKind kind, int r) {
  switch (kind) {
    case ReductionKind::wcol2:
      if (r != 2) throw InputError("wcol2 reduction is defined for r = 2 only");
      return build_wcol2(phi);
    case ReductionKind::wcolr:
      return build_wcolr(phi, r);
    case ReductionKind::colr:
      return build_colr(phi, r);
  }
  throw InputError("unknown reduction kind");
}

PrefixOrder witness_order(const ReductionGraph& rg, const Assignment& a) {
  if (!satisfies(rg.formula, a)) {
    throw std::invalid_argument("assignment does not satisfy the formula");
  }
  const int n = rg.graph.num_vertices();
  const int vars = rg.formula.num_vars;
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<Vertex> subdivision;
  for (const auto& p : rg.paths) subdivision.insert(subdivision.end(), p.inner.begin(), p.inner.end());
  std::sort(subdivision.begin(), subdivision.end());

  auto false_then_true = [&] {
    for (int j = 1; j <= vars; ++j) {
      Vertex v = rg.pos_literal[j - 1], v_neg = rg.neg_literal[j - 1];
      if (a[j]) {
        order.push_back(v_neg);
        order.push_back(v);
      } else {
        order.push_back(v);
        order.push_back(v_neg);
      }
    }
  };

  switch (rg.kind) {
    case ReductionKind::wcol2:
    case ReductionKind::wcolr:
      order = subdivision;
      for (std::size_t i = 0; i < rg.clause_vertices.size(); ++i) {
        order.insert(order.end(), rg.clause_vertices[i].begin(), rg.clause_vertices[i].end());
        order.insert(order.end(), rg.fillers[i].begin(), rg.fillers[i].end());
      }
      false_then_true();
      break;
    case ReductionKind::colr:
      order = subdivision;
      for (int j = 1; j <= vars; ++j) order.push_back(a[j] ? rg.pos_literal[j - 1] : rg.neg_literal[j - 1]);
      for (const auto& us : rg.clause_vertices) order.push_back(us.front());
      for (int j = 1; j <= vars; ++j) order.push_back(a[j] ? rg.neg_literal[j - 1] : rg.pos_literal[j - 1]);
      order.insert(order.end(), rg.clique.begin(), rg.clique.end());
      break;
  }
  return PrefixOrder(n, order);
}

Assignment extract_assignment(const ReductionGraph& rg, const PrefixOrder& sigma) {
  const int vars = rg.formula.num_vars;
  Assignment a(vars + 1, false);
  for (int j = 1; j <= vars; ++j) {
    bool pos_first = sigma.precedes(rg.pos_literal[j - 1], rg.neg_literal[j - 1]);
    a[j] = rg.kind == ReductionKind::colr ? pos_first : !pos_first;
  }
  return a;
}

AuditReport audit_structure(const ReductionGraph& rg) {
  AuditReport report;
  const CnfFormula& phi = rg.formula;
  const std::size_t C = phi.clauses.size();
  const std::size_t N = static_cast<std::size_t>(phi.num_vars);
  const std::size_t r = static_cast<std::size_t>(rg.radius);
  std::size_t occurrences = 0, two_wide = 0;
  for (const auto& c : phi.clauses) {
    occurrences += c.size();
    two_wide += c.size() == 2;
  }

  switch (rg.kind) {
    case ReductionKind::wcol2:
      report.expected_vertices = 6 * C + 2 * two_wide + 2 * N;
      report.expected_edges = 6 * occurrences + 12 * two_wide + N;
      break;
    case ReductionKind::wcolr:
      report.expected_vertices = 2 * r * C + 2 * N + occurrences * 2 * r * 2 * (r - 2);
      report.expected_edges = N + occurrences * 2 * r * 2 * (r - 1);
      break;
    case ReductionKind::colr:
      report.expected_vertices = C + 2 * N + 7 + occurrences * (r - 1);
      report.expected_edges = 21 + N + occurrences * r + 4 * C + two_wide + 6 * N;
      break;
  }
  report.actual_vertices = static_cast<std::size_t>(rg.graph.num_vertices());
  report.actual_edges = rg.graph.num_edges();
  auto issue = [&](std::string text) { report.issues.push_back(std::move(text)); };
  if (report.actual_vertices != report.expected_vertices) {
    issue("vertex count " + std::to_string(report.actual_vertices) + ", expected " +
          std::to_string(report.expected_vertices));
  }
  if (report.actual_edges != report.expected_edges) {
    issue("edge count " + std::to_string(report.actual_edges) + ", expected " +
          std::to_string(report.expected_edges));
  }
  if (rg.roles.size() != report.actual_vertices) {
    issue("role table has " + std::to_string(rg.roles.size()) + " entries");
    return report;
  }

  // Locate every vertex through its role only.
  std::map<std::pair<int, int>, Vertex> clause_at, filler_at, sub_at;
  std::map<int, Vertex> pos_at, neg_at, clique_at;
  std::map<int, int> path_len;
  for (Vertex v = 0; v < rg.graph.num_vertices(); ++v) {
    const VertexRole& role = rg.roles[v];
    bool fresh = true;
    switch (role.kind) {
      case RoleKind::clause:
        fresh = clause_at.emplace(std::pair{role.index, role.sub}, v).second;
        break;
      case RoleKind::literal_pos:
        fresh = pos_at.emplace(role.index, v).second;
        break;
      case RoleKind::literal_neg:
        fresh = neg_at.emplace(role.index, v).second;
        break;
      case RoleKind::filler:
        fresh = filler_at.emplace(std::pair{role.index, role.sub}, v).second;
        break;
      case RoleKind::subdivision:
        fresh = sub_at.emplace(std::pair{role.index, role.sub}, v).second;
        path_len[role.index] = std::max(path_len[role.index], role.sub);
        break;
      case RoleKind::clique:
        fresh = clique_at.emplace(role.index, v).second;
        break;
    }
    if (!fresh) issue("duplicate role " + to_string(role));
  }
  auto find = [&](const auto& table, const auto& key, const std::string& what) -> Vertex {
    auto it = table.find(key);
    if (it == table.end()) {
      issue("missing " + what);
      return -1;
    }
    return it->second;
  };
  auto literal = [&](Literal l) {
    return l > 0 ? find(pos_at, l, "v(" + std::to_string(l) + ")")
                 : find(neg_at, -l, "v'(" + std::to_string(-l) + ")");
  };

  std::set<Edge> expected;
  auto expect = [&](Vertex a, Vertex b) {
    if (a < 0 || b < 0) return;
    expected.insert(a < b ? Edge{a, b} : Edge{b, a});
  };
  int path_id = 0;
  auto expect_path = [&](Vertex from, Vertex to, int ell) {
    ++path_id;
    Vertex prev = from;
    for (int s = 1; s <= ell; ++s) {
      Vertex x = find(sub_at, std::pair{path_id, s}, "subdivision vertex");
      expect(prev, x);
      prev = x;
    }
    expect(prev, to);
    if (path_len[path_id] != ell) issue("path " + std::to_string(path_id) + " has wrong length");
  };

  for (int j = 1; j <= phi.num_vars; ++j) expect(literal(j), literal(-j));
  const int copies = rg.kind == ReductionKind::wcol2 ? 6
                     : rg.kind == ReductionKind::wcolr ? 2 * rg.radius
                                                       : 1;
  for (std::size_t i = 0; i < C; ++i) {
    const int ci = static_cast<int>(i) + 1;
    const auto& clause = phi.clauses[i];
    auto u = [&](int l) {
      return find(clause_at, std::pair{ci, l}, "u(" + std::to_string(ci) + "," + std::to_string(l) + ")");
    };
    switch (rg.kind) {
      case ReductionKind::wcol2:
        for (int l = 1; l <= copies; ++l) {
          for (Literal x : clause) expect(u(l), literal(x));
          if (clause.size() == 2) {
            for (int t = 0; t < 2; ++t) expect(u(l), find(filler_at, std::pair{ci, t}, "filler"));
          }
        }
        break;
      case ReductionKind::wcolr:
        for (int l = 1; l <= copies; ++l) {
          for (Literal x : clause) {
            expect_path(u(l), literal(x), rg.radius - 2);
            expect_path(u(l), literal(x), rg.radius - 2);
          }
        }
        break;
      case ReductionKind::colr:
        for (int t = 1; t <= (clause.size() == 2 ? 5 : 4); ++t) {
          expect(u(1), find(clique_at, t, "w(" + std::to_string(t) + ")"));
        }
        break;
    }
  }
  if (rg.kind == ReductionKind::colr) {
    auto w = [&](int t) { return find(clique_at, t, "w(" + std::to_string(t) + ")"); };
    for (int s = 1; s <= 7; ++s) {
      for (int t = s + 1; t <= 7; ++t) expect(w(s), w(t));
    }
    for (int j = 1; j <= phi.num_vars; ++j) {
      for (int t = 2; t <= 4; ++t) expect(literal(j), w(t));
      for (int t = 5; t <= 7; ++t) expect(literal(-j), w(t));
    }
    for (std::size_t i = 0; i < C; ++i) {
      const int ci = static_cast<int>(i) + 1;
      for (Literal x : phi.clauses[i]) {
        expect_path(find(clause_at, std::pair{ci, 1}, "clause vertex"), literal(x), rg.radius - 1);
      }
    }
  }
  if (static_cast<std::size_t>(path_id) != path_len.size()) {
    issue("unexpected number of subdivided paths");
  }

  auto actual = rg.graph.edges();
  std::set<Edge> present(actual.begin(), actual.end());
  for (const Edge& e : expected) {
    if (!present.count(e)) {
      issue("missing edge " + to_string(rg.roles[e.u]) + " - " + to_string(rg.roles[e.v]));
    }
  }
  for (const Edge& e : present) {
    if (!expected.count(e)) {
      issue("unexpected edge " + to_string(rg.roles[e.u]) + " - " + to_string(rg.roles[e.v]));
    }
  }
  return report;
}

}  // namespace gencol
