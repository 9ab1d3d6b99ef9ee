#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gencol/graph.hpp"
#include "gencol/reachability.hpp"
#include "gencol/sat.hpp"
#include "gencol/search.hpp"

namespace gencol {

enum class ReductionKind { wcol2, wcolr, colr };

std::string_view to_string(ReductionKind kind);
ReductionKind parse_reduction_kind(std::string_view name);  // throws InputError

enum class RoleKind { clause, literal_pos, literal_neg, filler, subdivision, clique };

// Indices are 1-based like the formula. clause: (clause i, copy l);
// literal_pos/neg: (variable j, 0); filler: (clause i, 0 for f / 1 for f');
// subdivision: (path id, position from the clause end); clique: (t, 0).
struct VertexRole {
  RoleKind kind;
  int index;
  int sub = 0;

  bool operator==(const VertexRole&) const = default;
};

std::string to_string(const VertexRole& role);

// A clause-literal connection replaced by a path with `inner` vertices
// listed from the clause end.
struct SubdividedPath {
  Vertex clause_end;
  Vertex literal_end;
  std::vector<Vertex> inner;
};

struct ReductionGraph {
  ReductionKind kind = ReductionKind::wcol2;
  int radius = 2;
  CnfFormula formula;
  Graph graph;
  std::vector<VertexRole> roles;
  // Formula satisfies the occurrence constraints the hardness proof needs,
  // not just the clause widths.
  bool strict_shape = false;

  std::vector<std::vector<Vertex>> clause_vertices;  // per clause
  std::vector<std::vector<Vertex>> fillers;          // per clause, empty or {f, f'}
  std::vector<Vertex> pos_literal;                   // v_j at [j - 1]
  std::vector<Vertex> neg_literal;                   // v'_j at [j - 1]
  std::vector<Vertex> clique;                        // w_1..w_7
  std::vector<SubdividedPath> paths;

  Vertex literal_vertex(Literal l) const {
    return l > 0 ? pos_literal[l - 1] : neg_literal[-l - 1];
  }
  // 5, 2r - 1 or 6.
  int threshold() const;
  // wcol for the two weak kinds, col otherwise.
  Parameter parameter() const;
};

// Clauses of width 2 or 3.
ReductionGraph build_wcol2(const CnfFormula& phi);
// r >= 3, every clause of width exactly r.
ReductionGraph build_wcolr(const CnfFormula& phi, int r);
// r >= 2, clauses of width 2 or 3.
ReductionGraph build_colr(const CnfFormula& phi, int r);
ReductionGraph build_reduction(const CnfFormula& phi, ReductionKind kind, int r);

// Order certifying the threshold for a satisfying assignment. Throws
// std::invalid_argument when `a` does not satisfy the formula.
PrefixOrder witness_order(const ReductionGraph& rg, const Assignment& a);

// Reads x_j from the relative order of v_j and v'_j. For the weak kinds v_j
// first means false; for colr it means true.
Assignment extract_assignment(const ReductionGraph& rg, const PrefixOrder& sigma);

struct AuditReport {
  std::size_t expected_vertices = 0;
  std::size_t expected_edges = 0;
  std::size_t actual_vertices = 0;
  std::size_t actual_edges = 0;
  std::vector<std::string> issues;

  bool clean() const { return issues.empty(); }
};

// Recounts the construction from the formula and the role table alone and
// compares it with the stored graph.
AuditReport audit_structure(const ReductionGraph& rg);

}  // namespace gencol
