#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gencol {

using Literal = int;  // +j is x_j, -j its negation

inline int var_of(Literal l) { return l < 0 ? -l : l; }

/// Clauses over variables 1..num_vars. No clause holds a variable twice.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<Literal>> clauses;

  // Drops tautologies and repeated literals, keeps empty clauses. Throws
  // InputError on literal 0 or variables beyond num_vars.
  static CnfFormula from_clauses(int num_vars, std::vector<std::vector<Literal>> clauses);

  bool has_empty_clause() const;
  int max_width() const;
  int min_width() const;
  int occurrences(Literal l) const;
  // occurrences indexed by literal: [2j] for +j, [2j+1] for -j
  std::vector<int> occurrence_table() const;

  bool operator==(const CnfFormula&) const = default;
};

// Entry 0 is unused; entry j is the value of x_j.
using Assignment = std::vector<bool>;

bool satisfies(const CnfFormula& phi, const Assignment& a);

CnfFormula parse_cnf(std::istream& in);
CnfFormula parse_cnf(std::string_view text);
void write_cnf(std::ostream& out, const CnfFormula& phi);
std::string to_dimacs(const CnfFormula& phi);

// Every clause has 2 or 3 literals and every literal occurs exactly twice.
bool is_2clause3sat(const CnfFormula& phi);
// Every clause has exactly r distinct variables.
bool is_exact_rsat(const CnfFormula& phi, int r);

struct NormalizedFormula {
  CnfFormula formula;
  std::map<int, int> var_map;  // original variable -> new variable
  bool trivially_unsat = false;
};

// Input: clauses of width <= 3, each variable in at most 3 clauses. Unit and
// pure variables are fixed first; each literal still occurring once then
// receives the 7-clause gadget on 5 fresh variables.
NormalizedFormula normalize_to_2clause3sat(const CnfFormula& phi);

// Pads every clause narrower than r with fresh variables in all sign
// combinations. Throws InputError on a clause wider than r.
CnfFormula repair_exact_rsat(const CnfFormula& phi, int r);

struct SatResult {
  bool satisfiable = false;
  Assignment assignment;  // meaningful iff satisfiable
};

inline constexpr int kDefaultSatVarCap = 24;

// Exhaustive search with early clause falsification. Throws SizeLimitError
// above max_vars variables.
SatResult brute_force_sat(const CnfFormula& phi, int max_vars = kDefaultSatVarCap);

// Whitespace separated literals (a leading 'v' and the terminating 0 are
// ignored). Unmentioned variables default to false.
Assignment parse_assignment(std::istream& in, int num_vars);

}  // namespace gencol
