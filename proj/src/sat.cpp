#include "gencol/sat.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <sstream>
#include <string>

#include "gencol/errors.hpp"

namespace gencol {

CnfFormula CnfFormula::from_clauses(int num_vars, std::vector<std::vector<Literal>> clauses) {
  if (num_vars < 0) throw InputError("negative variable count");
  CnfFormula phi;
  phi.num_vars = num_vars;
  for (auto& clause : clauses) {
    std::vector<Literal> kept;
    bool tautology = false;
    for (Literal l : clause) {
      if (l == 0 || var_of(l) > num_vars) {
        throw InputError("literal " + std::to_string(l) + " out of range");
      }
      if (std::find(kept.begin(), kept.end(), -l) != kept.end()) tautology = true;
      if (std::find(kept.begin(), kept.end(), l) == kept.end()) kept.push_back(l);
    }
    if (!tautology) phi.clauses.push_back(std::move(kept));
  }
  return phi;
}

bool CnfFormula::has_empty_clause() const {
  return std::any_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.empty(); });
}

int CnfFormula::max_width() const {
  std::size_t w = 0;
  for (const auto& c : clauses) w = std::max(w, c.size());
  return static_cast<int>(w);
}

int CnfFormula::min_width() const {
  if (clauses.empty()) return 0;
  std::size_t w = clauses.front().size();
  for (const auto& c : clauses) w = std::min(w, c.size());
  return static_cast<int>(w);
}

std::vector<int> CnfFormula::occurrence_table() const {
  std::vector<int> table(2 * (num_vars + 1), 0);
  for (const auto& c : clauses) {
    for (Literal l : c) ++table[2 * var_of(l) + (l < 0)];
  }
  return table;
}

int CnfFormula::occurrences(Literal l) const {
  int count = 0;
  for (const auto& c : clauses) count += static_cast<int>(std::count(c.begin(), c.end(), l));
  return count;
}

bool satisfies(const CnfFormula& phi, const Assignment& a) {
  if (static_cast<int>(a.size()) < phi.num_vars + 1) return false;
  return std::all_of(phi.clauses.begin(), phi.clauses.end(), [&](const auto& c) {
    return std::any_of(c.begin(), c.end(), [&](Literal l) { return a[var_of(l)] == (l > 0); });
  });
}

CnfFormula parse_cnf(std::istream& in) {
  std::optional<int> num_vars;
  std::vector<std::vector<Literal>> clauses;
  std::vector<Literal> current;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "%") break;
    if (first == "p") {
      std::string kind;
      long long n = -1, m = -1;
      if (num_vars || !(ls >> kind >> n >> m) || kind != "cnf" || n < 0 || m < 0) {
        throw InputError("line " + std::to_string(line_no) + ": malformed cnf header");
      }
      num_vars = static_cast<int>(n);
      continue;
    }
    if (!num_vars) throw InputError("line " + std::to_string(line_no) + ": clause before header");
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      Literal l = 0;
      try {
        std::size_t used = 0;
        l = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw InputError("line " + std::to_string(line_no) + ": bad literal '" + tok + "'");
      }
      if (l == 0) {
        clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (var_of(l) > *num_vars) {
          throw InputError("line " + std::to_string(line_no) + ": variable out of range");
        }
        current.push_back(l);
      }
    }
  }
  if (!num_vars) throw InputError("missing cnf header");
  if (!current.empty()) clauses.push_back(std::move(current));
  return CnfFormula::from_clauses(*num_vars, std::move(clauses));
}

CnfFormula parse_cnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_cnf(in);
}

void write_cnf(std::ostream& out, const CnfFormula& phi) {
  out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
  for (const auto& c : phi.clauses) {
    for (Literal l : c) out << l << ' ';
    out << "0\n";
  }
}

std::string to_dimacs(const CnfFormula& phi) {
  std::ostringstream out;
  write_cnf(out, phi);
  return out.str();
}

bool is_2clause3sat(const CnfFormula& phi) {
  for (const auto& c : phi.clauses) {
    if (c.size() < 2 || c.size() > 3) return false;
  }
  auto table = phi.occurrence_table();
  for (int j = 1; j <= phi.num_vars; ++j) {
    if (table[2 * j] != 2 || table[2 * j + 1] != 2) return false;
  }
  return true;
}

bool is_exact_rsat(const CnfFormula& phi, int r) {
  return std::all_of(phi.clauses.begin(), phi.clauses.end(),
                     [r](const auto& c) { return static_cast<int>(c.size()) == r; });
}

NormalizedFormula normalize_to_2clause3sat(const CnfFormula& phi) {
  if (phi.max_width() > 3) throw InputError("normalization needs clauses of width at most 3");
  {
    auto table = phi.occurrence_table();
    for (int j = 1; j <= phi.num_vars; ++j) {
      if (table[2 * j] + table[2 * j + 1] > 3) {
        throw InputError("variable " + std::to_string(j) + " occurs more than 3 times");
      }
    }
  }

  NormalizedFormula out;
  std::vector<std::vector<Literal>> active = phi.clauses;
  // Fix unit and single-polarity variables until nothing changes; the
  // gadget only repairs literals that still appear in both polarities.
  auto assign = [&](Literal l) {
    std::vector<std::vector<Literal>> next;
    for (auto& c : active) {
      if (std::find(c.begin(), c.end(), l) != c.end()) continue;
      c.erase(std::remove(c.begin(), c.end(), -l), c.end());
      next.push_back(std::move(c));
    }
    active = std::move(next);
  };
  while (true) {
    if (std::any_of(active.begin(), active.end(), [](const auto& c) { return c.empty(); })) {
      out.trivially_unsat = true;
      out.formula = CnfFormula{0, {{}}};
      return out;
    }
    auto unit = std::find_if(active.begin(), active.end(),
                             [](const auto& c) { return c.size() == 1; });
    if (unit != active.end()) {
      assign(unit->front());
      continue;
    }
    std::vector<int> pos(phi.num_vars + 1, 0), neg(phi.num_vars + 1, 0);
    for (const auto& c : active) {
      for (Literal l : c) ++(l > 0 ? pos : neg)[var_of(l)];
    }
    Literal pure = 0;
    for (int j = 1; j <= phi.num_vars && pure == 0; ++j) {
      if (pos[j] && !neg[j]) pure = j;
      if (neg[j] && !pos[j]) pure = -j;
    }
    if (pure == 0) break;
    assign(pure);
  }

  std::vector<char> used(phi.num_vars + 1, 0);
  for (const auto& c : active) {
    for (Literal l : c) used[var_of(l)] = 1;
  }
  int next = 0;
  for (int j = 1; j <= phi.num_vars; ++j) {
    if (used[j]) out.var_map[j] = ++next;
  }
  CnfFormula& f = out.formula;
  f.num_vars = next;
  for (const auto& c : active) {
    std::vector<Literal> renamed;
    for (Literal l : c) renamed.push_back(l > 0 ? out.var_map[l] : -out.var_map[-l]);
    f.clauses.push_back(std::move(renamed));
  }
  auto table = f.occurrence_table();
  const int base_vars = f.num_vars;
  for (int j = 1; j <= base_vars; ++j) {
    for (Literal x : {j, -j}) {
      if (table[2 * j + (x < 0)] != 1) continue;
      int y1 = ++f.num_vars, y2 = ++f.num_vars, y3 = ++f.num_vars, y4 = ++f.num_vars,
          y5 = ++f.num_vars;
      f.clauses.push_back({x, y1, -y2});
      f.clauses.push_back({y1, y3, -y4});
      f.clauses.push_back({-y1, y3, -y4});
      f.clauses.push_back({-y1, y4, -y5});
      f.clauses.push_back({y2, y4, -y5});
      f.clauses.push_back({y2, -y3, y5});
      f.clauses.push_back({-y2, -y3, y5});
    }
  }
  return out;
}

CnfFormula repair_exact_rsat(const CnfFormula& phi, int r) {
  if (r < 1) throw InputError("clause width must be at least 1");
  if (phi.max_width() > r) {
    throw InputError("clause wider than " + std::to_string(r));
  }
  CnfFormula out;
  out.num_vars = phi.num_vars;
  for (const auto& c : phi.clauses) {
    const int missing = r - static_cast<int>(c.size());
    if (missing == 0) {
      out.clauses.push_back(c);
      continue;
    }
    std::vector<int> fresh;
    for (int i = 0; i < missing; ++i) fresh.push_back(++out.num_vars);
    for (unsigned mask = 0; mask < (1u << missing); ++mask) {
      std::vector<Literal> padded = c;
      for (int i = 0; i < missing; ++i) padded.push_back((mask >> i) & 1 ? -fresh[i] : fresh[i]);
      out.clauses.push_back(std::move(padded));
    }
  }
  return out;
}

SatResult brute_force_sat(const CnfFormula& phi, int max_vars) {
  if (phi.num_vars > max_vars) {
    throw SizeLimitError("formula has " + std::to_string(phi.num_vars) +
                         " variables, cap is " + std::to_string(max_vars));
  }
  SatResult result;
  if (phi.has_empty_clause()) return result;
  const int n = phi.num_vars;
  // falsified[c] counts literals of clause c made false so far
  std::vector<int> falsified(phi.clauses.size(), 0);
  std::vector<std::vector<int>> by_literal(2 * (n + 1));
  for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
    for (Literal l : phi.clauses[c]) by_literal[2 * var_of(l) + (l < 0)].push_back(static_cast<int>(c));
  }
  Assignment a(n + 1, false);

  auto set = [&](int j, bool value, int delta) {
    // Literals of x_j that become false under `value`.
    for (int c : by_literal[2 * j + (value ? 1 : 0)]) falsified[c] += delta;
  };
  auto conflict = [&](int j, bool value) {
    for (int c : by_literal[2 * j + (value ? 1 : 0)]) {
      if (falsified[c] == static_cast<int>(phi.clauses[c].size())) return true;
    }
    return false;
  };
  auto search = [&](auto&& self, int j) -> bool {
    if (j > n) return true;
    for (bool value : {false, true}) {
      a[j] = value;
      set(j, value, +1);
      bool ok = !conflict(j, value) && self(self, j + 1);
      if (ok) return true;
      set(j, value, -1);
    }
    return false;
  };
  if (search(search, 1)) {
    if (!satisfies(phi, a)) throw std::logic_error("brute force produced a non-model");
    result.satisfiable = true;
    result.assignment = std::move(a);
  }
  return result;
}

Assignment parse_assignment(std::istream& in, int num_vars) {
  Assignment a(num_vars + 1, false);
  std::string tok;
  while (in >> tok) {
    if (tok == "v" || tok == "s" || tok == "SAT" || tok == "SATISFIABLE") continue;
    Literal l = 0;
    try {
      std::size_t used = 0;
      l = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("bad literal '" + tok + "' in assignment");
    }
    if (l == 0) continue;
    if (var_of(l) > num_vars) throw InputError("assignment literal out of range");
    a[var_of(l)] = l > 0;
  }
  return a;
}

}  // namespace gencol
