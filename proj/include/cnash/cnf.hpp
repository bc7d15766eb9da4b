#pragma once

#include <cstddef>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cnash/error.hpp"

namespace cnash {

using Clause = std::vector<int>;

/// CNF over variables 1..num_vars. Literal +v is x_v, -v its negation.
struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;

  std::size_t num_clauses() const { return clauses.size(); }

  bool satisfied_by(const std::vector<bool>& assignment) const {
    for (const Clause& c : clauses) {
      bool ok = false;
      for (int lit : c) {
        const bool value = assignment[static_cast<std::size_t>(std::abs(lit)) - 1];
        if ((lit > 0) == value) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  bool is_3cnf() const {
    for (const Clause& c : clauses) {
      if (c.size() != 3) return false;
    }
    return true;
  }
};

inline void validate(const CnfFormula& f) {
  if (f.num_vars == 0) throw Error(ErrorCode::kInvalidArgument, "formula needs at least one variable");
  for (std::size_t k = 0; k < f.clauses.size(); ++k) {
    const Clause& c = f.clauses[k];
    if (c.empty()) throw Error(ErrorCode::kInvalidArgument, "clause " + std::to_string(k + 1) + " is empty");
    for (int lit : c) {
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > f.num_vars) {
        throw Error(ErrorCode::kInvalidArgument, "literal " + std::to_string(lit) + " out of range");
      }
      for (int other : c) {
        if (other == -lit) {
          throw Error(ErrorCode::kInvalidArgument,
                      "clause " + std::to_string(k + 1) + " contains both " + std::to_string(std::abs(lit)) +
                          " and its negation");
        }
      }
    }
  }
}

/// Reads DIMACS CNF. Lines starting with 'c' are comments; a '%' line ends
/// the input (some benchmark files carry one).
inline CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::size_t> declared_clauses;
  CnfFormula f;
  Clause current;
  bool header = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == 'c') continue;
    if (first == "%") break;
    if (first == "p") {
      if (header) throw Error(ErrorCode::kParse, "duplicate header");
      std::string fmt;
      long long nv = -1, nc = -1;
      std::string extra;
      if (!(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 1 || nc < 0 || (ls >> extra)) {
        throw Error(ErrorCode::kParse, "malformed header '" + line + "'");
      }
      f.num_vars = static_cast<std::size_t>(nv);
      declared_clauses = static_cast<std::size_t>(nc);
      header = true;
      continue;
    }
    if (!header) throw Error(ErrorCode::kParse, "clause before 'p cnf' header");
    std::istringstream body(line);
    std::string tok;
    while (body >> tok) {
      char* end = nullptr;
      const long v = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') throw Error(ErrorCode::kParse, "bad literal '" + tok + "'");
      if (v == 0) {
        if (current.empty()) throw Error(ErrorCode::kParse, "empty clause");
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::labs(v)) > f.num_vars) {
        throw Error(ErrorCode::kParse, "literal " + tok + " out of range for " + std::to_string(f.num_vars) +
                                           " variables");
      }
      current.push_back(static_cast<int>(v));
    }
  }
  if (!header) throw Error(ErrorCode::kParse, "missing 'p cnf' header");
  if (!current.empty()) throw Error(ErrorCode::kParse, "last clause is missing its terminating 0");
  if (f.clauses.size() != *declared_clauses) {
    throw Error(ErrorCode::kParse, "header declares " + std::to_string(*declared_clauses) + " clauses, found " +
                                       std::to_string(f.clauses.size()));
  }
  try {
    validate(f);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  return f;
}

inline std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

/// Assignment number `bits`: variable v is true iff bit v-1 is set.
inline std::vector<bool> assignment_from_bits(std::size_t n, unsigned long bits) {
  std::vector<bool> a(n);
  for (std::size_t v = 0; v < n; ++v) a[v] = (bits >> v) & 1UL;
  return a;
}

/// Brute force, for the small formulas the reductions are run on.
inline std::vector<std::vector<bool>> satisfying_assignments(const CnfFormula& f) {
  if (f.num_vars > 20) throw Error(ErrorCode::kPrecondition, "brute force limited to 20 variables");
  std::vector<std::vector<bool>> out;
  for (unsigned long bits = 0; bits < (1UL << f.num_vars); ++bits) {
    auto a = assignment_from_bits(f.num_vars, bits);
    if (f.satisfied_by(a)) out.push_back(std::move(a));
  }
  return out;
}

inline bool is_satisfiable(const CnfFormula& f) { return !satisfying_assignments(f).empty(); }

}  // namespace cnash
