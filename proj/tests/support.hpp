#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cnash/cnf.hpp"
#include "cnash/game.hpp"
#include "cnash/json_io.hpp"
#include "cnash/rational.hpp"

#ifndef CNASH_TEST_DATA
#define CNASH_TEST_DATA "tests/data"
#endif

namespace cnash::test {

inline Rational Q(const std::string& s) { return parse_rational(s); }

inline Vector V(std::initializer_list<const char*> xs) {
  Vector v;
  for (const char* x : xs) v.push_back(Q(x));
  return v;
}

inline MixedStrategy S(std::initializer_list<const char*> xs) { return MixedStrategy(V(xs)); }

inline std::string data_path(const std::string& name) { return std::string(CNASH_TEST_DATA) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline BimatrixGame load_game(const std::string& name) {
  return io::game_from_json(nlohmann::json::parse(slurp(data_path(name))));
}

inline CnfFormula load_cnf(const std::string& name) { return parse_dimacs(slurp(data_path(name))); }

inline BimatrixGame game_of(const std::vector<Vector>& r, const std::vector<Vector>& c) {
  return BimatrixGame::from_matrices(Matrix::from_rows(r), Matrix::from_rows(c));
}

/// Random rationals in [0,1] with assorted denominators; large denominators
/// keep random games away from degenerate ties.
class RandomGames {
 public:
  explicit RandomGames(unsigned long seed) : rng_(seed) {}

  Rational unit(long max_den = 997) {
    std::uniform_int_distribution<long> den(1, max_den);
    const long q = den(rng_);
    std::uniform_int_distribution<long> num(0, q);
    Rational r(num(rng_), q);
    r.canonicalize();
    return r;
  }

  BimatrixGame game(std::size_t n, long max_den = 997) {
    Matrix r(n, n), c(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        r(i, j) = unit(max_den);
        c(i, j) = unit(max_den);
      }
    }
    return BimatrixGame::from_matrices(std::move(r), std::move(c));
  }

  MixedStrategy simplex_point(std::size_t n, long max_den = 60) {
    Vector w(n);
    Rational total = 0;
    for (auto& x : w) {
      x = unit(max_den);
      total += x;
    }
    if (total == 0) return MixedStrategy::pure(n, index(n));
    for (auto& x : w) x /= total;
    return MixedStrategy(std::move(w));
  }

  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// A fixed corpus of 3CNF formulas over at most 4 variables.
inline std::vector<CnfFormula> formula_corpus() {
  std::vector<std::vector<std::vector<int>>> raw = {
      {{1, 2, 3}},
      {{-1, -2, -3}},
      {{1, 2, 3}, {-1, -2, -3}},
      {{1, -2, 3}, {-1, 2, -3}},
      {{1, 2, -3}, {1, -2, 3}, {-1, 2, 3}},
      {{1, 2, 3}, {1, 2, -3}, {1, -2, 3}, {1, -2, -3}},
      {{-1, 2, 3}, {-1, 2, -3}, {-1, -2, 3}},
      {{1, 2, 3}, {-1, -2, 3}, {1, -2, -3}, {-1, 2, -3}},
      {{1, 2, 4}},
      {{1, 2, 3}, {2, 3, 4}},
      {{-1, -2, 4}, {1, 3, -4}},
      {{1, -2, 3}, {-1, 3, 4}, {2, -3, -4}},
      {{1, 2, 3}, {-1, -2, -3}, {1, -2, 4}, {-1, 2, -4}},
      {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}},
      {{-1, -2, -3}, {-1, -2, -4}, {-1, -3, -4}, {-2, -3, -4}},
      {{1, 2, 3}, {-1, 2, 4}, {-2, -3, 4}, {1, -3, -4}, {-1, -2, -4}},
      {{1, -2, -3}, {-1, 2, -3}, {-1, -2, 3}, {1, 2, 3}},
      {{2, 3, 4}, {-2, -3, -4}, {1, 2, -4}},
      {{1, 2, 3}, {-1, 2, 3}, {1, -2, 3}, {1, 2, -3}, {-1, -2, -3}},
      {{-1, 2, -4}, {1, -3, 4}, {-2, 3, 4}, {-1, -3, -4}, {1, 2, 3}, {-2, -3, 4}},
      {{1, 3, 4}, {-1, -3, 4}, {2, -3, -4}, {-2, 3, -4}, {1, 2, -3}},
      {{1, 2, 3}, {1, 2, -3}, {1, -2, 3}, {1, -2, -3}, {-1, 2, 3}, {-1, 2, -3}, {-1, -2, 3}},
  };
  std::vector<CnfFormula> out;
  for (auto& clauses : raw) {
    CnfFormula f;
    for (auto& c : clauses) {
      for (int lit : c) f.num_vars = std::max<std::size_t>(f.num_vars, static_cast<std::size_t>(std::abs(lit)));
    }
    f.clauses = clauses;
    out.push_back(std::move(f));
  }
  return out;
}

inline CnfFormula unsat_eight() {
  CnfFormula f;
  f.num_vars = 3;
  for (int a : {1, -1}) {
    for (int b : {2, -2}) {
      for (int c : {3, -3}) f.clauses.push_back({a, b, c});
    }
  }
  return f;
}

}  // namespace cnash::test
