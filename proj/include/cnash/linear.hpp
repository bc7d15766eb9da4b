#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cnash/game.hpp"
#include "cnash/rational.hpp"

namespace cnash::linear {

enum class SystemKind { kUnique, kUnderdetermined, kInconsistent };

struct SystemSolution {
  SystemKind kind = SystemKind::kInconsistent;
  /// A basic solution (free variables fixed at zero); empty when inconsistent.
  Vector values;
  std::size_t rank = 0;
};

/// Solves `a * z = b` exactly by Gauss-Jordan elimination.
inline SystemSolution solve_system(Matrix a, Vector b) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(p, k), a(r, k));
      std::swap(b[p], b[r]);
    }
    const Rational inv = 1 / a(r, c);
    for (std::size_t k = c; k < cols; ++k) a(r, k) *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t k = c; k < cols; ++k) a(i, k) -= f * a(r, k);
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  SystemSolution out;
  out.rank = r;
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return out;
  }
  out.values.assign(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) out.values[pivot_col[i]] = b[i];
  out.kind = r == cols ? SystemKind::kUnique : SystemKind::kUnderdetermined;
  return out;
}

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective = 0;
  Vector values;
};

/// maximize c.z  subject to  eq_a z = eq_b,  ub_a z <= ub_b,  z >= 0.
///
/// Dense two-phase tableau simplex with Bland's rule, so it terminates on
/// degenerate problems. Intended for the small systems that arise from one
/// support pair; no attempt is made at sparsity.
inline LpResult maximize(const Vector& c, const Matrix& eq_a, const Vector& eq_b, const Matrix& ub_a,
                         const Vector& ub_b) {
  const std::size_t nvars = c.size();
  const std::size_t n_eq = eq_a.rows();
  const std::size_t n_ub = ub_a.rows();
  const std::size_t m = n_eq + n_ub;
  // Columns: [structural | slacks | artificials | rhs]
  const std::size_t slack0 = nvars;
  const std::size_t art0 = nvars + n_ub;
  const std::size_t rhs = art0 + m;
  Matrix t(m + 1, rhs + 1);
  std::vector<std::size_t> basis(m);

  for (std::size_t i = 0; i < m; ++i) {
    const bool is_eq = i < n_eq;
    for (std::size_t j = 0; j < nvars; ++j) t(i, j) = is_eq ? eq_a(i, j) : ub_a(i - n_eq, j);
    if (!is_eq) t(i, slack0 + (i - n_eq)) = 1;
    t(i, rhs) = is_eq ? eq_b[i] : ub_b[i - n_eq];
    if (t(i, rhs) < 0) {
      for (std::size_t j = 0; j <= rhs; ++j) t(i, j) = -t(i, j);
    }
    t(i, art0 + i) = 1;
    basis[i] = art0 + i;
  }

  auto pivot = [&](std::size_t pr, std::size_t pc) {
    const Rational inv = 1 / t(pr, pc);
    for (std::size_t j = 0; j <= rhs; ++j) t(pr, j) *= inv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == pr || t(i, pc) == 0) continue;
      const Rational f = t(i, pc);
      for (std::size_t j = 0; j <= rhs; ++j) t(i, j) -= f * t(pr, j);
    }
    basis[pr] = pc;
  };

  // Objective row holds reduced costs for a minimisation: entering column is
  // the lowest index with a negative reduced cost.
  auto run = [&](std::size_t allowed_cols) -> bool {
    for (;;) {
      std::size_t enter = allowed_cols;
      for (std::size_t j = 0; j < allowed_cols; ++j) {
        if (t(m, j) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed_cols) return true;
      std::size_t leave = m;
      Rational best_ratio;
      for (std::size_t i = 0; i < m; ++i) {
        if (t(i, enter) <= 0) continue;
        Rational ratio = t(i, rhs) / t(i, enter);
        if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  };

  // Phase 1: minimise the sum of artificials.
  for (std::size_t j = 0; j <= rhs; ++j) t(m, j) = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= rhs; ++j) {
      if (j < art0 || j == rhs) t(m, j) -= t(i, j);
    }
  }
  run(art0 + m);
  LpResult result;
  if (t(m, rhs) != 0) return result;

  // Drive remaining artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < art0) continue;
    for (std::size_t j = 0; j < art0; ++j) {
      if (t(i, j) != 0) {
        pivot(i, j);
        break;
      }
    }
  }

  // Phase 2 over structural and slack columns only.
  for (std::size_t j = 0; j <= rhs; ++j) t(m, j) = 0;
  for (std::size_t j = 0; j < nvars; ++j) t(m, j) = -c[j];
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t b = basis[i];
    if (b < nvars && c[b] != 0) {
      const Rational f = t(m, b);
      for (std::size_t j = 0; j <= rhs; ++j) t(m, j) -= f * t(i, j);
    }
  }
  if (!run(art0)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.values.assign(nvars, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < nvars) result.values[basis[i]] = t(i, rhs);
  }
  result.objective = dot(c, result.values);
  return result;
}

}  // namespace cnash::linear
