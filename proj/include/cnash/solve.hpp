#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cnash/error.hpp"
#include "cnash/game.hpp"
#include "cnash/linear.hpp"
#include "cnash/verify.hpp"

namespace cnash {

/// Largest game searched over every support pair without an explicit bound.
inline constexpr std::size_t kExhaustiveLimit = 14;

struct Equilibrium {
  Profile profile;
  SupportSet row_support;
  SupportSet col_support;
  /// The indifference system for this support pair was rank deficient; the
  /// profile is one representative of a continuum.
  bool degenerate = false;
};

/// Narrows the support pairs visited by the enumerators. Explicit candidate
/// lists replace the power set on that side; the predicate prunes pairs.
struct SupportRestriction {
  std::string name;
  std::optional<std::vector<SupportSet>> row_candidates;
  std::optional<std::vector<SupportSet>> col_candidates;
  std::function<bool(const SupportSet&, const SupportSet&)> pair_predicate;
};

struct SearchBounds {
  std::optional<std::size_t> max_support;
  std::optional<SupportRestriction> restriction;
};

struct EquilibriumSet {
  std::vector<Equilibrium> equilibria;
  bool exhaustive = true;
  std::optional<std::size_t> max_support;
  std::string restriction;
  bool degenerate = false;

  bool empty() const { return equilibria.empty(); }
  std::size_t size() const { return equilibria.size(); }
};

namespace detail {

inline void subsets_of_size(std::size_t n, std::size_t k, std::size_t start, SupportSet& current,
                            std::vector<SupportSet>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i + (k - current.size()) <= n; ++i) {
    current.push_back(i);
    subsets_of_size(n, k, i + 1, current, out);
    current.pop_back();
  }
}

inline std::vector<SupportSet> all_supports(std::size_t n, std::size_t max_size) {
  std::vector<SupportSet> out;
  SupportSet current;
  for (std::size_t k = 1; k <= std::min(n, max_size); ++k) subsets_of_size(n, k, 0, current, out);
  return out;
}

/// One side of the support-pair problem: find a strategy `q` supported
/// exactly on `own_support` that makes the *other* player indifferent over
/// `other_support`, with no strategy in `check` doing better.
///
/// `payoff(a, b)` is the other player's payoff for their pure strategy `a`
/// against our pure strategy `b`.
struct SideResult {
  std::optional<Vector> strategy;
  bool degenerate = false;
  bool inconsistent = false;
};

template <typename PayoffFn>
SideResult solve_side(std::size_t n, const SupportSet& own_support, const SupportSet& other_support,
                      const std::vector<std::size_t>& check, PayoffFn payoff) {
  const std::size_t k = own_support.size();
  // Unknowns: q_b for b in own_support, then the common value v.
  Matrix a(other_support.size() + 1, k + 1);
  Vector b(other_support.size() + 1, Rational(0));
  for (std::size_t r = 0; r < other_support.size(); ++r) {
    for (std::size_t c = 0; c < k; ++c) a(r, c) = payoff(other_support[r], own_support[c]);
    a(r, k) = -1;
  }
  for (std::size_t c = 0; c < k; ++c) a(other_support.size(), c) = 1;
  b[other_support.size()] = 1;

  SideResult result;
  const linear::SystemSolution sol = linear::solve_system(a, b);
  if (sol.kind == linear::SystemKind::kInconsistent) {
    result.inconsistent = true;
    return result;
  }

  auto value_of = [&](std::size_t other_pure, const Vector& q) {
    Rational s = 0;
    for (std::size_t c = 0; c < k; ++c) s += q[c] * payoff(other_pure, own_support[c]);
    return s;
  };

  if (sol.kind == linear::SystemKind::kUnique) {
    Vector q(sol.values.begin(), sol.values.begin() + static_cast<std::ptrdiff_t>(k));
    for (const auto& p : q) {
      if (p <= 0) return result;
    }
    const Rational& v = sol.values[k];
    for (std::size_t other_pure : check) {
      if (value_of(other_pure, q) > v) return result;
    }
    Vector full(n, Rational(0));
    for (std::size_t c = 0; c < k; ++c) full[own_support[c]] = q[c];
    result.strategy = std::move(full);
    return result;
  }

  // Rank deficient: the feasible set is a polytope. Look for its point that
  // maximises the smallest probability on the support; a positive optimum
  // means a strategy with exactly this support exists.
  result.degenerate = true;
  Rational floor_value = payoff(other_support.empty() ? 0 : other_support[0], own_support[0]);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c : own_support) floor_value = std::min(floor_value, payoff(r, c));
  // Variables: q (k), w = v - floor_value (1), t (1).
  const std::size_t nv = k + 2;
  Vector objective(nv, Rational(0));
  objective[k + 1] = 1;
  Matrix eq(other_support.size() + 1, nv);
  Vector eq_b(other_support.size() + 1, Rational(0));
  for (std::size_t r = 0; r < other_support.size(); ++r) {
    for (std::size_t c = 0; c < k; ++c) eq(r, c) = payoff(other_support[r], own_support[c]);
    eq(r, k) = -1;
    eq_b[r] = floor_value;
  }
  for (std::size_t c = 0; c < k; ++c) eq(other_support.size(), c) = 1;
  eq_b[other_support.size()] = 1;
  Matrix ub(k + check.size(), nv);
  Vector ub_b(k + check.size(), Rational(0));
  for (std::size_t c = 0; c < k; ++c) {
    ub(c, c) = -1;
    ub(c, k + 1) = 1;
  }
  for (std::size_t r = 0; r < check.size(); ++r) {
    for (std::size_t c = 0; c < k; ++c) ub(k + r, c) = payoff(check[r], own_support[c]);
    ub(k + r, k) = -1;
    ub_b[k + r] = floor_value;
  }
  const linear::LpResult lp = linear::maximize(objective, eq, eq_b, ub, ub_b);
  if (lp.status != linear::LpStatus::kOptimal || lp.objective <= 0) return result;
  Vector full(n, Rational(0));
  for (std::size_t c = 0; c < k; ++c) full[own_support[c]] = lp.values[c];
  result.strategy = std::move(full);
  return result;
}

inline std::vector<std::size_t> complement(std::size_t n, const SupportSet& a, const SupportSet* b = nullptr) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    const bool in_a = std::binary_search(a.begin(), a.end(), i);
    const bool in_b = b && std::binary_search(b->begin(), b->end(), i);
    if (!in_a && !in_b) out.push_back(i);
  }
  return out;
}

enum class Notion { kNash, kConstrainedDisjoint };

/// Solves one support pair. For Nash, best responses are checked against
/// every pure strategy; for the constrained disjoint notion only against
/// strategies outside the opponent's support.
inline std::optional<Equilibrium> solve_support_pair(const BimatrixGame& game, const SupportSet& rows,
                                                     const SupportSet& cols, Notion notion) {
  const std::size_t n = game.size();
  const Matrix& r = game.row_payoff();
  const Matrix& c = game.col_payoff();
  const bool constrained = notion == Notion::kConstrainedDisjoint;

  // Row player's strategy x keeps the column player indifferent over `cols`.
  const auto col_check = constrained ? complement(n, cols, &rows) : complement(n, cols);
  SideResult xs = solve_side(n, rows, cols, col_check, [&](std::size_t col_pure, std::size_t row_pure) {
    return c(row_pure, col_pure);
  });
  if (xs.inconsistent || !xs.strategy) return std::nullopt;
  const auto row_check = constrained ? complement(n, rows, &cols) : complement(n, rows);
  SideResult ys = solve_side(n, cols, rows, row_check, [&](std::size_t row_pure, std::size_t col_pure) {
    return r(row_pure, col_pure);
  });
  if (!ys.strategy) return std::nullopt;
  return Equilibrium{Profile{MixedStrategy(std::move(*xs.strategy)), MixedStrategy(std::move(*ys.strategy))},
                     rows, cols, xs.degenerate || ys.degenerate};
}

inline std::vector<std::pair<SupportSet, SupportSet>> candidate_pairs(std::size_t n, const SearchBounds& bounds,
                                                                     bool require_disjoint) {
  const std::size_t cap = bounds.max_support.value_or(n);
  const SupportRestriction* restriction = bounds.restriction ? &*bounds.restriction : nullptr;
  const bool explicit_rows = restriction && restriction->row_candidates;
  const bool explicit_cols = restriction && restriction->col_candidates;
  if ((!explicit_rows || !explicit_cols) && n > kExhaustiveLimit && !bounds.max_support) {
    throw Error(ErrorCode::kPrecondition,
                "game has " + std::to_string(n) + " strategies; a --max-support bound or support filter is required above " +
                    std::to_string(kExhaustiveLimit));
  }
  auto side = [&](bool is_explicit, const std::optional<std::vector<SupportSet>>& given) {
    std::vector<SupportSet> out;
    if (is_explicit) {
      for (const auto& s : *given) {
        if (!s.empty() && s.size() <= cap) out.push_back(s);
      }
    } else {
      out = all_supports(n, cap);
    }
    return out;
  };
  const auto row_sets = side(explicit_rows, restriction ? restriction->row_candidates : std::nullopt);
  const auto col_sets = side(explicit_cols, restriction ? restriction->col_candidates : std::nullopt);

  std::vector<std::pair<SupportSet, SupportSet>> pairs;
  for (const auto& i : row_sets) {
    for (const auto& j : col_sets) {
      if (require_disjoint) {
        bool overlap = false;
        for (auto t : i) {
          if (std::binary_search(j.begin(), j.end(), t)) {
            overlap = true;
            break;
          }
        }
        if (overlap) continue;
      }
      if (restriction && restriction->pair_predicate && !restriction->pair_predicate(i, j)) continue;
      pairs.emplace_back(i, j);
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    const std::size_t sa = a.first.size() + a.second.size();
    const std::size_t sb = b.first.size() + b.second.size();
    if (sa != sb) return sa < sb;
    return a < b;
  });
  return pairs;
}

inline EquilibriumSet enumerate(const BimatrixGame& game, const SearchBounds& bounds, Notion notion,
                                bool require_disjoint) {
  const std::size_t n = game.size();
  EquilibriumSet out;
  out.max_support = bounds.max_support;
  out.exhaustive = (!bounds.max_support || *bounds.max_support >= n) && !bounds.restriction;
  if (bounds.restriction) out.restriction = bounds.restriction->name;
  for (const auto& [rows, cols] : candidate_pairs(n, bounds, require_disjoint)) {
    if (auto eq = solve_support_pair(game, rows, cols, notion)) {
      out.degenerate = out.degenerate || eq->degenerate;
      out.equilibria.push_back(std::move(*eq));
    }
  }
  return out;
}

}  // namespace detail

/// Every Nash equilibrium reachable through the admissible support pairs,
/// in (|I| + |J|, lexicographic) order of the supports.
inline EquilibriumSet enumerate_nash(const BimatrixGame& game, const SearchBounds& bounds = {}) {
  return detail::enumerate(game, bounds, detail::Notion::kNash, false);
}

/// Equilibrium in which both players mix over every strategy, if one exists.
inline std::optional<Profile> fully_mixed_nash(const BimatrixGame& game) {
  SupportSet all(game.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto eq = detail::solve_support_pair(game, all, all, detail::Notion::kNash);
  if (!eq) return std::nullopt;
  return std::move(eq->profile);
}

/// Nash equilibria that also satisfy `spec`. Disjoint and partition
/// constraints are applied while generating support pairs, which keeps the
/// result exhaustive for that constraint.
inline EquilibriumSet filter_nash_by_constraint(const BimatrixGame& game, const ConstraintSpec& spec,
                                                const SearchBounds& bounds = {}) {
  const bool support_level =
      spec.kind() == ConstraintKind::kDisjoint || spec.kind() == ConstraintKind::kPartition;
  EquilibriumSet all = detail::enumerate(game, bounds, detail::Notion::kNash, support_level);
  std::erase_if(all.equilibria,
                [&](const Equilibrium& e) { return !check_constraint(e.profile, spec, game.size()); });
  all.degenerate = std::any_of(all.equilibria.begin(), all.equilibria.end(),
                               [](const Equilibrium& e) { return e.degenerate; });
  return all;
}

/// Profiles with disjoint supports where neither player can gain by moving to
/// strategies outside the opponent's support. These need not be Nash.
inline EquilibriumSet enumerate_constrained_disjoint(const BimatrixGame& game, const SearchBounds& bounds = {}) {
  EquilibriumSet out = detail::enumerate(game, bounds, detail::Notion::kConstrainedDisjoint, true);
  std::erase_if(out.equilibria, [&](const Equilibrium& e) {
    return constrained_regret_disjoint(game, e.profile, Player::kRow).value != 0 ||
           constrained_regret_disjoint(game, e.profile, Player::kCol).value != 0;
  });
  return out;
}

}  // namespace cnash
