#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cnash/error.hpp"
#include "cnash/game.hpp"
#include "cnash/rational.hpp"

namespace cnash {

// ---------------------------------------------------------------------------
// Constraint specifications
// ---------------------------------------------------------------------------

enum class ConstraintKind { kDisjoint, kPartition, kFar, kMajor, kSemiDisjoint };

/// Tagged constraint on a profile. `param` is delta for Far, theta for Major,
/// and M for SemiDisjoint; it is unused otherwise.
class ConstraintSpec {
 public:
  static ConstraintSpec disjoint() { return ConstraintSpec(ConstraintKind::kDisjoint, 0); }
  static ConstraintSpec partition() { return ConstraintSpec(ConstraintKind::kPartition, 0); }
  static ConstraintSpec far(const Rational& delta) {
    if (delta < 0 || delta > 1) throw Error(ErrorCode::kInvalidArgument, "far: delta must lie in [0,1]");
    return ConstraintSpec(ConstraintKind::kFar, delta);
  }
  static ConstraintSpec major(const Rational& theta) {
    if (theta < 0 || theta >= 1) throw Error(ErrorCode::kInvalidArgument, "major: theta must lie in [0,1)");
    return ConstraintSpec(ConstraintKind::kMajor, theta);
  }
  static ConstraintSpec semi_disjoint(const Rational& m) {
    if (m <= 0) throw Error(ErrorCode::kInvalidArgument, "semi-disjoint: M must be positive");
    return ConstraintSpec(ConstraintKind::kSemiDisjoint, m);
  }

  /// Parses the command-line form: disjoint | partition | far:<r> | major:<r> | semi:<r>.
  static ConstraintSpec parse(const std::string& text) {
    if (text == "disjoint") return disjoint();
    if (text == "partition") return partition();
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
      const std::string head = text.substr(0, colon);
      const Rational value = parse_rational(text.substr(colon + 1));
      if (head == "far") return far(value);
      if (head == "major") return major(value);
      if (head == "semi") return semi_disjoint(value);
    }
    throw Error(ErrorCode::kParse, "unknown constraint '" + text + "'");
  }

  ConstraintKind kind() const noexcept { return kind_; }
  const Rational& param() const noexcept { return param_; }

  std::string to_string() const {
    switch (kind_) {
      case ConstraintKind::kDisjoint: return "disjoint";
      case ConstraintKind::kPartition: return "partition";
      case ConstraintKind::kFar: return "far:" + cnash::to_string(param_);
      case ConstraintKind::kMajor: return "major:" + cnash::to_string(param_);
      case ConstraintKind::kSemiDisjoint: return "semi:" + cnash::to_string(param_);
    }
    return "?";
  }

 private:
  ConstraintSpec(ConstraintKind kind, Rational param) : kind_(kind), param_(std::move(param)) {}

  ConstraintKind kind_;
  Rational param_;
};

// ---------------------------------------------------------------------------
// Regret
// ---------------------------------------------------------------------------

/// Best unilateral deviation gain for one player. The witness is the lowest
/// index pure strategy attaining the best deviation payoff.
struct PlayerRegret {
  Rational value = 0;
  std::size_t witness = 0;
};

struct RegretReport {
  PlayerRegret row;
  PlayerRegret col;

  Rational max() const { return row.value > col.value ? row.value : col.value; }
};

inline PlayerRegret player_regret(const BimatrixGame& game, const Profile& profile, Player player) {
  require_dimension(game, profile);
  const Vector payoffs = pure_payoffs(game, player, profile.of(opponent(player)));
  const Rational current = dot(profile.of(player).probs(), payoffs);
  std::size_t best = 0;
  for (std::size_t s = 1; s < payoffs.size(); ++s) {
    if (payoffs[s] > payoffs[best]) best = s;
  }
  // The best pure payoff is never below a mixture of pure payoffs.
  return {payoffs[best] - current, best};
}

inline Rational regret(const BimatrixGame& game, const Profile& profile, Player player) {
  return player_regret(game, profile, player).value;
}

inline RegretReport regret_report(const BimatrixGame& game, const Profile& profile) {
  return {player_regret(game, profile, Player::kRow), player_regret(game, profile, Player::kCol)};
}

inline bool is_eps_nash(const BimatrixGame& game, const Profile& profile, const Rational& eps) {
  if (eps < 0) throw Error(ErrorCode::kInvalidArgument, "eps must be nonnegative");
  return regret_report(game, profile).max() <= eps;
}

// ---------------------------------------------------------------------------
// Constraint predicates
// ---------------------------------------------------------------------------

inline bool supports_disjoint(const MixedStrategy& x, const MixedStrategy& y) {
  for (std::size_t t = 0; t < x.size(); ++t) {
    if (x[t] > 0 && y[t] > 0) return false;
  }
  return true;
}

inline bool check_constraint(const Profile& profile, const ConstraintSpec& spec, std::size_t n) {
  const MixedStrategy& x = profile.x;
  const MixedStrategy& y = profile.y;
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::kDimensionMismatch, "profile dimension mismatch");
  switch (spec.kind()) {
    case ConstraintKind::kDisjoint:
      return supports_disjoint(x, y);
    case ConstraintKind::kPartition: {
      if (!supports_disjoint(x, y)) return false;
      for (std::size_t t = 0; t < n; ++t) {
        if (x[t] == 0 && y[t] == 0) return false;
      }
      return true;
    }
    case ConstraintKind::kFar:
      return l1_distance(x, y) >= 2 * spec.param();
    case ConstraintKind::kMajor:
      for (std::size_t t = 0; t < n; ++t) {
        if ((x[t] > 0 && x[t] <= spec.param()) || (y[t] > 0 && y[t] <= spec.param())) return false;
      }
      return true;
    case ConstraintKind::kSemiDisjoint: {
      const Rational bound = 1 / spec.param();
      for (std::size_t t = 0; t < n; ++t) {
        if (x[t] > 0 && y[t] > 0 && std::min(x[t], y[t]) >= bound) return false;
      }
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Constrained regret, disjoint supports
// ---------------------------------------------------------------------------

struct ConstrainedRegret {
  Rational value = 0;
  /// True when every strategy is in the opponent's support, so no feasible
  /// deviation exists at all.
  bool empty_feasible_set = false;
  std::optional<std::size_t> witness;
};

/// Deviations restricted to pure strategies outside the opponent's support.
/// Pure deviations suffice: the feasible set is a face of the simplex.
inline ConstrainedRegret constrained_regret_disjoint(const BimatrixGame& game, const Profile& profile,
                                                     Player player) {
  require_dimension(game, profile);
  const MixedStrategy& other = profile.of(opponent(player));
  const Vector payoffs = pure_payoffs(game, player, other);
  const Rational current = dot(profile.of(player).probs(), payoffs);
  ConstrainedRegret out;
  for (std::size_t s = 0; s < payoffs.size(); ++s) {
    if (other[s] > 0) continue;
    if (!out.witness || payoffs[s] > payoffs[*out.witness]) out.witness = s;
  }
  if (!out.witness) {
    out.empty_feasible_set = true;
    return out;
  }
  const Rational gain = payoffs[*out.witness] - current;
  out.value = gain > 0 ? gain : Rational(0);
  return out;
}

// ---------------------------------------------------------------------------
// Best response over the far set {x in simplex : ||x - y||_1 >= 2 delta}
// ---------------------------------------------------------------------------

struct FarOptimum {
  Rational value;
  MixedStrategy witness;
};

namespace detail {

/// ||x - y||_1 for x = (1 - s) e_i + s e_j, as an exact function of s.
inline Rational edge_distance(const MixedStrategy& y, std::size_t i, std::size_t j, const Rational& s,
                              const Rational& rest) {
  return abs(1 - s - y[i]) + abs(s - y[j]) + rest;
}

inline MixedStrategy edge_point(std::size_t n, std::size_t i, std::size_t j, const Rational& s) {
  Vector v(n, Rational(0));
  v[i] = 1 - s;
  v[j] = s;
  return MixedStrategy(std::move(v));
}

}  // namespace detail

/// Exact maximum of <c, x> over the simplex minus the open L1 ball of radius
/// 2 delta around y.
///
/// The feasible set is a polytope with an open convex region removed, so an
/// optimum is attained either at a simplex vertex or at a point of a simplex
/// edge where the distance equals 2 delta. Along an edge the distance is
/// piecewise linear in the edge parameter, with breakpoints at 1 - y_i and
/// y_j, so every candidate is rational and the search is exact.
inline FarOptimum max_payoff_far(const Vector& c, const MixedStrategy& y, const Rational& delta) {
  const std::size_t n = y.size();
  if (c.size() != n) throw Error(ErrorCode::kDimensionMismatch, "payoff vector dimension mismatch");
  if (delta < 0 || delta > 1) throw Error(ErrorCode::kInvalidArgument, "delta must lie in [0,1]");
  const Rational target = 2 * delta;

  std::optional<FarOptimum> best;
  auto offer = [&](const Rational& value, auto make_witness) {
    if (!best || value > best->value) best.emplace(FarOptimum{value, make_witness()});
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (2 * (1 - y[i]) >= target) offer(c[i], [&] { return MixedStrategy::pure(n, i); });
  }
  if (!best) {
    throw Error(ErrorCode::kInfeasible,
                "no strategy is 2*delta-far from y (delta=" + to_string(delta) + ")");
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (c[i] == c[j]) continue;  // objective constant on this edge: vertices already cover it
      const Rational rest = 1 - y[i] - y[j];
      std::vector<Rational> breaks{Rational(0), Rational(1)};
      for (const Rational& b : {Rational(1 - y[i]), y[j]}) {
        if (b > 0 && b < 1) breaks.push_back(b);
      }
      std::sort(breaks.begin(), breaks.end());
      breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
      for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const Rational& s0 = breaks[k];
        const Rational& s1 = breaks[k + 1];
        const Rational f0 = detail::edge_distance(y, i, j, s0, rest);
        const Rational f1 = detail::edge_distance(y, i, j, s1, rest);
        if (f0 == f1) {
          if (f0 >= target) {
            for (const Rational* s : {&s0, &s1}) {
              offer((1 - *s) * c[i] + *s * c[j], [&] { return detail::edge_point(n, i, j, *s); });
            }
          }
          continue;
        }
        const Rational s = s0 + (target - f0) * (s1 - s0) / (f1 - f0);
        if (s < s0 || s > s1) continue;
        offer((1 - s) * c[i] + s * c[j], [&] { return detail::edge_point(n, i, j, s); });
      }
    }
  }
  return *best;
}

struct FarRegret {
  Rational value = 0;
  MixedStrategy witness;
};

/// Constrained regret when deviations must stay 2 delta-far from the
/// opponent's strategy. Clamped below at zero, since the current strategy
/// itself need not be feasible.
inline FarRegret constrained_regret_far(const BimatrixGame& game, const Profile& profile, const Rational& delta,
                                        Player player) {
  require_dimension(game, profile);
  const MixedStrategy& other = profile.of(opponent(player));
  const Vector payoffs = pure_payoffs(game, player, other);
  const Rational current = dot(profile.of(player).probs(), payoffs);
  FarOptimum opt = max_payoff_far(payoffs, other, delta);
  const Rational gain = opt.value - current;
  return {gain > 0 ? gain : Rational(0), std::move(opt.witness)};
}

}  // namespace cnash
