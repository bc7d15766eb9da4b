#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cnash/error.hpp"
#include "cnash/game.hpp"
#include "cnash/transform.hpp"
#include "cnash/verify.hpp"

namespace cnash {

struct Move {
  Player player = Player::kRow;
  std::size_t from = 0;
  std::size_t to = 0;
  Rational mass = 0;
};

enum class BoundKind { kNash, kConstrainedDisjoint, kConstrainedFar };

inline const char* bound_kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::kNash: return "nash";
    case BoundKind::kConstrainedDisjoint: return "constrained_disjoint";
    case BoundKind::kConstrainedFar: return "constrained_far";
  }
  return "?";
}

/// A profile together with an upper bound on its (constrained) regret that
/// follows from how it was built.
struct CertifiedProfile {
  Profile profile;
  Rational regret_bound = 0;
  BoundKind bound_kind = BoundKind::kNash;
  /// Far radius for kConstrainedFar.
  Rational delta = 0;
  std::vector<Move> trace;
};

/// Actual regret of a certified profile under its own notion, computed from
/// scratch.
inline Rational measured_regret(const BimatrixGame& game, const CertifiedProfile& cp) {
  switch (cp.bound_kind) {
    case BoundKind::kNash:
      return regret_report(game, cp.profile).max();
    case BoundKind::kConstrainedDisjoint: {
      const Rational r = constrained_regret_disjoint(game, cp.profile, Player::kRow).value;
      const Rational c = constrained_regret_disjoint(game, cp.profile, Player::kCol).value;
      return r > c ? r : c;
    }
    case BoundKind::kConstrainedFar: {
      const Rational r = constrained_regret_far(game, cp.profile, cp.delta, Player::kRow).value;
      const Rational c = constrained_regret_far(game, cp.profile, cp.delta, Player::kCol).value;
      return r > c ? r : c;
    }
  }
  return 0;
}

struct Redistribution {
  MixedStrategy strategy;
  /// 2 * (total moved mass) * (beta - alpha).
  Rational bound;
};

/// Moves probability mass between pure strategies. If (x, y) was an exact
/// equilibrium of a game with payoffs in [alpha, beta], then (x', y) is a
/// `bound`-approximate equilibrium and neither player's payoff moves by more
/// than `bound`.
inline Redistribution redistribute(const MixedStrategy& x, const std::vector<Move>& moves, const Rational& alpha,
                                   const Rational& beta) {
  if (beta < alpha) throw Error(ErrorCode::kInvalidArgument, "payoff range must satisfy alpha <= beta");
  Vector v = x.probs();
  Rational total = 0;
  for (const Move& m : moves) {
    if (m.from >= v.size() || m.to >= v.size()) throw Error(ErrorCode::kInvalidArgument, "move index out of range");
    if (m.from == m.to) throw Error(ErrorCode::kInvalidArgument, "move must change strategy");
    if (m.mass < 0) throw Error(ErrorCode::kInvalidArgument, "move mass must be nonnegative");
    v[m.from] -= m.mass;
    if (v[m.from] < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "move of " + to_string(m.mass) + " leaves negative mass at strategy " + std::to_string(m.from));
    }
    v[m.to] += m.mass;
    total += m.mass;
  }
  return {MixedStrategy(std::move(v)), 2 * total * (beta - alpha)};
}

namespace detail {

inline void require_unit_range(const BimatrixGame& game, const char* who) {
  if (game.min_payoff() < 0 || game.max_payoff() > 1) {
    throw Error(ErrorCode::kPrecondition, std::string(who) + " needs payoffs in [0,1]; rescale first");
  }
}

/// Moves turning `from` into `to`, pairing surpluses with deficits in index
/// order.
inline std::vector<Move> transport(Player player, const MixedStrategy& from, const MixedStrategy& to) {
  std::vector<Move> moves;
  Vector surplus(from.size()), deficit(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    const Rational d = from[i] - to[i];
    surplus[i] = d > 0 ? d : Rational(0);
    deficit[i] = d < 0 ? Rational(-d) : Rational(0);
  }
  std::size_t j = 0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    while (surplus[i] > 0) {
      while (deficit[j] == 0) ++j;
      const Rational m = std::min(surplus[i], deficit[j]);
      moves.push_back({player, i, j, m});
      surplus[i] -= m;
      deficit[j] -= m;
    }
  }
  return moves;
}

inline std::size_t argmax_index(const MixedStrategy& s) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] > s[best]) best = i;
  }
  return best;
}

}  // namespace detail

/// Turns an exact equilibrium into a (delta, 4 delta)-far one.
///
/// If the equilibrium strategies are already 2 delta apart it is returned
/// as is. Otherwise the row strategy is first replaced by the column strategy
/// y*, then delta is taken from y*'s largest entry and spread evenly over the
/// other entries. The result (z, y*) is exactly 2 delta apart.
inline CertifiedProfile make_far(const BimatrixGame& game, const Profile& ne, const Rational& delta) {
  detail::require_unit_range(game, "make_far");
  require_dimension(game, ne);
  if (delta < 0 || delta > 1) throw Error(ErrorCode::kInvalidArgument, "delta must lie in [0,1]");
  if (regret_report(game, ne).max() != 0) {
    throw Error(ErrorCode::kPrecondition, "make_far needs an exact Nash equilibrium");
  }
  CertifiedProfile out{ne, 0, BoundKind::kNash, delta, {}};
  if (l1_distance(ne.x, ne.y) >= 2 * delta) return out;

  const std::size_t n = game.size();
  const MixedStrategy& y = ne.y;
  const std::size_t t = detail::argmax_index(y);
  if (n < 2 || y[t] < delta) {
    throw Error(ErrorCode::kPrecondition,
                "cannot extract delta=" + to_string(delta) + " from a single entry (largest is " + to_string(y[t]) + ")");
  }
  out.trace = detail::transport(Player::kRow, ne.x, y);
  const Rational share = delta / static_cast<long>(n - 1);
  std::vector<Move> spread;
  for (std::size_t k = 0; k < n; ++k) {
    if (k != t) spread.push_back({Player::kRow, t, k, share});
  }
  Redistribution z = redistribute(y, spread, 0, 1);
  out.trace.insert(out.trace.end(), spread.begin(), spread.end());
  out.profile = Profile{std::move(z.strategy), y};
  out.regret_bound = 4 * delta;
  return out;
}

/// Approximate constrained disjoint equilibrium: the column player sits on
/// the pure strategy `anchor`, the row player puts 1 - eps on its best reply
/// among the other strategies and spreads eps over the rest. With two
/// strategies the profile is pure and exact.
inline CertifiedProfile greedy_constrained_disjoint(const BimatrixGame& game, const Rational& eps,
                                                    std::size_t anchor = 0) {
  const std::size_t n = game.size();
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "greedy construction needs at least two strategies");
  if (eps <= 0 || eps > 1) throw Error(ErrorCode::kInvalidArgument, "eps must lie in (0,1]");
  if (anchor >= n) throw Error(ErrorCode::kInvalidArgument, "anchor index out of range");

  std::optional<std::size_t> t;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == anchor) continue;
    if (!t || game.row_payoff()(i, anchor) > game.row_payoff()(*t, anchor)) t = i;
  }
  CertifiedProfile out{Profile{MixedStrategy::pure(n, *t), MixedStrategy::pure(n, anchor)}, 0,
                       BoundKind::kConstrainedDisjoint, 1, {}};
  if (n == 2) return out;

  std::vector<Move> moves;
  const Rational share = eps / static_cast<long>(n - 2);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != *t && i != anchor) moves.push_back({Player::kRow, *t, i, share});
  }
  out.profile.x = redistribute(out.profile.x, moves, 0, 1).strategy;
  out.trace = std::move(moves);
  // The row player gives up at most eps times its payoff spread.
  out.regret_bound = eps * (game.max_payoff() - game.min_payoff());
  return out;
}

/// Converts an exact M-semi-disjoint equilibrium of the diagonally modified
/// game into an approximate constrained far equilibrium of the original game
/// with delta = 1 - n/M. regret_bound is set to 6n/M.
///
/// Each strategy is split into a big part (entries above 1/M) and a small
/// part; the small mass is collapsed onto the largest big entry. The big
/// supports are disjoint by the semi-disjoint property.
///
/// The 6n/M figure holds when the input supports are already disjoint. With
/// nonzero small parts it can fail: a mass below 1/M still costs up to 1 under
/// the diagonal penalty, and the collapse removes that deterrent. Check with
/// measured_regret.
inline CertifiedProfile semi_to_constrained_far(const BimatrixGame& game, const Rational& m, const Profile& semi_ne) {
  detail::require_unit_range(game, "semi_to_constrained_far");
  require_dimension(game, semi_ne);
  const std::size_t n = game.size();
  const Rational n_r(static_cast<long>(n));
  if (m < n_r) throw Error(ErrorCode::kInvalidArgument, "M must be at least n so that 1 - n/M >= 0");
  if (!check_constraint(semi_ne, ConstraintSpec::semi_disjoint(m), n)) {
    throw Error(ErrorCode::kPrecondition, "profile is not M-semi-disjoint");
  }
  if (regret_report(diagonal_modify(game, m), semi_ne).max() != 0) {
    throw Error(ErrorCode::kPrecondition, "profile is not an exact equilibrium of the diagonally modified game");
  }

  const Rational threshold = 1 / m;
  CertifiedProfile out{semi_ne, 6 * n_r / m, BoundKind::kConstrainedFar, 1 - n_r / m, {}};
  auto collapse = [&](Player p, const MixedStrategy& s) {
    std::optional<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i) {
      if (s[i] > threshold && (!keep || s[i] > s[*keep])) keep = i;
    }
    if (!keep) throw Error(ErrorCode::kPrecondition, "big support is empty");
    std::vector<Move> moves;
    for (std::size_t i = 0; i < n; ++i) {
      if (s[i] > 0 && s[i] <= threshold) moves.push_back({p, i, *keep, s[i]});
    }
    MixedStrategy collapsed = redistribute(s, moves, 0, 1).strategy;
    out.trace.insert(out.trace.end(), moves.begin(), moves.end());
    return collapsed;
  };
  MixedStrategy x = collapse(Player::kRow, semi_ne.x);
  MixedStrategy y = collapse(Player::kCol, semi_ne.y);
  out.profile = Profile{std::move(x), std::move(y)};
  return out;
}

}  // namespace cnash
