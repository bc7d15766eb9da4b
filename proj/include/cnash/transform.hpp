#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cnash/error.hpp"
#include "cnash/game.hpp"

namespace cnash {

enum class CopyOwner { kShared, kRow, kCol };

inline const char* copy_owner_name(CopyOwner o) {
  switch (o) {
    case CopyOwner::kShared: return "shared";
    case CopyOwner::kRow: return "row";
    case CopyOwner::kCol: return "col";
  }
  return "?";
}

inline CopyOwner parse_copy_owner(const std::string& s) {
  if (s == "shared") return CopyOwner::kShared;
  if (s == "row") return CopyOwner::kRow;
  if (s == "col") return CopyOwner::kCol;
  throw Error(ErrorCode::kParse, "unknown copy owner '" + s + "'");
}

/// True when `player` may play a strategy with this owner without being
/// punished.
inline bool associated_with(CopyOwner owner, Player player) {
  return owner == CopyOwner::kShared || (owner == CopyOwner::kRow) == (player == Player::kRow);
}

/// Maps each strategy of a derived game back to the source strategy it copies.
struct LabelMap {
  struct Entry {
    std::size_t source;
    CopyOwner owner;
  };
  std::vector<Entry> forward;
  std::size_t source_size = 0;
  Rational punishment = 0;
  /// Payoff range of the source game, for the projection bound.
  Rational source_min = 0;
  Rational source_max = 0;

  static LabelMap identity(const BimatrixGame& game) {
    LabelMap m;
    for (std::size_t i = 0; i < game.size(); ++i) m.forward.push_back({i, CopyOwner::kShared});
    m.source_size = game.size();
    m.source_min = game.min_payoff();
    m.source_max = game.max_payoff();
    m.punishment = m.source_min - 1;
    return m;
  }
};

struct DuplicatedGame {
  BimatrixGame game;
  LabelMap map;
};

/// Gives every strategy in `subset` a row-owned and a column-owned copy.
///
/// A player on its own copy (or a shared strategy) earns the source payoff
/// against the opponent's own copy or shared strategy. Playing the opponent's
/// copy earns `sigma`; the bystander facing such a play earns 0. Strategies
/// are ordered shared, then row copies, then column copies.
inline DuplicatedGame duplicate_strategies(const BimatrixGame& game, SupportSet subset,
                                           std::optional<Rational> sigma = std::nullopt) {
  const std::size_t n = game.size();
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (auto s : subset) {
    if (s >= n) throw Error(ErrorCode::kInvalidArgument, "duplicate: index out of range");
  }
  LabelMap map = LabelMap::identity(game);
  if (subset.empty()) return {game, map};

  // Bystander entries are 0, so the punishment must undercut 0 as well.
  const Rational floor = std::min(game.min_payoff(), Rational(0));
  const Rational punishment = sigma.value_or(floor - 1);
  if (punishment >= floor) {
    throw Error(ErrorCode::kInvalidArgument,
                "sigma must be below every other payoff of the derived game (< " + to_string(floor) + ")");
  }

  map.forward.clear();
  map.punishment = punishment;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::binary_search(subset.begin(), subset.end(), i)) {
      map.forward.push_back({i, CopyOwner::kShared});
      labels.push_back(game.labels()[i]);
    }
  }
  for (auto owner : {CopyOwner::kRow, CopyOwner::kCol}) {
    for (auto i : subset) {
      map.forward.push_back({i, owner});
      labels.push_back(game.labels()[i] + (owner == CopyOwner::kRow ? ".r" : ".c"));
    }
  }

  const std::size_t m = map.forward.size();
  Matrix r(m, m), c(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const auto& ra = map.forward[a];
      const auto& cb = map.forward[b];
      if (!associated_with(ra.owner, Player::kRow)) {
        r(a, b) = punishment;
      } else if (!associated_with(cb.owner, Player::kCol)) {
        r(a, b) = 0;
      } else {
        r(a, b) = game.row_payoff()(ra.source, cb.source);
      }
      if (!associated_with(cb.owner, Player::kCol)) {
        c(a, b) = punishment;
      } else if (!associated_with(ra.owner, Player::kRow)) {
        c(a, b) = 0;
      } else {
        c(a, b) = game.col_payoff()(ra.source, cb.source);
      }
    }
  }
  nlohmann::json meta = game.metadata();
  meta["transform"] = {{"kind", "duplicate"}, {"sigma", to_string(punishment)}};
  return {BimatrixGame(std::move(labels), std::move(r), std::move(c), std::move(meta)), std::move(map)};
}

/// Replaces every diagonal entry of both payoff matrices with -M.
inline BimatrixGame diagonal_modify(const BimatrixGame& game, const Rational& m) {
  if (m <= 0) throw Error(ErrorCode::kInvalidArgument, "diagonal modification needs M > 0");
  Matrix r = game.row_payoff();
  Matrix c = game.col_payoff();
  for (std::size_t t = 0; t < game.size(); ++t) {
    r(t, t) = -m;
    c(t, t) = -m;
  }
  nlohmann::json meta = game.metadata();
  meta["transform"] = {{"kind", "diagonal_modify"}, {"M", to_string(m)}};
  return BimatrixGame(game.labels(), std::move(r), std::move(c), std::move(meta));
}

/// Default M for diagonal modification: 2 n (max - min) + 1.
inline Rational default_diagonal_m(const BimatrixGame& game) {
  return 2 * Rational(static_cast<long>(game.size())) * (game.max_payoff() - game.min_payoff()) + 1;
}

struct ProjectedProfile {
  Profile profile;
  /// Mass each player placed on the other player's copies.
  Rational row_unassociated = 0;
  Rational col_unassociated = 0;
  /// Extra regret the projection may introduce relative to the derived game:
  /// 2 (eps_row + eps_col) (max - min) over the source payoff range.
  Rational extra_regret_bound = 0;
};

/// Sums every copy's mass back onto its source strategy.
inline ProjectedProfile project_profile(const Profile& derived, const LabelMap& map) {
  const std::size_t m = map.forward.size();
  if (derived.x.size() != m || derived.y.size() != m) {
    throw Error(ErrorCode::kDimensionMismatch, "profile does not match the derived game");
  }
  Vector x(map.source_size, Rational(0)), y(map.source_size, Rational(0));
  ProjectedProfile out{Profile{MixedStrategy::pure(1, 0), MixedStrategy::pure(1, 0)}};
  for (std::size_t i = 0; i < m; ++i) {
    const auto& e = map.forward[i];
    x[e.source] += derived.x[i];
    y[e.source] += derived.y[i];
    if (!associated_with(e.owner, Player::kRow)) out.row_unassociated += derived.x[i];
    if (!associated_with(e.owner, Player::kCol)) out.col_unassociated += derived.y[i];
  }
  out.profile = Profile{MixedStrategy(std::move(x)), MixedStrategy(std::move(y))};
  out.extra_regret_bound = 2 * (out.row_unassociated + out.col_unassociated) * (map.source_max - map.source_min);
  return out;
}

/// Lifts a source profile onto each player's associated copies.
inline Profile lift_profile(const Profile& source, const LabelMap& map) {
  const std::size_t m = map.forward.size();
  if (source.x.size() != map.source_size || source.y.size() != map.source_size) {
    throw Error(ErrorCode::kDimensionMismatch, "profile does not match the source game");
  }
  Vector x(m, Rational(0)), y(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    const auto& e = map.forward[i];
    if (associated_with(e.owner, Player::kRow)) x[i] = source.x[e.source];
    if (associated_with(e.owner, Player::kCol)) y[i] = source.y[e.source];
  }
  return Profile{MixedStrategy(std::move(x)), MixedStrategy(std::move(y))};
}

}  // namespace cnash
