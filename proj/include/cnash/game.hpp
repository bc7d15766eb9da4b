#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cnash/error.hpp"
#include "cnash/rational.hpp"

namespace cnash {

/// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Rational& fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) {
        throw Error(ErrorCode::kDimensionMismatch, "ragged matrix rows");
      }
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

enum class Player { kRow, kCol };

inline Player opponent(Player p) { return p == Player::kRow ? Player::kCol : Player::kRow; }
inline const char* player_name(Player p) { return p == Player::kRow ? "row" : "col"; }

/// Two-player game over one shared, labelled strategy set.
class BimatrixGame {
 public:
  BimatrixGame(std::vector<std::string> labels, Matrix row_payoff, Matrix col_payoff,
               nlohmann::json metadata = nlohmann::json::object())
      : labels_(std::move(labels)),
        row_(std::move(row_payoff)),
        col_(std::move(col_payoff)),
        metadata_(std::move(metadata)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw Error(ErrorCode::kInvalidArgument, "game needs at least one strategy");
    if (row_.rows() != n || row_.cols() != n || col_.rows() != n || col_.cols() != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "payoff matrices must both be square with one row per label (n=" +
                      std::to_string(n) + ")");
    }
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != n) throw Error(ErrorCode::kInvalidArgument, "strategy labels must be unique");
  }

  /// Labels default to "s0", "s1", ...
  static BimatrixGame from_matrices(Matrix row_payoff, Matrix col_payoff) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < row_payoff.rows(); ++i) labels.push_back("s" + std::to_string(i));
    return BimatrixGame(std::move(labels), std::move(row_payoff), std::move(col_payoff));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Matrix& row_payoff() const noexcept { return row_; }
  const Matrix& col_payoff() const noexcept { return col_; }
  const Matrix& payoff(Player p) const noexcept { return p == Player::kRow ? row_ : col_; }
  const nlohmann::json& metadata() const noexcept { return metadata_; }

  BimatrixGame with_metadata(nlohmann::json metadata) const {
    BimatrixGame g = *this;
    g.metadata_ = std::move(metadata);
    return g;
  }

  Rational min_payoff() const { return extreme(false); }
  Rational max_payoff() const { return extreme(true); }

 private:
  Rational extreme(bool want_max) const {
    Rational best = row_(0, 0);
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        for (const Rational* v : {&row_(i, j), &col_(i, j)}) {
          if (want_max ? *v > best : *v < best) best = *v;
        }
      }
    }
    return best;
  }

  std::vector<std::string> labels_;
  Matrix row_;
  Matrix col_;
  nlohmann::json metadata_;
};

/// A point of the probability simplex. Construction enforces nonnegativity and
/// an exact sum of one.
class MixedStrategy {
 public:
  explicit MixedStrategy(Vector probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw Error(ErrorCode::kInvalidArgument, "empty mixed strategy");
    for (const auto& p : probs_) {
      if (p < 0) throw Error(ErrorCode::kInvalidArgument, "negative probability " + to_string(p));
    }
    if (sum(probs_) != 1) {
      throw Error(ErrorCode::kInvalidArgument, "probabilities sum to " + to_string(sum(probs_)) + ", not 1");
    }
  }

  static MixedStrategy pure(std::size_t n, std::size_t i) {
    if (i >= n) throw Error(ErrorCode::kInvalidArgument, "pure strategy index out of range");
    Vector v(n, Rational(0));
    v[i] = 1;
    return MixedStrategy(std::move(v));
  }

  static MixedStrategy uniform(std::size_t n) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return uniform_on(n, all);
  }

  static MixedStrategy uniform_on(std::size_t n, const std::vector<std::size_t>& indices) {
    if (indices.empty()) throw Error(ErrorCode::kInvalidArgument, "uniform over an empty set");
    Vector v(n, Rational(0));
    const Rational w(1, static_cast<unsigned long>(indices.size()));
    for (auto i : indices) {
      if (i >= n) throw Error(ErrorCode::kInvalidArgument, "index out of range");
      v[i] += w;
    }
    return MixedStrategy(std::move(v));
  }

  std::size_t size() const noexcept { return probs_.size(); }
  const Rational& operator[](std::size_t i) const { return probs_[i]; }
  const Vector& probs() const noexcept { return probs_; }

  bool operator==(const MixedStrategy& other) const = default;

 private:
  Vector probs_;
};

struct Profile {
  MixedStrategy x;  // row player
  MixedStrategy y;  // column player

  const MixedStrategy& of(Player p) const { return p == Player::kRow ? x : y; }
  bool operator==(const Profile& other) const = default;
};

/// Sorted set of strategy indices.
using SupportSet = std::vector<std::size_t>;

inline SupportSet support(const MixedStrategy& s) {
  SupportSet out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] > 0) out.push_back(i);
  }
  return out;
}

inline void require_dimension(const BimatrixGame& game, const Profile& profile) {
  if (profile.x.size() != game.size() || profile.y.size() != game.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "profile dimension (" + std::to_string(profile.x.size()) + ", " +
                    std::to_string(profile.y.size()) + ") does not match game size " +
                    std::to_string(game.size()));
  }
}

/// Payoff of every pure strategy of `player` against the opponent's mixed
/// strategy: R y for the row player, x^T C for the column player.
inline Vector pure_payoffs(const BimatrixGame& game, Player player, const MixedStrategy& opponent_strategy) {
  const std::size_t n = game.size();
  if (opponent_strategy.size() != n) throw Error(ErrorCode::kDimensionMismatch, "strategy dimension mismatch");
  const Matrix& u = game.payoff(player);
  Vector out(n, Rational(0));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      const Rational& q = opponent_strategy[t];
      if (q == 0) continue;
      out[s] += q * (player == Player::kRow ? u(s, t) : u(t, s));
    }
  }
  return out;
}

inline Rational expected_payoff(const BimatrixGame& game, const Profile& profile, Player player) {
  require_dimension(game, profile);
  const MixedStrategy& own = profile.of(player);
  return dot(own.probs(), pure_payoffs(game, player, profile.of(opponent(player))));
}

inline Rational l1_distance(const MixedStrategy& a, const MixedStrategy& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kDimensionMismatch, "strategy dimension mismatch");
  Rational d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += abs(a[i] - b[i]);
  return d;
}

/// u |-> (u - offset) * scale. `scale` is zero for a constant game.
struct AffineMap {
  Rational offset = 0;
  Rational scale = 1;
  bool constant_game = false;

  Rational apply(const Rational& u) const { return (u - offset) * scale; }
  /// Maps a scaled payoff (or payoff difference, with `is_difference`) back.
  Rational invert(const Rational& v, bool is_difference = false) const {
    if (constant_game) {
      throw Error(ErrorCode::kInvalidArgument, "constant game: affine map is not invertible");
    }
    return is_difference ? Rational(v / scale) : Rational(v / scale + offset);
  }
};

struct ScaledGame {
  BimatrixGame game;
  AffineMap map;
};

/// Jointly rescales both payoff matrices into [0, 1].
inline ScaledGame scale_payoffs(const BimatrixGame& game) {
  const Rational lo = game.min_payoff();
  const Rational hi = game.max_payoff();
  AffineMap map;
  map.offset = lo;
  if (hi == lo) {
    map.scale = 0;
    map.constant_game = true;
  } else {
    map.scale = 1 / (hi - lo);
  }
  const std::size_t n = game.size();
  Matrix r(n, n), c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r(i, j) = map.apply(game.row_payoff()(i, j));
      c(i, j) = map.apply(game.col_payoff()(i, j));
    }
  }
  nlohmann::json meta = game.metadata();
  meta["scaling"] = {{"offset", to_string(map.offset)},
                     {"scale", to_string(map.scale)},
                     {"constant_game", map.constant_game}};
  return {BimatrixGame(game.labels(), std::move(r), std::move(c), std::move(meta)), map};
}

}  // namespace cnash
