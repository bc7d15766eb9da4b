#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cnash/cnf.hpp"
#include "cnash/error.hpp"
#include "cnash/game.hpp"
#include "cnash/solve.hpp"
#include "cnash/transform.hpp"

namespace cnash {

enum class RoleKind { kLiteral, kVariable, kClause, kF };

inline const char* role_kind_name(RoleKind k) {
  switch (k) {
    case RoleKind::kLiteral: return "literal";
    case RoleKind::kVariable: return "variable";
    case RoleKind::kClause: return "clause";
    case RoleKind::kF: return "f";
  }
  return "?";
}

inline RoleKind parse_role_kind(const std::string& s) {
  if (s == "literal") return RoleKind::kLiteral;
  if (s == "variable") return RoleKind::kVariable;
  if (s == "clause") return RoleKind::kClause;
  if (s == "f") return RoleKind::kF;
  throw Error(ErrorCode::kParse, "unknown role kind '" + s + "'");
}

/// What a strategy of a reduction game stands for. `index` is the signed
/// literal for literals and is 1-based otherwise. `copy` numbers the copies
/// of a literal when it has several (0 when it has one).
struct Role {
  RoleKind kind = RoleKind::kLiteral;
  int index = 0;
  CopyOwner owner = CopyOwner::kShared;
  std::size_t copy = 0;

  bool operator==(const Role&) const = default;
};

struct ReductionParams {
  std::string kind;
  Rational eps;
  std::optional<Rational> delta;
  /// Size of the F cycle (1 for the single f strategy).
  std::size_t c = 0;
  /// Copies per sign of the first variable's literals (D and R).
  std::size_t d = 1;
  /// Duplicated copies (D) or duplicated variables (H).
  std::size_t i = 0;
  /// Diagonal payoff of the F block.
  Rational k_diag = 0;
  std::vector<std::size_t> duplicated_vars;
};

struct ReductionGame {
  BimatrixGame game;
  std::vector<Role> roles;
  ReductionParams params;
  CnfFormula formula;
  std::vector<std::string> warnings;
};

inline ReductionParams make_params(std::string kind, Rational eps, std::optional<Rational> delta = std::nullopt) {
  ReductionParams p;
  p.kind = std::move(kind);
  p.eps = std::move(eps);
  p.delta = std::move(delta);
  return p;
}

inline Rational default_eps(std::size_t n) {
  const Rational nr(static_cast<long>(n));
  return 1 / (2 * nr * nr * nr);
}

/// 1/n - 1/n^2 - 1/n^3, the split between the H and D regimes.
inline Rational far_split(std::size_t n) {
  const Rational nr(static_cast<long>(n));
  return 1 / nr - 1 / (nr * nr) - 1 / (nr * nr * nr);
}

namespace detail {

struct FBlock {
  std::size_t c = 0;
  Rational diag;
  Rational succ;
};

inline bool clause_has(const Clause& c, int lit) { return std::find(c.begin(), c.end(), lit) != c.end(); }

/// Payoff to `me` when playing a strategy with role `own` against `opp`.
inline Rational role_payoff(const Role& own, const Role& opp, Player me, const CnfFormula& f, const FBlock& fb) {
  const Rational n(static_cast<long>(f.num_vars));
  if (!associated_with(own.owner, me)) return -2 * n;
  const bool opp_is_mine = opp.owner != CopyOwner::kShared && associated_with(opp.owner, me);
  if (opp_is_mine) {
    if (own.kind != RoleKind::kF) return 0;
    return opp.kind == RoleKind::kF ? Rational(0) : n - 1;
  }
  if (own.kind == RoleKind::kF) {
    if (opp.kind != RoleKind::kF) return n - 1;
    if (own.index == opp.index) return fb.diag;
    const int c = static_cast<int>(fb.c);
    if (own.index == opp.index % c + 1) return fb.succ;
    return 0;
  }
  if (opp.kind == RoleKind::kF) return 0;
  switch (own.kind) {
    case RoleKind::kLiteral:
      if (opp.kind != RoleKind::kLiteral) return n - 4;
      return opp.index == -own.index ? n - 4 : n - 1;
    case RoleKind::kVariable:
      if (opp.kind != RoleKind::kLiteral) return n - 4;
      return std::abs(opp.index) == own.index ? Rational(0) : n;
    case RoleKind::kClause:
      if (opp.kind != RoleKind::kLiteral) return n - 4;
      return clause_has(f.clauses[static_cast<std::size_t>(own.index) - 1], opp.index) ? Rational(0) : n;
    case RoleKind::kF:
      break;
  }
  return 0;
}

inline std::string role_label(const Role& r, bool numbered_f) {
  std::string s;
  switch (r.kind) {
    case RoleKind::kLiteral:
      s = (r.index < 0 ? "-x" : "x") + std::to_string(std::abs(r.index));
      if (r.copy > 0) s += "#" + std::to_string(r.copy);
      break;
    case RoleKind::kVariable: s = "v" + std::to_string(r.index); break;
    case RoleKind::kClause: s = "c" + std::to_string(r.index); break;
    case RoleKind::kF: s = numbered_f ? "f" + std::to_string(r.index) : "f"; break;
  }
  if (r.owner == CopyOwner::kRow) s += ".r";
  if (r.owner == CopyOwner::kCol) s += ".c";
  return s;
}

inline nlohmann::json params_to_json(const ReductionParams& p) {
  nlohmann::json j;
  j["kind"] = p.kind;
  j["eps"] = to_string(p.eps);
  if (p.delta) j["delta"] = to_string(*p.delta);
  j["c"] = p.c;
  j["d"] = p.d;
  j["i"] = p.i;
  j["K"] = to_string(p.k_diag);
  j["duplicated_vars"] = p.duplicated_vars;
  return j;
}

inline ReductionGame build(const CnfFormula& f, std::vector<Role> roles, ReductionParams params,
                           const FBlock& fb) {
  const std::size_t m = roles.size();
  Matrix r(m, m), c(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      r(a, b) = role_payoff(roles[a], roles[b], Player::kRow, f, fb);
      c(a, b) = role_payoff(roles[b], roles[a], Player::kCol, f, fb);
    }
  }
  const bool numbered_f = fb.c > 1 || params.kind == "c" || params.kind == "r";
  std::vector<std::string> labels;
  nlohmann::json jroles = nlohmann::json::array();
  for (const Role& role : roles) {
    labels.push_back(role_label(role, numbered_f));
    jroles.push_back({{"kind", role_kind_name(role.kind)},
                      {"index", role.index},
                      {"owner", copy_owner_name(role.owner)},
                      {"copy", role.copy}});
  }
  nlohmann::json meta;
  meta["reduction"] = params.kind;
  meta["roles"] = std::move(jroles);
  meta["params"] = params_to_json(params);
  meta["formula"] = {{"num_vars", f.num_vars}, {"clauses", f.clauses}};
  if (params.k_diag > 1) meta["note"] = "payoffs exceed [0,1]; not rescaled";
  ReductionGame out{BimatrixGame(std::move(labels), std::move(r), std::move(c), std::move(meta)), std::move(roles),
                    std::move(params), f, {}};
  if (!f.is_3cnf()) out.warnings.push_back("formula is not 3CNF; the hardness argument assumes 3 literals per clause");
  return out;
}

inline void push_literals(std::vector<Role>& roles, std::size_t var, CopyOwner owner, std::size_t copy = 0) {
  const int v = static_cast<int>(var);
  roles.push_back({RoleKind::kLiteral, v, owner, copy});
  roles.push_back({RoleKind::kLiteral, -v, owner, copy});
}

inline void push_block(std::vector<Role>& roles, RoleKind kind, std::size_t count, CopyOwner owner) {
  for (std::size_t k = 1; k <= count; ++k) roles.push_back({kind, static_cast<int>(k), owner, 0});
}

inline Rational resolve_eps(const CnfFormula& f, const std::optional<Rational>& eps) {
  validate(f);
  const Rational e = eps.value_or(default_eps(f.num_vars));
  if (e <= 0) throw Error(ErrorCode::kInvalidArgument, "eps must be positive");
  return e;
}

/// Literal block for D-style games: the first variable gets d copies per sign,
/// the first i of which are split into row and column copies.
inline void d_literals(std::vector<Role>& roles, std::size_t n, std::size_t d, std::size_t i) {
  const std::size_t tag = d > 1 ? 1 : 0;
  for (std::size_t k = i + 1; k <= d; ++k) push_literals(roles, 1, CopyOwner::kShared, k);
  for (std::size_t v = 2; v <= n; ++v) push_literals(roles, v, CopyOwner::kShared);
  for (auto owner : {CopyOwner::kRow, CopyOwner::kCol}) {
    for (std::size_t k = 1; k <= i; ++k) push_literals(roles, 1, owner, tag * k);
  }
}

/// Literal block for H-style games: variables in `dup` get row and column
/// copies, the rest stay shared.
inline void h_literals(std::vector<Role>& roles, std::size_t n, const std::vector<std::size_t>& dup) {
  auto is_dup = [&](std::size_t v) { return std::find(dup.begin(), dup.end(), v) != dup.end(); };
  for (std::size_t v = 1; v <= n; ++v) {
    if (!is_dup(v)) push_literals(roles, v, CopyOwner::kShared);
  }
  for (auto owner : {CopyOwner::kRow, CopyOwner::kCol}) {
    for (std::size_t v = 1; v <= n; ++v) {
      if (is_dup(v)) push_literals(roles, v, owner);
    }
  }
}

/// i = delta / (1/n - 2 eps - 1/n^2), clamped to [0, n].
inline std::size_t h_count(std::size_t n, const Rational& delta, const Rational& eps) {
  const Rational nr(static_cast<long>(n));
  const Rational unit = 1 / nr - 2 * eps - 1 / (nr * nr);
  if (unit <= 0) throw Error(ErrorCode::kInvalidArgument, "eps too large: 1/n - 2 eps - 1/n^2 must be positive");
  const Rational i = delta / unit;
  const mpz_class fl = i.get_num() / i.get_den();
  if (fl >= static_cast<long>(n)) return n;
  return static_cast<std::size_t>(fl.get_ui());
}

inline std::vector<std::size_t> pick_vars(std::size_t n, std::size_t k, std::optional<unsigned long> seed) {
  std::vector<std::size_t> vars(n);
  std::iota(vars.begin(), vars.end(), 1);
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(vars.begin(), vars.end(), rng);
  }
  vars.resize(k);
  std::sort(vars.begin(), vars.end());
  return vars;
}

inline std::size_t floor_ratio(const Rational& a, const Rational& b) {
  const Rational q = a / b;
  const mpz_class fl = q.get_num() / q.get_den();
  return static_cast<std::size_t>(fl.get_ui());
}

}  // namespace detail

/// Symmetric game on L, V, C.
inline ReductionGame gen_sv(const CnfFormula& f, std::optional<Rational> eps = std::nullopt) {
  ReductionParams p = make_params("sv", detail::resolve_eps(f, eps));
  std::vector<Role> roles;
  for (std::size_t v = 1; v <= f.num_vars; ++v) detail::push_literals(roles, v, CopyOwner::kShared);
  detail::push_block(roles, RoleKind::kVariable, f.num_vars, CopyOwner::kShared);
  detail::push_block(roles, RoleKind::kClause, f.clauses.size(), CopyOwner::kShared);
  ReductionGame out = detail::build(f, std::move(roles), std::move(p), {});
  if (!(out.game.row_payoff() == out.game.col_payoff().transposed())) {
    throw Error(ErrorCode::kInvalidArgument, "internal: SV game is not symmetric");
  }
  return out;
}

/// L1, L2, V, C and the outside option f with u(f,f) = 2n.
inline ReductionGame gen_g(const CnfFormula& f, std::optional<Rational> eps = std::nullopt) {
  ReductionParams p = make_params("g", detail::resolve_eps(f, eps));
  const Rational n(static_cast<long>(f.num_vars));
  p.c = 1;
  p.k_diag = 2 * n;
  std::vector<Role> roles;
  for (auto owner : {CopyOwner::kRow, CopyOwner::kCol}) {
    for (std::size_t v = 1; v <= f.num_vars; ++v) detail::push_literals(roles, v, owner);
  }
  detail::push_block(roles, RoleKind::kVariable, f.num_vars, CopyOwner::kShared);
  detail::push_block(roles, RoleKind::kClause, f.clauses.size(), CopyOwner::kShared);
  detail::push_block(roles, RoleKind::kF, 1, CopyOwner::kShared);
  return detail::build(f, std::move(roles), std::move(p), {1, 2 * n, 2 * n});
}

/// G with f replaced by a c-cycle whose diagonal pays n^2/eps and whose
/// successor entries pay twice that.
inline ReductionGame gen_c(const CnfFormula& f, std::size_t c, std::optional<Rational> eps = std::nullopt) {
  ReductionParams p = make_params("c", detail::resolve_eps(f, eps));
  const Rational n(static_cast<long>(f.num_vars));
  const Rational cr(static_cast<long>(c));
  if (!(n < cr && cr < 1 / p.eps)) {
    throw Error(ErrorCode::kInvalidArgument, "c must satisfy n < c < 1/eps (got c=" + std::to_string(c) + ")");
  }
  p.c = c;
  p.k_diag = n * n / p.eps;
  std::vector<Role> roles;
  for (auto owner : {CopyOwner::kRow, CopyOwner::kCol}) {
    for (std::size_t v = 1; v <= f.num_vars; ++v) detail::push_literals(roles, v, owner);
  }
  detail::push_block(roles, RoleKind::kVariable, f.num_vars, CopyOwner::kShared);
  detail::push_block(roles, RoleKind::kClause, f.clauses.size(), CopyOwner::kShared);
  detail::push_block(roles, RoleKind::kF, c, CopyOwner::kShared);
  const Rational k = p.k_diag;
  return detail::build(f, std::move(roles), std::move(p), {c, k, 2 * k});
}

/// Large-delta far game: only some variables' literals are duplicated.
/// Without a seed the first variables are chosen; with one the choice is a
/// seeded shuffle.
inline ReductionGame gen_h(const CnfFormula& f, const Rational& delta, std::optional<Rational> eps = std::nullopt,
                           std::optional<unsigned long> seed = std::nullopt) {
  const Rational e = detail::resolve_eps(f, eps);
  const std::size_t n = f.num_vars;
  if (!(delta > far_split(n) && delta <= 1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "H needs 1/n - 1/n^2 - 1/n^3 < delta <= 1 (bound " + to_string(far_split(n)) + ")");
  }
  const std::size_t k = detail::h_count(n, delta, e);
  if (k == 0) {
    ReductionGame out = gen_sv(f, e);
    out.warnings.push_back("no literal duplicated for this delta; emitted the SV game");
    return out;
  }
  ReductionParams p = make_params("h", e, delta);
  p.c = 1;
  p.i = k;
  p.duplicated_vars = detail::pick_vars(n, k, seed);
  const Rational nr(static_cast<long>(n));
  p.k_diag = 2 * nr;
  std::vector<Role> roles;
  detail::h_literals(roles, n, p.duplicated_vars);
  detail::push_block(roles, RoleKind::kVariable, n, CopyOwner::kShared);
  detail::push_block(roles, RoleKind::kClause, f.clauses.size(), CopyOwner::kShared);
  detail::push_block(roles, RoleKind::kF, 1, CopyOwner::kShared);
  return detail::build(f, std::move(roles), std::move(p), {1, 2 * nr, 2 * nr});
}

/// Small-delta far game: the first variable's literals get d copies each,
/// one of which is split into row and column copies.
inline ReductionGame gen_d(const CnfFormula& f, const Rational& delta, std::optional<Rational> eps = std::nullopt) {
  const Rational e = detail::resolve_eps(f, eps);
  const std::size_t n = f.num_vars;
  const Rational split = far_split(n);
  if (!(delta > 0 && delta <= split)) {
    throw Error(ErrorCode::kInvalidArgument,
                "D needs 0 < delta <= 1/n - 1/n^2 - 1/n^3 (bound " + to_string(split) + ")");
  }
  ReductionParams p = make_params("d", e, delta);
  p.c = 1;
  p.i = 1;
  p.d = detail::floor_ratio(split, delta);
  if (p.d < 1) throw Error(ErrorCode::kInvalidArgument, "d < 1");
  const Rational nr(static_cast<long>(n));
  p.k_diag = 2 * nr;
  p.duplicated_vars = {1};
  std::vector<Role> roles;
  detail::d_literals(roles, n, p.d, p.i);
  detail::push_block(roles, RoleKind::kVariable, n, CopyOwner::kShared);
  detail::push_block(roles, RoleKind::kClause, f.clauses.size(), CopyOwner::kShared);
  detail::push_block(roles, RoleKind::kF, 1, CopyOwner::kShared);
  return detail::build(f, std::move(roles), std::move(p), {1, 2 * nr, 2 * nr});
}

/// Restricted far game: D-style (or H-style for large delta) literals with
/// variables, clauses and a (ceil(d/delta)+1)-cycle all split between players.
inline ReductionGame gen_r(const CnfFormula& f, const Rational& delta, std::optional<Rational> eps = std::nullopt,
                           std::optional<unsigned long> seed = std::nullopt) {
  const Rational e = detail::resolve_eps(f, eps);
  const std::size_t n = f.num_vars;
  if (!(delta > 0 && delta <= 1)) throw Error(ErrorCode::kInvalidArgument, "R needs 0 < delta <= 1");
  ReductionParams p = make_params("r", e, delta);
  std::vector<Role> roles;
  if (delta <= far_split(n)) {
    p.i = 1;
    p.d = detail::floor_ratio(far_split(n), delta);
    p.duplicated_vars = {1};
    detail::d_literals(roles, n, p.d, p.i);
  } else {
    p.d = 1;
    p.i = detail::h_count(n, delta, e);
    p.duplicated_vars = detail::pick_vars(n, p.i, seed);
    detail::h_literals(roles, n, p.duplicated_vars);
  }
  const Rational nr(static_cast<long>(n));
  const Rational dr(static_cast<long>(p.d));
  const Rational q = dr / delta;
  const mpz_class ceil_q = (q.get_num() + q.get_den() - 1) / q.get_den();
  p.c = static_cast<std::size_t>(ceil_q.get_ui()) + 1;
  p.k_diag = dr * nr * nr / (delta * e);
  for (auto owner : {CopyOwner::kRow, CopyOwner::kCol}) detail::push_block(roles, RoleKind::kVariable, n, owner);
  for (auto owner : {CopyOwner::kRow, CopyOwner::kCol}) {
    detail::push_block(roles, RoleKind::kClause, f.clauses.size(), owner);
  }
  for (auto owner : {CopyOwner::kRow, CopyOwner::kCol}) detail::push_block(roles, RoleKind::kF, p.c, owner);
  const std::size_t c = p.c;
  const Rational k = p.k_diag;
  ReductionGame out = detail::build(f, std::move(roles), std::move(p), {c, k, 2 * k});
  if (out.params.i == 0) out.warnings.push_back("no literal duplicated for this delta");
  return out;
}

// ---------------------------------------------------------------------------
// Assignments and profiles
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::size_t> chosen_literal_strategies(const std::vector<Role>& roles,
                                                          const std::vector<bool>& assignment, Player player,
                                                          std::size_t var) {
  const int lit = assignment[var - 1] ? static_cast<int>(var) : -static_cast<int>(var);
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < roles.size(); ++s) {
    const Role& r = roles[s];
    if (r.kind == RoleKind::kLiteral && r.index == lit && associated_with(r.owner, player)) out.push_back(s);
  }
  return out;
}

inline MixedStrategy assignment_strategy(const std::vector<Role>& roles, std::size_t n,
                                         const std::vector<bool>& assignment, Player player) {
  Vector v(roles.size(), Rational(0));
  const Rational nr(static_cast<long>(n));
  for (std::size_t var = 1; var <= n; ++var) {
    const auto strategies = chosen_literal_strategies(roles, assignment, player, var);
    if (strategies.empty()) throw Error(ErrorCode::kInvalidArgument, "no playable copy for variable " + std::to_string(var));
    const Rational share = 1 / (nr * static_cast<long>(strategies.size()));
    for (auto s : strategies) v[s] = share;
  }
  return MixedStrategy(std::move(v));
}

}  // namespace detail

/// 1/n per variable on the chosen literal, spread evenly over the copies
/// each player may use.
inline Profile assignment_to_profile(const ReductionGame& rg, const std::vector<bool>& assignment) {
  const std::size_t n = rg.formula.num_vars;
  if (assignment.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "assignment has " + std::to_string(assignment.size()) + " values for " + std::to_string(n) + " variables");
  }
  return Profile{detail::assignment_strategy(rg.roles, n, assignment, Player::kRow),
                 detail::assignment_strategy(rg.roles, n, assignment, Player::kCol)};
}

/// Variable v is true iff both players together put at least as much mass on
/// copies of x_v as on copies of -x_v.
inline std::vector<bool> profile_to_assignment(const ReductionGame& rg, const Profile& profile) {
  require_dimension(rg.game, profile);
  const std::size_t n = rg.formula.num_vars;
  Vector pos(n, Rational(0)), neg(n, Rational(0));
  for (std::size_t s = 0; s < rg.roles.size(); ++s) {
    const Role& r = rg.roles[s];
    if (r.kind != RoleKind::kLiteral) continue;
    const std::size_t v = static_cast<std::size_t>(std::abs(r.index)) - 1;
    (r.index > 0 ? pos : neg)[v] += profile.x[s] + profile.y[s];
  }
  std::vector<bool> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = pos[v] >= neg[v];
  return out;
}

/// Support pairs shaped like an assignment: each player supports exactly the
/// copies it may use of one literal per variable, the same assignment for both.
inline SupportRestriction assignment_restriction(const ReductionGame& rg) {
  const std::size_t n = rg.formula.num_vars;
  if (n > 20) throw Error(ErrorCode::kPrecondition, "assignment filter limited to 20 variables");
  std::vector<SupportSet> rows, cols;
  auto index_r = std::make_shared<std::map<SupportSet, unsigned long>>();
  auto index_c = std::make_shared<std::map<SupportSet, unsigned long>>();
  for (unsigned long bits = 0; bits < (1UL << n); ++bits) {
    const auto a = assignment_from_bits(n, bits);
    for (Player p : {Player::kRow, Player::kCol}) {
      SupportSet s = support(detail::assignment_strategy(rg.roles, n, a, p));
      (p == Player::kRow ? *index_r : *index_c)[s] = bits;
      (p == Player::kRow ? rows : cols).push_back(std::move(s));
    }
  }
  SupportRestriction r;
  r.name = "assignment";
  r.row_candidates = std::move(rows);
  r.col_candidates = std::move(cols);
  r.pair_predicate = [index_r, index_c](const SupportSet& i, const SupportSet& j) {
    return index_r->at(i) == index_c->at(j);
  };
  return r;
}

// ---------------------------------------------------------------------------
// Rebuilding a reduction game from its metadata
// ---------------------------------------------------------------------------

inline ReductionGame reduction_from_game(const BimatrixGame& game) {
  const nlohmann::json& meta = game.metadata();
  if (!meta.is_object() || !meta.contains("roles") || !meta.contains("formula")) {
    throw Error(ErrorCode::kPrecondition, "game carries no reduction roles in its metadata");
  }
  try {
    std::vector<Role> roles;
    for (const auto& j : meta.at("roles")) {
      roles.push_back({parse_role_kind(j.at("kind").get<std::string>()), j.at("index").get<int>(),
                       parse_copy_owner(j.at("owner").get<std::string>()), j.value("copy", std::size_t{0})});
    }
    if (roles.size() != game.size()) throw Error(ErrorCode::kParse, "roles do not cover every strategy");
    CnfFormula f;
    f.num_vars = meta.at("formula").at("num_vars").get<std::size_t>();
    f.clauses = meta.at("formula").at("clauses").get<std::vector<Clause>>();
    validate(f);
    ReductionParams p;
    if (meta.contains("params")) {
      const auto& jp = meta.at("params");
      p.kind = jp.value("kind", std::string{});
      if (jp.contains("eps")) p.eps = parse_rational(jp.at("eps").get<std::string>());
      if (jp.contains("delta")) p.delta = parse_rational(jp.at("delta").get<std::string>());
      p.c = jp.value("c", std::size_t{0});
      p.d = jp.value("d", std::size_t{1});
      p.i = jp.value("i", std::size_t{0});
      if (jp.contains("K")) p.k_diag = parse_rational(jp.at("K").get<std::string>());
      p.duplicated_vars = jp.value("duplicated_vars", std::vector<std::size_t>{});
    }
    return ReductionGame{game, std::move(roles), std::move(p), std::move(f), {}};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad reduction metadata: ") + e.what());
  }
}

}  // namespace cnash
