#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cnash/construct.hpp"
#include "cnash/error.hpp"
#include "cnash/game.hpp"
#include "cnash/solve.hpp"
#include "cnash/transform.hpp"
#include "cnash/verify.hpp"

namespace cnash::io {

using nlohmann::json;

inline json rational_array(const Vector& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

inline Rational rational_from(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(j.dump()));
  throw Error(ErrorCode::kParse, "expected a rational string, got " + j.dump());
}

inline Vector vector_from(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "expected an array of rationals");
  Vector v;
  for (const auto& e : j) v.push_back(rational_from(e));
  return v;
}

inline json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

inline Matrix matrix_from(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "expected a matrix (array of rows)");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from(r));
  return Matrix::from_rows(rows);
}

inline json game_to_json(const BimatrixGame& g) {
  return json{{"labels", g.labels()},
              {"row", matrix_to_json(g.row_payoff())},
              {"col", matrix_to_json(g.col_payoff())},
              {"metadata", g.metadata()}};
}

inline BimatrixGame game_from_json(const json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorCode::kParse, "game must be a JSON object");
    Matrix r = matrix_from(j.at("row"));
    Matrix c = matrix_from(j.at("col"));
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
    } else {
      for (std::size_t i = 0; i < r.rows(); ++i) labels.push_back("s" + std::to_string(i));
    }
    json meta = j.value("metadata", json::object());
    return BimatrixGame(std::move(labels), std::move(r), std::move(c), std::move(meta));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad game JSON: ") + e.what());
  }
}

inline MixedStrategy strategy_from(const json& j) {
  Vector v = vector_from(j);
  try {
    return MixedStrategy(std::move(v));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, std::string("not a probability vector: ") + e.what());
  }
}

inline json profile_to_json(const Profile& p) {
  return json{{"x", rational_array(p.x.probs())}, {"y", rational_array(p.y.probs())}};
}

inline Profile profile_from_json(const json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorCode::kParse, "profile must be a JSON object");
    return Profile{strategy_from(j.at("x")), strategy_from(j.at("y"))};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad profile JSON: ") + e.what());
  }
}

inline json equilibria_to_json(const EquilibriumSet& s) {
  json eqs = json::array();
  for (const auto& e : s.equilibria) {
    json je = profile_to_json(e.profile);
    je["row_support"] = e.row_support;
    je["col_support"] = e.col_support;
    je["degenerate"] = e.degenerate;
    eqs.push_back(std::move(je));
  }
  json out{{"equilibria", std::move(eqs)}, {"exhaustive", s.exhaustive}, {"degenerate", s.degenerate}};
  out["max_support"] = s.max_support ? json(*s.max_support) : json(nullptr);
  out["restriction"] = s.restriction.empty() ? json(nullptr) : json(s.restriction);
  return out;
}

inline json regret_to_json(const RegretReport& r) {
  return json{{"row", {{"regret", to_string(r.row.value)}, {"witness", r.row.witness}}},
              {"col", {{"regret", to_string(r.col.value)}, {"witness", r.col.witness}}},
              {"max", to_string(r.max())}};
}

inline json certified_to_json(const CertifiedProfile& cp) {
  json trace = json::array();
  for (const Move& m : cp.trace) {
    trace.push_back({{"player", player_name(m.player)}, {"from", m.from}, {"to", m.to}, {"mass", to_string(m.mass)}});
  }
  json out = profile_to_json(cp.profile);
  out["regret_bound"] = to_string(cp.regret_bound);
  out["bound_kind"] = bound_kind_name(cp.bound_kind);
  if (cp.bound_kind == BoundKind::kConstrainedFar || cp.bound_kind == BoundKind::kNash) {
    out["delta"] = to_string(cp.delta);
  }
  out["trace"] = std::move(trace);
  return out;
}

inline json label_map_to_json(const LabelMap& m) {
  json fwd = json::array();
  for (const auto& e : m.forward) fwd.push_back({{"source", e.source}, {"owner", copy_owner_name(e.owner)}});
  return json{{"forward", std::move(fwd)},
              {"source_size", m.source_size},
              {"punishment", to_string(m.punishment)},
              {"source_min", to_string(m.source_min)},
              {"source_max", to_string(m.source_max)}};
}

inline LabelMap label_map_from_json(const json& j) {
  try {
    LabelMap m;
    for (const auto& e : j.at("forward")) {
      m.forward.push_back({e.at("source").get<std::size_t>(), parse_copy_owner(e.at("owner").get<std::string>())});
    }
    m.source_size = j.at("source_size").get<std::size_t>();
    m.punishment = rational_from(j.at("punishment"));
    m.source_min = rational_from(j.at("source_min"));
    m.source_max = rational_from(j.at("source_max"));
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad label map JSON: ") + e.what());
  }
}

inline json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, what + ": " + e.what());
  }
}

}  // namespace cnash::io
