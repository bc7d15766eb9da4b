#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cnash/cnf.hpp"
#include "cnash/construct.hpp"
#include "cnash/error.hpp"
#include "cnash/json_io.hpp"
#include "cnash/reduce.hpp"
#include "cnash/solve.hpp"
#include "cnash/transform.hpp"
#include "cnash/verify.hpp"

namespace cnash::cli {

using nlohmann::json;

enum ExitCode { kFound = 0, kNotFound = 1, kFailure = 2 };

namespace detail {

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool stdin_used = false;

  std::string read(const std::string& path) {
    if (path == "-") {
      if (stdin_used) throw Error(ErrorCode::kUsage, "standard input can only be read once");
      stdin_used = true;
      return std::string(std::istreambuf_iterator<char>(in), {});
    }
    std::ifstream f(path);
    if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(f), {});
  }

  void write(const std::string& path, const json& j) {
    const std::string text = j.dump(2) + "\n";
    if (path.empty() || path == "-") {
      out << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
    f << text;
  }

  BimatrixGame game(const std::string& path) { return io::game_from_json(io::parse_json_text(read(path), "game " + path)); }
  Profile profile(const std::string& path) {
    return io::profile_from_json(io::parse_json_text(read(path), "profile " + path));
  }
};

inline Rational rational_flag(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::kUsage, std::string(flag) + ": " + e.what());
  }
}

inline SupportSet parse_index_list(const std::string& text, std::size_t n) {
  SupportSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (item.empty() || pos != item.size()) throw Error(ErrorCode::kUsage, "--subset: bad index '" + item + "'");
    if (v >= n) throw Error(ErrorCode::kInvalidArgument, "--subset: index " + item + " out of range");
    out.push_back(v);
  }
  return out;
}

struct SolveOpts {
  std::string game;
  std::string constraint;
  std::string notion = "nash";
  std::optional<std::size_t> max_support;
  std::string filter;
  std::string output;
};

struct VerifyOpts {
  std::string game;
  std::string profile;
  std::string eps;
  std::string constraint;
  std::string notion = "nash";
  std::string output;
};

struct ConstructOpts {
  std::string game;
  std::string far;
  std::string ne;
  std::string greedy;
  std::size_t anchor = 0;
  std::string semi;
  std::string output;
};

struct TransformOpts {
  std::string game;
  std::string diag;
  bool duplicate = false;
  std::string subset;
  std::string sigma;
  bool scale = false;
  std::string output;
};

struct ReduceOpts {
  std::string cnf;
  std::string kind;
  std::string delta;
  std::string eps;
  std::optional<std::size_t> c;
  std::optional<unsigned long> seed;
  std::string output;
};

struct DistanceOpts {
  std::string profile;
  std::string output;
};

inline int do_solve(const SolveOpts& o, Io& io) {
  const BimatrixGame game = io.game(o.game);
  SearchBounds bounds;
  bounds.max_support = o.max_support;
  if (o.filter == "assignment") {
    bounds.restriction = assignment_restriction(reduction_from_game(game));
  } else if (!o.filter.empty()) {
    throw Error(ErrorCode::kUsage, "unknown support filter '" + o.filter + "'");
  }
  EquilibriumSet result;
  if (o.notion == "nash") {
    result = o.constraint.empty() ? enumerate_nash(game, bounds)
                                  : filter_nash_by_constraint(game, ConstraintSpec::parse(o.constraint), bounds);
  } else if (o.notion == "constrained") {
    if (!o.constraint.empty() && o.constraint != "disjoint") {
      throw Error(ErrorCode::kUsage, "constrained enumeration is available for the disjoint constraint only");
    }
    result = enumerate_constrained_disjoint(game, bounds);
  } else {
    throw Error(ErrorCode::kUsage, "unknown notion '" + o.notion + "'");
  }
  io.write(o.output, io::equilibria_to_json(result));
  return result.empty() ? kNotFound : kFound;
}

inline int do_verify(const VerifyOpts& o, Io& io) {
  const BimatrixGame game = io.game(o.game);
  const Profile profile = io.profile(o.profile);
  require_dimension(game, profile);
  const Rational eps = rational_flag(o.eps, "--eps");
  if (eps < 0) throw Error(ErrorCode::kInvalidArgument, "--eps must be nonnegative");
  json report;
  bool pass = true;
  std::optional<ConstraintSpec> spec;
  if (!o.constraint.empty()) spec = ConstraintSpec::parse(o.constraint);
  if (spec) {
    const bool ok = check_constraint(profile, *spec, game.size());
    report["constraint"] = spec->to_string();
    report["satisfied"] = ok;
    pass = pass && ok;
  }
  if (o.notion == "nash") {
    const RegretReport r = regret_report(game, profile);
    report["regret"] = io::regret_to_json(r);
    pass = pass && r.max() <= eps;
  } else if (o.notion == "constrained") {
    if (!spec || (spec->kind() != ConstraintKind::kDisjoint && spec->kind() != ConstraintKind::kFar)) {
      throw Error(ErrorCode::kUsage, "--notion constrained needs --constraint disjoint or far:<r>");
    }
    json cr;
    for (Player p : {Player::kRow, Player::kCol}) {
      Rational value;
      if (spec->kind() == ConstraintKind::kDisjoint) {
        const ConstrainedRegret c = constrained_regret_disjoint(game, profile, p);
        value = c.value;
        cr[player_name(p)] = {{"regret", to_string(c.value)}, {"empty_feasible_set", c.empty_feasible_set}};
        if (c.witness) cr[player_name(p)]["witness"] = *c.witness;
      } else {
        const FarRegret f = constrained_regret_far(game, profile, spec->param(), p);
        value = f.value;
        cr[player_name(p)] = {{"regret", to_string(f.value)}, {"witness", io::rational_array(f.witness.probs())}};
      }
      pass = pass && value <= eps;
    }
    report["constrained_regret"] = std::move(cr);
  } else {
    throw Error(ErrorCode::kUsage, "unknown notion '" + o.notion + "'");
  }
  report["eps"] = to_string(eps);
  report["pass"] = pass;
  io.write(o.output, report);
  return pass ? kFound : kNotFound;
}

inline int do_construct(const ConstructOpts& o, Io& io) {
  const int modes = !o.far.empty() + !o.greedy.empty() + !o.semi.empty();
  if (modes != 1) throw Error(ErrorCode::kUsage, "choose exactly one of --far, --greedy-disjoint, --semi-to-far");
  const BimatrixGame game = io.game(o.game);
  const CertifiedProfile cp = [&] {
    if (!o.greedy.empty()) {
      return greedy_constrained_disjoint(game, rational_flag(o.greedy, "--greedy-disjoint"), o.anchor);
    }
    if (o.ne.empty()) throw Error(ErrorCode::kUsage, "--ne <profile> is required");
    const Profile ne = io.profile(o.ne);
    if (!o.far.empty()) return make_far(game, ne, rational_flag(o.far, "--far"));
    return semi_to_constrained_far(game, rational_flag(o.semi, "--semi-to-far"), ne);
  }();
  json j = io::certified_to_json(cp);
  j["measured_regret"] = to_string(measured_regret(game, cp));
  io.write(o.output, j);
  return kFound;
}

inline int do_transform(const TransformOpts& o, Io& io) {
  const int modes = !o.diag.empty() + o.duplicate + o.scale;
  if (modes != 1) throw Error(ErrorCode::kUsage, "choose exactly one of --diag-modify, --duplicate, --scale");
  const BimatrixGame game = io.game(o.game);
  if (!o.diag.empty()) {
    io.write(o.output, io::game_to_json(diagonal_modify(game, rational_flag(o.diag, "--diag-modify"))));
  } else if (o.duplicate) {
    SupportSet subset;
    if (o.subset.empty()) {
      for (std::size_t i = 0; i < game.size(); ++i) subset.push_back(i);
    } else {
      subset = parse_index_list(o.subset, game.size());
    }
    std::optional<Rational> sigma;
    if (!o.sigma.empty()) sigma = rational_flag(o.sigma, "--sigma");
    DuplicatedGame d = duplicate_strategies(game, subset, sigma);
    json meta = d.game.metadata();
    meta["label_map"] = io::label_map_to_json(d.map);
    io.write(o.output, io::game_to_json(d.game.with_metadata(std::move(meta))));
  } else {
    io.write(o.output, io::game_to_json(scale_payoffs(game).game));
  }
  return kFound;
}

inline int do_reduce(const ReduceOpts& o, Io& io) {
  const CnfFormula f = parse_dimacs(io.read(o.cnf));
  std::optional<Rational> eps;
  if (!o.eps.empty()) eps = rational_flag(o.eps, "--eps");
  auto need_delta = [&] {
    if (o.delta.empty()) throw Error(ErrorCode::kUsage, "--delta is required for --game " + o.kind);
    return rational_flag(o.delta, "--delta");
  };
  std::optional<ReductionGame> rg;
  if (o.kind == "sv") {
    rg = gen_sv(f, eps);
  } else if (o.kind == "g") {
    rg = gen_g(f, eps);
  } else if (o.kind == "c") {
    if (!o.c) throw Error(ErrorCode::kUsage, "--c is required for --game c");
    rg = gen_c(f, *o.c, eps);
  } else if (o.kind == "h") {
    rg = gen_h(f, need_delta(), eps, o.seed);
  } else if (o.kind == "d") {
    rg = gen_d(f, need_delta(), eps);
  } else if (o.kind == "r") {
    rg = gen_r(f, need_delta(), eps, o.seed);
  } else {
    throw Error(ErrorCode::kUsage, "unknown game kind '" + o.kind + "'");
  }
  for (const auto& w : rg->warnings) io.err << json{{"warning", w}}.dump() << "\n";
  io.write(o.output, io::game_to_json(rg->game));
  return kFound;
}

inline int do_distance(const DistanceOpts& o, Io& io) {
  const Profile p = io.profile(o.profile);
  const Rational d = l1_distance(p.x, p.y);
  io.write(o.output, json{{"l1", to_string(d)}, {"total_variation", to_string(d / 2)}});
  return kFound;
}

inline void report_error(std::ostream& err, const std::string& code, const std::string& message) {
  err << json{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact equilibria for bimatrix games with strategic constraints", "cnash"};
  app.require_subcommand(1);
  detail::Io io{in, out, err};

  detail::SolveOpts so;
  auto* solve = app.add_subcommand("solve", "enumerate equilibria by support enumeration");
  solve->add_option("game", so.game, "game JSON or -")->required();
  solve->add_option("--constraint", so.constraint, "disjoint|partition|far:<r>|major:<r>|semi:<r>");
  solve->add_option("--notion", so.notion, "nash|constrained");
  solve->add_option("--max-support", so.max_support, "largest support size to try");
  solve->add_option("--support-filter", so.filter, "assignment");
  solve->add_option("-o,--output", so.output, "output path (default stdout)");

  detail::VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "check a profile against an approximation level");
  verify->add_option("game", vo.game)->required();
  verify->add_option("profile", vo.profile)->required();
  verify->add_option("--eps", vo.eps)->required();
  verify->add_option("--constraint", vo.constraint);
  verify->add_option("--notion", vo.notion);
  verify->add_option("-o,--output", vo.output);

  detail::ConstructOpts co;
  auto* construct = app.add_subcommand("construct", "build a certified approximate equilibrium");
  construct->add_option("game", co.game)->required();
  construct->add_option("--far", co.far, "delta");
  construct->add_option("--ne", co.ne, "exact equilibrium profile");
  construct->add_option("--greedy-disjoint", co.greedy, "eps");
  construct->add_option("--anchor", co.anchor, "column anchor strategy");
  construct->add_option("--semi-to-far", co.semi, "M");
  construct->add_option("-o,--output", co.output);

  detail::TransformOpts to;
  auto* transform = app.add_subcommand("transform", "derive a game");
  transform->add_option("game", to.game)->required();
  transform->add_option("--diag-modify", to.diag, "M");
  transform->add_flag("--duplicate", to.duplicate);
  transform->add_option("--subset", to.subset, "i,j,...");
  transform->add_option("--sigma", to.sigma);
  transform->add_flag("--scale", to.scale);
  transform->add_option("-o,--output", to.output);

  detail::ReduceOpts ro;
  auto* reduce = app.add_subcommand("reduce", "compile a CNF formula into a game");
  reduce->add_option("cnf", ro.cnf, "DIMACS file or -")->required();
  reduce->add_option("--game", ro.kind, "sv|g|c|h|d|r")->required();
  reduce->add_option("--delta", ro.delta);
  reduce->add_option("--eps", ro.eps);
  reduce->add_option("--c", ro.c);
  reduce->add_option("--seed", ro.seed);
  reduce->add_option("-o,--output", ro.output);

  detail::DistanceOpts dop;
  auto* distance = app.add_subcommand("distance", "L1 distance between the two strategies of a profile");
  distance->add_option("profile", dop.profile)->required();
  distance->add_option("-o,--output", dop.output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kFound;
  } catch (const CLI::ParseError& e) {
    detail::report_error(err, error_code_name(ErrorCode::kUsage), e.what());
    return kFailure;
  }

  try {
    if (*solve) return detail::do_solve(so, io);
    if (*verify) return detail::do_verify(vo, io);
    if (*construct) return detail::do_construct(co, io);
    if (*transform) return detail::do_transform(to, io);
    if (*reduce) return detail::do_reduce(ro, io);
    if (*distance) return detail::do_distance(dop, io);
  } catch (const Error& e) {
    detail::report_error(err, e.code_name(), e.what());
    return kFailure;
  } catch (const std::exception& e) {
    detail::report_error(err, "internal", e.what());
    return kFailure;
  }
  return kFailure;
}

}  // namespace cnash::cli
