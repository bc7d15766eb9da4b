#include <gtest/gtest.h>

#include "cnash/construct.hpp"
#include "cnash/solve.hpp"
#include "cnash/transform.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cnash;
using cnash::test::Q;
using cnash::test::S;
using cnash::test::V;

TEST(Redistribute, EmptyMovesKeepStrategy) {
  auto r = redistribute(S({"1/2", "1/2"}), {}, 0, 1);
  EXPECT_EQ(r.strategy, S({"1/2", "1/2"}));
  EXPECT_EQ(r.bound, 0);
}

TEST(Redistribute, BoundFormula) {
  std::vector<Move> moves{{Player::kRow, 0, 1, Q("1/20")}, {Player::kRow, 0, 2, Q("1/20")}};
  auto r = redistribute(MixedStrategy::pure(3, 0), moves, -1, 2);
  EXPECT_EQ(r.strategy, S({"9/10", "1/20", "1/20"}));
  EXPECT_EQ(r.bound, 2 * Q("1/10") * 3);
}

TEST(Redistribute, Errors) {
  EXPECT_THROW(redistribute(MixedStrategy::pure(2, 0), {{Player::kRow, 1, 0, Q("1/2")}}, 0, 1), Error);
  EXPECT_THROW(redistribute(MixedStrategy::pure(2, 0), {{Player::kRow, 0, 0, Q("1/2")}}, 0, 1), Error);
  EXPECT_THROW(redistribute(MixedStrategy::pure(2, 0), {{Player::kRow, 0, 5, Q("1/2")}}, 0, 1), Error);
  EXPECT_THROW(redistribute(MixedStrategy::pure(2, 0), {}, 1, 0), Error);
}

TEST(Redistribute, RegretWithinBoundOnRandomGames) {
  test::RandomGames rnd(31);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = rnd.game(3, 50);
    auto ne = enumerate_nash(g).equilibria.front().profile;
    const std::size_t from = support(ne.x).front();
    const Rational mass = ne.x[from] * rnd.unit(8) / 4;
    const std::size_t to = (from + 1 + rnd.index(2)) % 3;
    auto r = redistribute(ne.x, {{Player::kRow, from, to, mass}}, 0, 1);
    Profile p{r.strategy, ne.y};
    EXPECT_LE(oracle::max_regret(g, p), r.bound);
    EXPECT_LE(abs(oracle::payoff(g, p, Player::kRow) - oracle::payoff(g, ne, Player::kRow)), r.bound);
    EXPECT_LE(abs(oracle::payoff(g, p, Player::kCol) - oracle::payoff(g, ne, Player::kCol)), r.bound);
  }
}

TEST(MakeFar, CoordinationExample) {
  auto g = test::game_of({V({"1", "0"}), V({"0", "1"})}, {V({"1", "0"}), V({"0", "1"})});
  Profile ne{MixedStrategy::uniform(2), MixedStrategy::uniform(2)};
  auto cp = make_far(g, ne, Q("1/2"));
  EXPECT_EQ(cp.profile.x, S({"0", "1"}));
  EXPECT_EQ(cp.profile.y, S({"1/2", "1/2"}));
  EXPECT_EQ(l1_distance(cp.profile.x, cp.profile.y), 1);
  EXPECT_EQ(oracle::regret(g, cp.profile, Player::kRow), 0);
  EXPECT_EQ(oracle::regret(g, cp.profile, Player::kCol), Q("1/2"));
  EXPECT_EQ(cp.regret_bound, 2);
  EXPECT_LE(measured_regret(g, cp), cp.regret_bound);
}

TEST(MakeFar, AlreadyFarOrZeroDelta) {
  auto g = test::load_game("bos.json");
  Profile ne{S({"2/3", "1/3"}), S({"1/3", "2/3"})};
  auto cp = make_far(g, ne, Q("1/3"));
  EXPECT_EQ(cp.profile.x, ne.x);
  EXPECT_EQ(cp.regret_bound, 0);
  EXPECT_TRUE(cp.trace.empty());
  Profile pure{MixedStrategy::pure(2, 0), MixedStrategy::pure(2, 0)};
  EXPECT_EQ(make_far(g, pure, 0).profile.x, pure.x);
}

TEST(MakeFar, Preconditions) {
  auto g = test::load_game("bos.json");
  Profile not_ne{MixedStrategy::pure(2, 0), MixedStrategy::pure(2, 1)};
  EXPECT_THROW(make_far(g, not_ne, Q("1/4")), Error);
  EXPECT_THROW(make_far(test::load_game("rps.json"), {MixedStrategy::uniform(3), MixedStrategy::uniform(3)}, Q("1/6")),
               Error);  // payoffs outside [0,1]
  auto single = test::game_of({V({"1/2"})}, {V({"1/2"})});
  EXPECT_THROW(make_far(single, {MixedStrategy::pure(1, 0), MixedStrategy::pure(1, 0)}, Q("1/4")), Error);
}

TEST(MakeFar, RandomGamesDistanceAndBound) {
  test::RandomGames rnd(37);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rnd.index(3);
    auto g = rnd.game(n, 30);
    const Rational delta = 1 / Rational(static_cast<long>(2 * n));
    for (const auto& e : enumerate_nash(g).equilibria) {
      auto cp = make_far(g, e.profile, delta);
      if (l1_distance(e.profile.x, e.profile.y) >= 2 * delta) {
        EXPECT_EQ(cp.profile.x, e.profile.x);
      } else {
        EXPECT_EQ(l1_distance(cp.profile.x, cp.profile.y), 2 * delta);
      }
      EXPECT_LE(oracle::max_regret(g, cp.profile), 4 * delta);
    }
  }
}

TEST(Greedy, RpsAnchorRock) {
  auto g = test::load_game("rps.json");
  auto cp = greedy_constrained_disjoint(g, Q("1/100"), 0);
  EXPECT_EQ(cp.profile.y, MixedStrategy::pure(3, 0));
  EXPECT_EQ(cp.profile.x, S({"0", "99/100", "1/100"}));
  EXPECT_EQ(cp.bound_kind, BoundKind::kConstrainedDisjoint);
  EXPECT_EQ(cp.regret_bound, Q("1/50"));  // eps times the payoff range
  EXPECT_LE(measured_regret(g, cp), cp.regret_bound);
  EXPECT_EQ(constrained_regret_disjoint(g, cp.profile, Player::kCol).value, 0);
  auto unit = scale_payoffs(g).game;
  auto cu = greedy_constrained_disjoint(unit, Q("1/100"), 0);
  EXPECT_EQ(cu.profile.x, cp.profile.x);
  EXPECT_LE(measured_regret(unit, cu), Q("1/100"));
}

TEST(Greedy, TwoStrategiesExact) {
  auto g = test::load_game("table1.json");
  auto cp = greedy_constrained_disjoint(g, Q("1/10"));
  EXPECT_EQ(cp.profile.x, MixedStrategy::pure(2, 1));
  EXPECT_EQ(cp.profile.y, MixedStrategy::pure(2, 0));
  EXPECT_EQ(measured_regret(g, cp), 0);
}

TEST(Greedy, RandomFiveByFive) {
  test::RandomGames rnd(41);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = rnd.game(5);
    const Rational eps = rnd.unit(100) / 2 + Rational(1, 1000);
    auto cp = greedy_constrained_disjoint(g, eps, rnd.index(5));
    EXPECT_TRUE(supports_disjoint(cp.profile.x, cp.profile.y));
    EXPECT_EQ(support(cp.profile.y).size(), 1u);
    EXPECT_LE(measured_regret(g, cp), cp.regret_bound);
    EXPECT_LE(cp.regret_bound, eps);
  }
}

TEST(Greedy, Errors) {
  auto g = test::load_game("rps.json");
  EXPECT_THROW(greedy_constrained_disjoint(g, 0), Error);
  EXPECT_THROW(greedy_constrained_disjoint(g, Q("1/10"), 3), Error);
  EXPECT_THROW(greedy_constrained_disjoint(test::game_of({V({"1"})}, {V({"1"})}), Q("1/10")), Error);
}

TEST(SemiToFar, BoundInstantiation) {
  // pure disjoint equilibrium of a unit-range game stays put
  auto g = test::game_of({V({"0", "1", "0"}), V({"1", "0", "0"}), V({"0", "0", "0"})},
                         {V({"0", "1", "0"}), V({"1", "0", "0"}), V({"0", "0", "0"})});
  Profile p{MixedStrategy::pure(3, 0), MixedStrategy::pure(3, 1)};
  auto cp = semi_to_constrained_far(g, 30, p);
  EXPECT_EQ(cp.regret_bound, Q("3/5"));
  EXPECT_EQ(cp.delta, Q("9/10"));
  EXPECT_EQ(cp.profile.x, p.x);
  EXPECT_LE(measured_regret(g, cp), cp.regret_bound);
}

TEST(SemiToFar, Preconditions) {
  auto g = test::load_game("table1.json");
  Profile p{MixedStrategy::pure(2, 0), MixedStrategy::pure(2, 0)};
  EXPECT_THROW(semi_to_constrained_far(g, 1, p), Error);       // M < n
  EXPECT_THROW(semi_to_constrained_far(g, 10, p), Error);      // not semi-disjoint
  Profile q{S({"19/20", "1/20"}), MixedStrategy::pure(2, 1)};
  EXPECT_THROW(semi_to_constrained_far(g, 10, q), Error);      // not an NE of the modified game
}

TEST(SemiToFar, DisjointEquilibriaMeetBound) {
  test::RandomGames rnd(43);
  const Rational m = 100;
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto g = rnd.game(3);
    for (const auto& e : enumerate_nash(diagonal_modify(g, m)).equilibria) {
      if (!supports_disjoint(e.profile.x, e.profile.y)) continue;
      auto cp = semi_to_constrained_far(g, m, e.profile);
      EXPECT_EQ(cp.delta, Q("97/100"));
      EXPECT_LE(measured_regret(g, cp), cp.regret_bound);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(SemiToFar, SmallMassesCanBreakBound) {
  // y* keeps 0.0056 on column 0; in D^M that alone deters row 0, after the collapse it does not
  auto g = test::game_of({V({"2/7", "55/86", "31/35"}), V({"131/264", "421/521", "114/355"}),
                          V({"170/409", "75/248", "27/49"})},
                         {V({"13/32", "66/79", "43/198"}), V({"365/467", "83/190", "13/37"}),
                          V({"31/100", "8/47", "563/574"})});
  Profile p{S({"1471932/344339129", "342867197/344339129", "0"}), S({"370392/66299927", "0", "65929535/66299927"})};
  ASSERT_EQ(oracle::max_regret(diagonal_modify(g, 100), p), 0);
  auto cp = semi_to_constrained_far(g, 100, p);
  EXPECT_EQ(cp.profile.x, MixedStrategy::pure(3, 1));
  EXPECT_EQ(cp.profile.y, MixedStrategy::pure(3, 2));
  EXPECT_EQ(constrained_regret_far(g, cp.profile, cp.delta, Player::kRow).value, Q("1403/2485"));
  EXPECT_GT(measured_regret(g, cp), cp.regret_bound);
}
