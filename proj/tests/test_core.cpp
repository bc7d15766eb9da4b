#include <gtest/gtest.h>

#include "cnash/error.hpp"
#include "cnash/game.hpp"
#include "cnash/linear.hpp"
#include "cnash/rational.hpp"
#include "support.hpp"

using namespace cnash;
using cnash::test::Q;
using cnash::test::S;
using cnash::test::V;

TEST(Rational, ParsesFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
  EXPECT_EQ(to_string(parse_rational("2/4")), "1/2");
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_THROW(parse_rational("6/-4"), Error);
}

TEST(Rational, RejectsDecimalsAndJunk) {
  for (const char* bad : {"0.5", "1e3", "", "1/0", "a/b", "1/2/3", " 1"}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
}

TEST(Game, RejectsNonSquareAndDuplicateLabels) {
  EXPECT_THROW(BimatrixGame({"a", "b"}, Matrix(2, 3), Matrix(2, 2)), Error);
  EXPECT_THROW(BimatrixGame({"a", "a"}, Matrix(2, 2), Matrix(2, 2)), Error);
  EXPECT_THROW(BimatrixGame({}, Matrix(0, 0), Matrix(0, 0)), Error);
}

TEST(Game, MixedStrategyMustNormalize) {
  EXPECT_THROW(MixedStrategy(V({"1/2", "1/3"})), Error);
  EXPECT_THROW(MixedStrategy(V({"3/2", "-1/2"})), Error);
  EXPECT_NO_THROW(MixedStrategy(V({"1/2", "1/2"})));
  EXPECT_EQ(MixedStrategy::uniform(3), S({"1/3", "1/3", "1/3"}));
  EXPECT_EQ(MixedStrategy::uniform_on(4, {1, 3}), S({"0", "1/2", "0", "1/2"}));
}

TEST(Game, ExpectedPayoffAndDistance) {
  auto g = test::load_game("bos.json");
  Profile p{S({"2/3", "1/3"}), S({"1/3", "2/3"})};
  EXPECT_EQ(expected_payoff(g, p, Player::kRow), Q("1/3"));
  EXPECT_EQ(expected_payoff(g, p, Player::kCol), Q("1/3"));
  EXPECT_EQ(l1_distance(p.x, p.y), Q("2/3"));
  EXPECT_EQ(pure_payoffs(g, Player::kCol, p.x), V({"1/3", "1/3"}));
}

TEST(Game, ScalePayoffsIntoUnitInterval) {
  auto rps = test::load_game("rps.json");
  auto scaled = scale_payoffs(rps);
  EXPECT_EQ(scaled.game.min_payoff(), 0);
  EXPECT_EQ(scaled.game.max_payoff(), 1);
  EXPECT_EQ(scaled.game.row_payoff()(0, 1), 0);
  EXPECT_EQ(scaled.game.row_payoff()(0, 0), Q("1/2"));
  EXPECT_EQ(scaled.map.invert(Q("1/2")), 0);
  EXPECT_EQ(scaled.map.invert(Q("1/100"), true), Q("1/50"));
  EXPECT_TRUE(scaled.game.metadata().contains("scaling"));
}

TEST(Game, ScaleConstantGame) {
  auto g = test::game_of({V({"3", "3"}), V({"3", "3"})}, {V({"3", "3"}), V({"3", "3"})});
  auto scaled = scale_payoffs(g);
  EXPECT_TRUE(scaled.map.constant_game);
  EXPECT_EQ(scaled.game.max_payoff(), 0);
  EXPECT_THROW(scaled.map.invert(0), Error);
}

TEST(Linear, UniqueSolution) {
  Matrix a = Matrix::from_rows({V({"2", "1"}), V({"1", "3"})});
  auto s = linear::solve_system(a, V({"3", "5"}));
  ASSERT_EQ(s.kind, linear::SystemKind::kUnique);
  EXPECT_EQ(s.values, V({"4/5", "7/5"}));
}

TEST(Linear, InconsistentAndUnderdetermined) {
  Matrix a = Matrix::from_rows({V({"1", "1"}), V({"2", "2"})});
  EXPECT_EQ(linear::solve_system(a, V({"1", "3"})).kind, linear::SystemKind::kInconsistent);
  auto s = linear::solve_system(a, V({"1", "2"}));
  EXPECT_EQ(s.kind, linear::SystemKind::kUnderdetermined);
  EXPECT_EQ(s.rank, 1u);
  EXPECT_EQ(s.values[0] + s.values[1], 1);
}

TEST(Linear, SimplexOptimum) {
  // max x + y  s.t.  x + 2y <= 4, 3x + y <= 6
  Matrix ub = Matrix::from_rows({V({"1", "2"}), V({"3", "1"})});
  auto r = linear::maximize(V({"1", "1"}), Matrix(0, 2), {}, ub, V({"4", "6"}));
  ASSERT_EQ(r.status, linear::LpStatus::kOptimal);
  EXPECT_EQ(r.objective, Q("14/5"));
  EXPECT_EQ(r.values, V({"8/5", "6/5"}));
}

TEST(Linear, SimplexInfeasibleAndUnbounded) {
  Matrix eq = Matrix::from_rows({V({"1", "1"})});
  Matrix ub = Matrix::from_rows({V({"1", "1"})});
  EXPECT_EQ(linear::maximize(V({"1", "0"}), eq, V({"2"}), ub, V({"1"})).status, linear::LpStatus::kInfeasible);
  EXPECT_EQ(linear::maximize(V({"1", "0"}), Matrix(0, 2), {}, Matrix::from_rows({V({"-1", "1"})}), V({"1"})).status,
            linear::LpStatus::kUnbounded);
}

TEST(Linear, SimplexEqualityAndDegeneracy) {
  // max t s.t. a + b = 1, t <= a, t <= b
  Matrix eq = Matrix::from_rows({V({"1", "1", "0"})});
  Matrix ub = Matrix::from_rows({V({"-1", "0", "1"}), V({"0", "-1", "1"})});
  auto r = linear::maximize(V({"0", "0", "1"}), eq, V({"1"}), ub, V({"0", "0"}));
  ASSERT_EQ(r.status, linear::LpStatus::kOptimal);
  EXPECT_EQ(r.objective, Q("1/2"));
}
