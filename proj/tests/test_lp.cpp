#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordval/lp.hpp"
#include "ordval/suites.hpp"

using namespace ordval;

namespace {

RVector vec(std::initializer_list<Rational> xs) {
  RVector v(static_cast<int>(xs.size()));
  int i = 0;
  for (const Rational& x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("optimal solution with verified certificates") {
  // max x + y, x + 2y <= 4, 3x + y <= 6  -> x=8/5, y=6/5, objective 14/5.
  LinearProgram lp;
  lp.set_vars(2);
  lp.objective = vec({1, 1});
  lp.add_constraint(vec({1, 2}), Relation::Le, 4);
  lp.add_constraint(vec({3, 1}), Relation::Le, 6);
  LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == Rational(14, 5));
  CHECK(s.x(0) == Rational(8, 5));
  CHECK(s.x(1) == Rational(6, 5));
  CHECK(s.verify(lp));
}

TEST_CASE("infeasible program yields a Farkas certificate") {
  LinearProgram lp;
  lp.set_vars(1);
  lp.objective = vec({1});
  lp.add_constraint(vec({1}), Relation::Ge, 3);
  lp.add_constraint(vec({1}), Relation::Le, 2);
  LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::Infeasible);
  CHECK(s.verify(lp));
}

TEST_CASE("unbounded program yields an improving ray") {
  LinearProgram lp;
  lp.set_vars(2);
  lp.objective = vec({1, 0});
  lp.add_constraint(vec({0, 1}), Relation::Le, 1);
  LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::Unbounded);
  CHECK(s.verify(lp));
}

TEST_CASE("equalities and free variables") {
  // max t with t free, t <= 1 - x, t <= x, x + y = 1: optimum 1/2.
  LinearProgram lp;
  lp.set_vars(3);  // x, y, t
  lp.objective = vec({0, 0, 1});
  lp.free_var[2] = true;
  lp.add_constraint(vec({1, 0, 1}), Relation::Le, 1);
  lp.add_constraint(vec({-1, 0, 1}), Relation::Le, 0);
  lp.add_constraint(vec({1, 1, 0}), Relation::Eq, 1);
  LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == Rational(1, 2));
  CHECK(s.verify(lp));
}

TEST_CASE("matching pennies has value zero") {
  GameMatrix m(2, 2);
  m << 1, -1, -1, 1;
  GameSolution g = matrix_game(m);
  CHECK(g.value == 0);
  CHECK(g.row_strategy[0] == Rational(1, 2));
  CHECK(g.col_strategy[1] == Rational(1, 2));
}

TEST_CASE("dominant strategy game") {
  GameMatrix m(2, 2);
  m << 3, 2, 1, 0;
  GameSolution g = matrix_game(m);
  CHECK(g.value == 2);
  CHECK(g.row_strategy[0] == 1);
}

TEST_CASE("strategy space enumeration order") {
  // B_0 = {0,1}, B_1 = {2}: two strategies, last point fixed.
  StrategySpace s = StrategySpace::build({0, 1}, {Rational(1, 2), Rational(1, 2)},
                                         {mask_single(0) | mask_single(1), mask_single(2)});
  REQUIRE(s.strategy_count() == 2);
  CHECK(s.picked(0, 0) == 0);
  CHECK(s.picked(1, 0) == 1);
  CHECK(s.picked(0, 1) == 2);
  SimpleValuation m = s.pure_mixture(0, 1);
  CHECK(m.weight(0) == Rational(1, 2));
  CHECK(m.weight(2) == Rational(1, 2));
}

TEST_CASE("decomposition of a unanimity capacity under a split valuation") {
  FinitePoset p = FinitePoset::build({"a", "b"}, {});
  SimpleValuation nu;
  nu.set_weight(0, Rational(1, 2));
  nu.set_weight(1, Rational(1, 2));
  Decomposition d =
      decompose_capacity({0}, {1}, {mask_single(0) | mask_single(1)}, nu, p);
  CHECK(stochastic_leq(d.mixture, nu, p).holds);
  CHECK(d.mixture.mass() == 1);
  // Only the even split works here: beta = (1/2, 1/2).
  CHECK(d.beta[0] == Rational(1, 2));
  CHECK(d.beta[1] == Rational(1, 2));
}

TEST_CASE("decomposition rejects undominated capacities") {
  FinitePoset p = FinitePoset::build({"a", "b"}, {});
  SimpleValuation nu;
  nu.set_weight(0, Rational(1, 4));
  CHECK_THROWS_AS(
      decompose_capacity({0}, {1}, {mask_single(0) | mask_single(1)}, nu, p),
      PreconditionError);
}

TEST_CASE("decomposition property suite") {
  SuiteConfig cfg;
  SuiteResult r = suite_decomposition(11, cfg);
  INFO(r.notes);
  CHECK(r.failed == 0);
}

TEST_CASE("minimax property suite") {
  SuiteConfig cfg;
  SuiteResult r = suite_minimax(13, cfg);
  INFO(r.notes);
  CHECK(r.failed == 0);
}
