#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordval/alpha_nat.hpp"
#include "ordval/errors.hpp"
#include "ordval/suites.hpp"

using namespace ordval;

TEST_CASE("open algebra over finite and cofinite kinds") {
  AlphaOpen f = AlphaOpen::finite({1, 2});
  AlphaOpen c = AlphaOpen::cofinite({2, 3});
  CHECK(f.contains(1));
  CHECK_FALSE(f.contains(3));
  CHECK_FALSE(f.contains_infinity());
  CHECK(c.contains(4));
  CHECK_FALSE(c.contains(3));
  CHECK(c.contains_infinity());

  AlphaOpen u = set_union(f, c);  // cofinite, excludes only 3
  CHECK(u.is_cofinite());
  CHECK(u.contains(1));
  CHECK_FALSE(u.contains(3));

  AlphaOpen i = set_intersection(f, c);  // finite {1}
  CHECK_FALSE(i.is_cofinite());
  CHECK(i.contains(1));
  CHECK_FALSE(i.contains(2));

  CHECK(set_union(c, AlphaOpen::cofinite({3, 5})) == AlphaOpen::cofinite({3}));
  CHECK(set_intersection(c, AlphaOpen::cofinite({5})) == AlphaOpen::cofinite({2, 3, 5}));
}

TEST_CASE("evaluation splits between atoms and the infinity weight") {
  DiscreteValuation v;
  v.weights[0] = Rational(1, 4);
  v.weights[7] = Rational(1, 4);
  v.a_inf = Rational(1, 2);
  CHECK(v.mass() == 1);
  CHECK(eval_alpha(v, AlphaOpen::finite({0})) == Rational(1, 4));
  CHECK(eval_alpha(v, AlphaOpen::cofinite({0})) == Rational(3, 4));
  CHECK(eval_alpha(v, AlphaOpen::cofinite({})) == 1);
}

TEST_CASE("discrete order is coefficientwise") {
  DiscreteValuation v = DiscreteValuation::dirac(3);
  DiscreteValuation w = v;
  w.a_inf = Rational(1, 8);
  CHECK(leq_discrete(v, w));
  CHECK_FALSE(leq_discrete(w, v));
  CHECK_FALSE(leq_discrete(DiscreteValuation::dirac(3), DiscreteValuation::dirac(4)));
}

TEST_CASE("tail mass is the infinity atom") {
  DiscreteValuation v;
  v.weights[2] = Rational(2, 3);
  v.a_inf = Rational(1, 5);
  CHECK(tail_mass(v) == Rational(1, 5));
  CHECK(tail_mass(DiscreteValuation::dirac(0)) == 0);
  CHECK(tail_mass(DiscreteValuation::dirac_infinity()) == 1);
}

TEST_CASE("no weak neighborhood of dirac-infinity avoids the naturals") {
  // [cofinite({0,1}) > 1/2] and [cofinite({2}) > 2/3]: delta_3 is inside both.
  CounterexampleWitness w =
      counterexample_witness({{{0, 1}, Rational(1, 2)}, {{2}, Rational(2, 3)}});
  CHECK(w.n == 3);
  CHECK(w.in_every_conjunct);
  CHECK_FALSE(w.scott_member);
  CHECK(w.point.a_inf == 0);
  CHECK(scott_V_member(DiscreteValuation::dirac_infinity()));
}

TEST_CASE("thresholds must separate strictly") {
  CHECK_THROWS_AS(counterexample_witness({{{0}, Rational(1)}}), PreconditionError);
  CHECK_THROWS_AS(counterexample_witness({{{0}, Rational(0)}}), PreconditionError);
}

TEST_CASE("counterexample property suite") {
  SuiteConfig cfg;
  SuiteResult r = suite_counterexample(23, cfg);
  INFO(r.notes);
  CHECK(r.failed == 0);
}
