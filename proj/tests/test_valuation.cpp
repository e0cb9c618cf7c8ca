#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordval/suites.hpp"
#include "ordval/valuation.hpp"

using namespace ordval;

namespace {

FinitePoset chain3() {
  return FinitePoset::build({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
}

FinitePoset antichain2() { return FinitePoset::build({"a", "b"}, {}); }

SimpleValuation half_half(int a, int b) {
  SimpleValuation v;
  v.set_weight(a, Rational(1, 2));
  v.set_weight(b, Rational(1, 2));
  return v;
}

}  // namespace

TEST_CASE("zero weights vanish and mass adds up") {
  SimpleValuation v;
  v.set_weight(0, Rational(1, 3));
  v.set_weight(1, 0);
  v.set_weight(2, Rational(1, 6));
  CHECK(v.support() == (mask_single(0) | mask_single(2)));
  CHECK(v.mass() == Rational(1, 2));
  CHECK(v.value(mask_single(2)) == Rational(1, 6));
}

TEST_CASE("mass admissibility by flavor") {
  CHECK(mass_admissible(Flavor::Plain, Rational(7, 2)));
  CHECK(mass_admissible(Flavor::Sub, Rational(1, 2)));
  CHECK_FALSE(mass_admissible(Flavor::Sub, Rational(3, 2)));
  CHECK(mass_admissible(Flavor::Prob, 1));
  CHECK_FALSE(mass_admissible(Flavor::Prob, Rational(1, 2)));
}

TEST_CASE("way-below on the half-line") {
  CHECK(way_below(0, 0));
  CHECK(way_below(0, Rational(1, 2)));
  CHECK(way_below(Rational(1, 3), Rational(1, 2)));
  CHECK_FALSE(way_below(Rational(1, 2), Rational(1, 2)));
}

TEST_CASE("stochastic order on a chain is mass-from-the-top") {
  FinitePoset p = chain3();
  // delta_x <= delta_z but not conversely.
  LeqResult r = stochastic_leq(SimpleValuation::dirac(0), SimpleValuation::dirac(2), p);
  CHECK(r.holds);
  r = stochastic_leq(SimpleValuation::dirac(2), SimpleValuation::dirac(0), p);
  CHECK_FALSE(r.holds);
  REQUIRE(r.counterexample.has_value());
  CHECK(p.is_upward_closed(*r.counterexample));
  CHECK(SimpleValuation::dirac(2).value(*r.counterexample) >
        SimpleValuation::dirac(0).value(*r.counterexample));
}

TEST_CASE("diracs at incomparable points are incomparable") {
  FinitePoset p = antichain2();
  CHECK_FALSE(stochastic_leq(SimpleValuation::dirac(0), SimpleValuation::dirac(1), p).holds);
  CHECK_FALSE(stochastic_leq(SimpleValuation::dirac(1), SimpleValuation::dirac(0), p).holds);
}

TEST_CASE("transport oracle agrees on hand cases") {
  FinitePoset p = chain3();
  SimpleValuation split = half_half(0, 2);
  CHECK(stochastic_leq_transport(split, SimpleValuation::dirac(2), p));
  CHECK_FALSE(stochastic_leq_transport(SimpleValuation::dirac(2), split, p));
  CHECK(stochastic_leq(split, SimpleValuation::dirac(2), p).holds);
}

TEST_CASE("capacity versus valuation order uses every open") {
  FinitePoset p = antichain2();
  SimpleCapacity k;
  k.add_term(Rational(1, 2), mask_single(0) | mask_single(1));
  // u_{a,b} only charges opens containing both points.
  CHECK(stochastic_leq(k, half_half(0, 1), p).holds);
  SimpleCapacity big;
  big.add_term(Rational(3, 4), mask_single(0));
  LeqResult r = stochastic_leq(big, half_half(0, 1), p);
  CHECK_FALSE(r.holds);
}

TEST_CASE("choquet integral of a step function on a chain") {
  FinitePoset p = chain3();
  StepFunction h{{Rational(0), Rational(1, 2), Rational(2)}};
  REQUIRE(h.is_monotone(p));
  SimpleValuation v;
  v.set_weight(0, Rational(1, 4));
  v.set_weight(1, Rational(1, 4));
  v.set_weight(2, Rational(1, 2));
  // Plain expectation: 0/4 + (1/2)/4 + 2/2 = 9/8.
  CHECK(choquet_integral(h, v, p) == Rational(9, 8));
}

TEST_CASE("choquet against a unanimity game is a min") {
  FinitePoset p = antichain2();
  SimpleCapacity k;
  k.add_term(1, mask_single(0) | mask_single(1));
  StepFunction h{{Rational(1, 3), Rational(3, 4)}};
  CHECK(choquet_integral(h, k, p) == Rational(1, 3));
}

TEST_CASE("non-monotone step functions are rejected") {
  FinitePoset p = chain3();
  StepFunction h{{Rational(1), Rational(0), Rational(2)}};
  CHECK_FALSE(h.is_monotone(p));
  CHECK_THROWS_AS(choquet_integral(h, SimpleValuation::dirac(0), p), NonMonotoneError);
}

TEST_CASE("rounding floors each coefficient") {
  SimpleValuation v;
  v.set_weight(0, Rational(5, 12));
  v.set_weight(1, Rational(2, 3));
  SimpleValuation r = round_valuation(v, 4);
  CHECK(r.weight(0) == Rational(1, 4));  // floor(4*5/12)/4 = 1/4
  CHECK(r.weight(1) == Rational(1, 2));
  CHECK(v.weight(0) - r.weight(0) < Rational(1, 4));
}

TEST_CASE("oracle agreement suite") {
  SuiteConfig cfg;
  SuiteResult r = suite_oracle_agreement(7, cfg);
  INFO(r.notes);
  CHECK(r.failed == 0);
}
