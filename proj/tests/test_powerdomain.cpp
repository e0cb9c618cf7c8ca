#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ordval/powerdomain.hpp"
#include "ordval/suites.hpp"

using namespace ordval;

namespace {

FinitePoset antichain2() { return FinitePoset::build({"a", "b"}, {}); }

SimpleValuation half_half() {
  SimpleValuation v;
  v.set_weight(0, Rational(1, 2));
  v.set_weight(1, Rational(1, 2));
  return v;
}

}  // namespace

TEST_CASE("weak-open membership") {
  FinitePoset p = antichain2();
  SubbasicOpen gt{p.full_mask(), Rational(3, 4), SubbasicOpen::Mode::StrictGt};
  WeakOpen w{{gt}, Flavor::Plain};
  CHECK(member_weak_open(half_half(), w, p));
  CHECK(member_weak_open(SimpleValuation::dirac(0), w, p));  // {a,b} gets 1 > 3/4
  WeakOpen on_a{{SubbasicOpen{mask_single(0), Rational(3, 4), SubbasicOpen::Mode::StrictGt}},
                Flavor::Plain};
  CHECK_FALSE(member_weak_open(half_half(), on_a, p));
}

TEST_CASE("constants are midpoints") {
  SimpleValuation nu = half_half();
  SubbasicOpen u{mask_single(0) | mask_single(1), Rational(1, 2),
                 SubbasicOpen::Mode::StrictGt};
  Constants c = choose_constants(nu, {u});
  CHECK(c.a == Rational(3, 4));
  CHECK(c.s[0] == Rational(5, 8));

  SubbasicOpen tight{mask_single(0) | mask_single(1), Rational(9, 10),
                     SubbasicOpen::Mode::StrictGt};
  Constants c2 = choose_constants(nu, {tight});
  CHECK(c2.a == Rational(19, 20));
  CHECK(c2.s[0] == Rational(37, 40));
}

TEST_CASE("constants reject thresholds at or above the value") {
  SimpleValuation nu = half_half();
  SubbasicOpen bad{mask_single(0), Rational(1, 2), SubbasicOpen::Mode::StrictGt};
  CHECK_THROWS_AS(choose_constants(nu, {bad}), PreconditionError);
  SubbasicOpen zero{mask_single(0), 0, SubbasicOpen::Mode::StrictGt};
  CHECK_THROWS_AS(choose_constants(nu, {zero}), PreconditionError);
}

TEST_CASE("step count from the gap") {
  SubbasicOpen u{3, Rational(1, 2), SubbasicOpen::Mode::StrictGt};
  CHECK(choose_N(3, {Rational(5, 8)}, {u}) == 16);  // 2 / (1/8)
  SubbasicOpen wide{1, Rational(1, 2), SubbasicOpen::Mode::StrictGt};
  CHECK(choose_N(1, {Rational(3, 2)}, {wide}) == 1);
}

TEST_CASE("local bases on the antichain are singletons") {
  FinitePoset p = antichain2();
  SimpleValuation nu = half_half();
  SubbasicOpen u{p.full_mask(), Rational(3, 4), SubbasicOpen::Mode::StrictGt};
  LocalBases lb = construct_Bx(p, nu, {u});
  CHECK(lb.b.at(0) == mask_single(0));
  CHECK(lb.b.at(1) == mask_single(1));
  CHECK(lb.v.at(0) == mask_single(0));
}

TEST_CASE("full sandwich on the antichain") {
  FinitePoset p = antichain2();
  SimpleValuation nu = half_half();
  SubbasicOpen u{p.full_mask(), Rational(3, 4), SubbasicOpen::Mode::StrictGt};
  WitnessBundle wb = verify_sandwich(p, nu, {u}, Flavor::Sub, 4);
  CHECK(wb.a == Rational(7, 8));
  CHECK(wb.s[0] == Rational(13, 16));
  CHECK(wb.big_n == 32);
  CHECK(wb.z == p.full_mask());
  // a * nu already sits on the 1/32 grid, so E is that single point.
  REQUIRE(wb.e_set.size() == 1);
  CHECK(wb.e_set[0].weight(0) == Rational(7, 16));
  CHECK(wb.e_set[0].weight(1) == Rational(7, 16));
  CHECK(wb.nu_in_v);
  CHECK(wb.e_in_u);
  CHECK(wb.grid_covered);
  CHECK(wb.lemma_checks);
}

TEST_CASE("sandwich on a chain keeps bases below the threshold opens") {
  FinitePoset p = FinitePoset::build({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
  SimpleValuation nu;
  nu.set_weight(0, Rational(1, 2));
  nu.set_weight(2, Rational(1, 2));
  SubbasicOpen top{p.up_of(2), Rational(1, 4), SubbasicOpen::Mode::StrictGt};
  WitnessBundle wb = verify_sandwich(p, nu, {top}, Flavor::Sub, 4);
  CHECK(wb.nu_in_v);
  CHECK(wb.e_in_u);
  CHECK(wb.grid_covered);
  for (const auto& [x, b] : wb.bases.b)
    if (mask_contains(top.u, x)) CHECK(mask_subset(b, top.u));
}

TEST_CASE("rounded mixtures stay within the support gap") {
  // Every e in E is at most |Z|/N below the mixture it rounds.
  FinitePoset p = antichain2();
  SimpleValuation nu = half_half();
  SubbasicOpen u{p.full_mask(), Rational(1, 2), SubbasicOpen::Mode::StrictGt};
  WitnessBundle wb = verify_sandwich(p, nu, {u}, Flavor::Sub, 4);
  Rational slack = Rational(mask_count(wb.z), 1) / Rational(wb.big_n);
  for (const SimpleValuation& e : wb.e_set)
    CHECK(e.value(u.u) > wb.s[0] - slack);
}

TEST_CASE("lifting round trips") {
  FinitePoset p = FinitePoset::build({"bot", "a", "b"}, {{"bot", "a"}, {"bot", "b"}});
  PointedPoset pp = PointedPoset::make(p, 0);
  SimpleValuation nu;
  nu.set_weight(0, Rational(1, 4));
  nu.set_weight(1, Rational(1, 4));
  nu.set_weight(2, Rational(1, 2));
  SimpleValuation down = lift_minus(nu, pp);
  CHECK(down.mass() == Rational(3, 4));
  CHECK(down.weight(0) == 0);
  SimpleValuation back = lift_plus(down, pp);
  CHECK(back == nu);
  CHECK_THROWS_AS(lift_minus(down, pp), PreconditionError);  // mass must be 1
}

TEST_CASE("probability sandwich through the lifting") {
  FinitePoset p = FinitePoset::build({"bot", "a", "b"}, {{"bot", "a"}, {"bot", "b"}});
  PointedPoset pp = PointedPoset::make(p, 0);
  SimpleValuation nu;
  nu.set_weight(1, Rational(1, 2));
  nu.set_weight(2, Rational(1, 2));
  SubbasicOpen u{mask_single(1) | mask_single(2), Rational(3, 4),
                 SubbasicOpen::Mode::StrictGt};
  WitnessBundle wb = verify_sandwich_prob(pp, nu, {u}, 4);
  CHECK(wb.nu_in_v);
  CHECK(wb.e_in_u);
  CHECK(wb.grid_covered);
  CHECK(wb.lemma_checks);
}

TEST_CASE("probability sandwich rejects opens through bottom") {
  FinitePoset p = FinitePoset::build({"bot", "a"}, {{"bot", "a"}});
  PointedPoset pp = PointedPoset::make(p, 0);
  SimpleValuation nu;
  nu.set_weight(1, 1);
  SubbasicOpen u{p.full_mask(), Rational(1, 2), SubbasicOpen::Mode::StrictGt};
  CHECK_THROWS_AS(verify_sandwich_prob(pp, nu, {u}, 2), PreconditionError);
}

TEST_CASE("lifting property suite") {
  SuiteConfig cfg;
  SuiteResult r = suite_lifting(17, cfg);
  INFO(r.notes);
  CHECK(r.failed == 0);
}

TEST_CASE("sandwich property suites") {
  SuiteConfig cfg;
  auto [sandwich, lemmas] = suite_sandwich(19, cfg);
  INFO(sandwich.notes);
  CHECK(sandwich.failed == 0);
  INFO(lemmas.notes);
  CHECK(lemmas.failed == 0);
}
