#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordval/poset.hpp"
#include "ordval/suites.hpp"

using namespace ordval;

namespace {

FinitePoset diamond() {
  // bot < a, b < top
  return FinitePoset::build({"bot", "a", "b", "top"},
                            {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
}

}  // namespace

TEST_CASE("closure is reflexive and transitive") {
  FinitePoset p = FinitePoset::build({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
  CHECK(p.leq(0, 0));
  CHECK(p.leq(0, 2));
  CHECK_FALSE(p.leq(2, 0));
}

TEST_CASE("cycles are rejected") {
  CHECK_THROWS_AS(FinitePoset::build({"x", "y"}, {{"x", "y"}, {"y", "x"}}), CycleError);
  CHECK_THROWS_AS(FinitePoset::build({"x", "x"}, {}), DuplicateNameError);
  CHECK_THROWS_AS(FinitePoset::build({"x"}, {{"x", "w"}}), NotMemberError);
}

TEST_CASE("opens of the diamond") {
  FinitePoset p = diamond();
  std::vector<OpenSet> opens = enumerate_opens(p);
  // {}, {top}, {a,top}, {b,top}, {a,b,top}, X
  CHECK(opens.size() == 6);
  for (OpenSet u : opens) CHECK(p.is_upward_closed(u));
  // Complements are exactly the downward-closed sets.
  for (OpenSet u : opens) CHECK(p.is_downward_closed(p.full_mask() & ~u));
}

TEST_CASE("two-element discrete poset has four opens") {
  FinitePoset p = FinitePoset::build({"a", "b"}, {});
  CHECK(enumerate_opens(p).size() == 4);
}

TEST_CASE("interior and closures") {
  FinitePoset p = diamond();
  int bot = p.require_index("bot"), a = p.require_index("a");
  int b = p.require_index("b"), top = p.require_index("top");
  CHECK(upward_closure(p, mask_single(bot)) == p.full_mask());
  CHECK(downward_closure(p, mask_single(top)) == p.full_mask());
  // {bot, a, top} is not open (misses b above bot); its interior drops bot.
  Mask s = mask_single(bot) | mask_single(a) | mask_single(top);
  CHECK(interior(p, s) == (mask_single(a) | mask_single(top)));
  CHECK(minimal_elements(p, s) == mask_single(bot));
  CHECK(minimal_elements(p, mask_single(a) | mask_single(b)) ==
        (mask_single(a) | mask_single(b)));
}

TEST_CASE("every finite poset is sober") {
  FinitePoset p = diamond();
  SobrietyResult r = is_sober(p);
  CHECK(r.sober);
  // One irreducible closed set per point: its downward closure.
  CHECK(r.closure_points.size() == 4);
  for (const auto& [c, x] : r.closure_points) CHECK(c == p.down_of(x));
}

TEST_CASE("finitary basis sandwiches the point") {
  FinitePoset p = diamond();
  int a = p.require_index("a");
  OpenSet u = p.up_of(a);
  Mask e = finitary_basis_at(p, a, u);
  Mask up_e = upward_closure(p, e);
  CHECK(mask_contains(interior(p, up_e), a));
  CHECK(mask_subset(up_e, u));
  CHECK_THROWS_AS(finitary_basis_at(p, p.require_index("bot"), u), NotMemberError);
}

TEST_CASE("structural property suite") {
  SuiteConfig cfg;
  SuiteResult r = suite_structural(99, cfg);
  INFO(r.notes);
  CHECK(r.failed == 0);
}
