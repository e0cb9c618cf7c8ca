#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ordval/parse.hpp"
#include "ordval/report.hpp"

using namespace ordval;

namespace {

Document parse(const std::string& text) {
  std::istringstream in(text);
  return parse_document(in);
}

}  // namespace

TEST_CASE("full document round trip") {
  Document d = parse(
      "# a three-point chain\n"
      "poset\n"
      "elem x\n"
      "elem y\n"
      "elem z\n"
      "le x y\n"
      "le y z\n"
      "\n"
      "val sub 1/4 @ x + 1/2 @ z\n"
      "cap 1/3 @ {x,y} + 1/6 @ {z}\n"
      "step 0 @ x + 1/2 @ y + 2 @ z\n"
      "open {y,z} > 1/3\n");
  CHECK(d.poset.size() == 3);
  CHECK(d.poset.leq(0, 2));
  REQUIRE(d.valuations.size() == 1);
  CHECK(d.valuation_flavors[0] == Flavor::Sub);
  CHECK(d.valuations[0].weight(0) == Rational(1, 4));
  CHECK(d.valuations[0].mass() == Rational(3, 4));
  REQUIRE(d.capacities.size() == 1);
  CHECK(d.capacities[0].terms().size() == 2);
  CHECK(d.capacities[0].terms()[0].second == (mask_single(0) | mask_single(1)));
  REQUIRE(d.steps.size() == 1);
  CHECK(d.steps[0].values[2] == 2);
  REQUIRE(d.conjuncts.size() == 1);
  CHECK(d.conjuncts[0].u == (mask_single(1) | mask_single(2)));
  CHECK(d.conjuncts[0].r == Rational(1, 3));
}

TEST_CASE("flavor defaults to plain") {
  Document d = parse("poset\nelem a\nval 2 @ a\n");
  CHECK(d.valuation_flavors[0] == Flavor::Plain);
  CHECK(d.valuations[0].weight(0) == 2);
}

TEST_CASE("rationals parse as integers or fractions") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("7/2") == Rational(7, 2));
  CHECK_THROWS_AS(parse_rational("x/2"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("errors carry the offending line") {
  CHECK_THROWS_WITH_AS(parse("poset\nelem a\nle a b\n"),
                       doctest::Contains("line 3"), ParseError);
  CHECK_THROWS_AS(parse("poset\nelem a\nval 1 @ nope\n"), ParseError);
  CHECK_THROWS_AS(parse("val 1 @ a\n"), ParseError);  // valuation before poset
  CHECK_THROWS_AS(parse("poset\nelem a\nopen {a} < 1\n"), ParseError);
  // Flavor bounds are enforced at parse time.
  CHECK_THROWS_AS(parse("poset\nelem a\nval sub 3/2 @ a\n"), ParseError);
  CHECK_THROWS_AS(parse("poset\nelem a\nval prob 1/2 @ a\n"), ParseError);
}

TEST_CASE("open lines must name upward-closed sets") {
  CHECK_THROWS_AS(parse("poset\nelem a\nelem b\nle a b\nopen {a} > 1/2\n"), ParseError);
}

TEST_CASE("report renders text and json-lines") {
  Report rep;
  rep.add("value", Rational(1, 3));
  rep.add("ok", true);
  std::ostringstream text, json;
  rep.print(text, ReportFormat::Text);
  CHECK(text.str() == "value=1/3\nok=true\n");
  rep.print(json, ReportFormat::JsonLines);
  CHECK(json.str() == "{\"value\":\"1/3\"}\n{\"ok\":true}\n");
}
