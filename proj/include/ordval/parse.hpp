#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ordval/powerdomain.hpp"
#include "ordval/valuation.hpp"

namespace ordval {

/// One input document: a poset followed by valuation / capacity / step /
/// conjunct lines, in file order.
struct Document {
  FinitePoset poset;
  std::vector<SimpleValuation> valuations;
  std::vector<Flavor> valuation_flavors;  // aligned with valuations
  std::vector<SimpleCapacity> capacities;
  std::vector<StepFunction> steps;
  std::vector<SubbasicOpen> conjuncts;
};

/// Line-based grammar, '#' comments:
///   poset
///   elem <name>
///   le <name> <name>
///   val [plain|sub|prob] <q> @ <name> (+ <q> @ <name>)*
///   cap <q> @ {<name>,...} (+ ...)*
///   step <q> @ <name> (+ <q> @ <name>)*
///   open {<name>,...} > <q>
/// Throws ParseError with a line number on malformed input.
Document parse_document(std::istream& in);
Document parse_document_file(const std::string& path);

SimpleValuation parse_valuation_literal(const std::string& body, const FinitePoset& p,
                                        Flavor* flavor_out = nullptr);
SimpleCapacity parse_capacity_literal(const std::string& body, const FinitePoset& p);

}  // namespace ordval
