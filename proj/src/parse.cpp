#include "ordval/parse.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ordval/errors.hpp"

namespace ordval {

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok == "+") {
      out.push_back(cur);
      cur.clear();
    } else {
      if (!cur.empty()) cur += ' ';
      cur += tok;
    }
  }
  out.push_back(cur);
  return out;
}

Mask parse_set(const std::string& tok, const FinitePoset& p) {
  if (tok.size() < 2 || tok.front() != '{' || tok.back() != '}')
    throw ParseError("expected {a,b,...}, got: " + tok);
  Mask m = 0;
  std::istringstream in(tok.substr(1, tok.size() - 2));
  std::string name;
  while (std::getline(in, name, ',')) {
    name = strip(name);
    if (name.empty()) continue;
    m |= mask_single(p.require_index(name));
  }
  return m;
}

}  // namespace

SimpleValuation parse_valuation_literal(const std::string& body, const FinitePoset& p,
                                        Flavor* flavor_out) {
  std::string rest = strip(body);
  Flavor flavor = Flavor::Plain;
  for (auto& [word, fl] : {std::pair<std::string, Flavor>{"plain", Flavor::Plain},
                           {"sub", Flavor::Sub},
                           {"prob", Flavor::Prob}}) {
    if (rest.rfind(word + " ", 0) == 0 || rest == word) {
      flavor = fl;
      rest = strip(rest.substr(word.size()));
      break;
    }
  }
  SimpleValuation v;
  if (!rest.empty()) {
    for (const std::string& term : split_terms(rest)) {
      auto toks = split_ws(term);
      if (toks.size() != 3 || toks[1] != "@")
        throw ParseError("expected '<q> @ <elem>', got: " + term);
      int x = p.require_index(toks[2]);
      v.set_weight(x, v.weight(x) + parse_rational(toks[0]));
    }
  }
  if (!mass_admissible(flavor, v.mass()))
    throw ParseError("valuation mass violates its flavor");
  if (flavor_out) *flavor_out = flavor;
  return v;
}

SimpleCapacity parse_capacity_literal(const std::string& body, const FinitePoset& p) {
  SimpleCapacity k;
  for (const std::string& term : split_terms(strip(body))) {
    auto toks = split_ws(term);
    if (toks.size() != 3 || toks[1] != "@")
      throw ParseError("expected '<q> @ {...}', got: " + term);
    k.add_term(parse_rational(toks[0]), parse_set(toks[2], p));
  }
  return k;
}

Document parse_document(std::istream& in) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::pair<int, std::string>> deferred;  // lines after the poset block
  bool saw_poset = false;
  std::string line;
  int line_no = 0;
  try {
    while (std::getline(in, line)) {
      ++line_no;
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      line = strip(line);
      if (line.empty()) continue;
      auto toks = split_ws(line);
      if (toks[0] == "poset") {
        saw_poset = true;
      } else if (toks[0] == "elem") {
        if (!saw_poset || toks.size() != 2) throw ParseError("bad elem line");
        names.push_back(toks[1]);
      } else if (toks[0] == "le") {
        if (!saw_poset || toks.size() != 3) throw ParseError("bad le line");
        for (int i : {1, 2})
          if (std::find(names.begin(), names.end(), toks[i]) == names.end())
            throw ParseError("unknown element name: " + toks[i]);
        pairs.emplace_back(toks[1], toks[2]);
      } else {
        deferred.emplace_back(line_no, line);
      }
    }
    if (!saw_poset) throw ParseError("missing 'poset' header");
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
  }

  Document doc;
  try {
    doc.poset = FinitePoset::build(names, pairs);
  } catch (const std::exception& e) {
    throw ParseError(std::string("poset: ") + e.what());
  }
  for (const auto& [no, body] : deferred) {
    try {
      auto toks = split_ws(body);
      const std::string rest = strip(body.substr(toks[0].size()));
      if (toks[0] == "val") {
        Flavor fl;
        doc.valuations.push_back(parse_valuation_literal(rest, doc.poset, &fl));
        doc.valuation_flavors.push_back(fl);
      } else if (toks[0] == "cap") {
        doc.capacities.push_back(parse_capacity_literal(rest, doc.poset));
      } else if (toks[0] == "step") {
        SimpleValuation as_val = parse_valuation_literal(rest, doc.poset);
        StepFunction h;
        h.values.assign(doc.poset.size(), Rational(0));
        for (const auto& [x, w] : as_val.weights()) h.values[x] = w;
        doc.steps.push_back(h);
      } else if (toks[0] == "open") {
        if (toks.size() != 4 || toks[2] != ">")
          throw ParseError("expected 'open {...} > <q>'");
        SubbasicOpen s;
        s.u = parse_set(toks[1], doc.poset);
        if (!doc.poset.is_upward_closed(s.u))
          throw ParseError("conjunct set is not upward-closed");
        s.r = parse_rational(toks[3]);
        s.mode = SubbasicOpen::Mode::StrictGt;
        doc.conjuncts.push_back(s);
      } else {
        throw ParseError("unknown directive: " + toks[0]);
      }
    } catch (const std::exception& e) {
      throw ParseError("line " + std::to_string(no) + ": " + e.what());
    }
  }
  return doc;
}

Document parse_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  return parse_document(in);
}

}  // namespace ordval
