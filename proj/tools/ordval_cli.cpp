#include <CLI11.hpp>
#include <iostream>
#include <set>
#include <sstream>

#include "ordval/alpha_nat.hpp"
#include "ordval/errors.hpp"
#include "ordval/lp.hpp"
#include "ordval/parse.hpp"
#include "ordval/powerdomain.hpp"
#include "ordval/report.hpp"
#include "ordval/suites.hpp"

namespace {

using namespace ordval;

struct GlobalOpts {
  std::string input;
  std::uint64_t seed = 1;
  int grid = 4;
  int max_size = 16;
  std::string flavor = "plain";
  std::string format = "text";
};

ReportFormat format_of(const GlobalOpts& g) {
  return g.format == "json-lines" ? ReportFormat::JsonLines : ReportFormat::Text;
}

Flavor flavor_of(const std::string& s) {
  if (s == "plain") return Flavor::Plain;
  if (s == "sub") return Flavor::Sub;
  if (s == "prob") return Flavor::Prob;
  throw ParseError("unknown flavor: " + s);
}

std::string mask_names(const FinitePoset& p, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < p.size(); ++i)
    if (mask_contains(m, i)) {
      if (!first) out += ",";
      out += p.name(i);
      first = false;
    }
  return out + "}";
}

int cmd_order(const GlobalOpts& g) {
  Document doc = parse_document_file(g.input);
  const FinitePoset& p = doc.poset;
  Report rep;
  rep.add("elements", static_cast<long>(p.size()));
  rep.add("opens", static_cast<long>(enumerate_opens(p).size()));
  SobrietyResult sr = is_sober(p);
  rep.add("sober", sr.sober);
  rep.add("irreducible_closed", static_cast<long>(sr.closure_points.size()));
  for (int x = 0; x < p.size(); ++x) {
    OpenSet u = upward_closure(p, mask_single(x));
    rep.add("basis[" + p.name(x) + "]", mask_names(p, finitary_basis_at(p, x, u)));
  }
  rep.print(std::cout, format_of(g));
  return 0;
}

int cmd_leq(const GlobalOpts& g) {
  Document doc = parse_document_file(g.input);
  Report rep;
  LeqResult r;
  bool transport_checked = false, transport = false;
  if (!doc.capacities.empty()) {
    if (doc.valuations.empty()) throw ParseError("leq needs a valuation to compare against");
    r = stochastic_leq(doc.capacities[0], doc.valuations[0], doc.poset);
  } else if (doc.valuations.size() >= 2) {
    r = stochastic_leq(doc.valuations[0], doc.valuations[1], doc.poset);
    transport = stochastic_leq_transport(doc.valuations[0], doc.valuations[1], doc.poset);
    transport_checked = true;
  } else {
    throw ParseError("leq needs two valuations or a capacity and a valuation");
  }
  rep.add("leq", r.holds);
  if (!r.holds) rep.add("witness", mask_names(doc.poset, *r.counterexample));
  if (transport_checked) {
    rep.add("transport", transport);
    rep.add("oracles_agree", transport == r.holds);
  }
  rep.print(std::cout, format_of(g));
  if (transport_checked && transport != r.holds) return 1;
  return r.holds ? 0 : 1;
}

int cmd_choquet(const GlobalOpts& g) {
  Document doc = parse_document_file(g.input);
  if (doc.steps.empty()) throw ParseError("choquet needs a step line");
  Report rep;
  const StepFunction& h = doc.steps[0];
  if (!doc.valuations.empty())
    rep.add("integral", choquet_integral(h, doc.valuations[0], doc.poset));
  else if (!doc.capacities.empty())
    rep.add("integral", choquet_integral(h, doc.capacities[0], doc.poset));
  else
    throw ParseError("choquet needs a val or cap line");
  rep.print(std::cout, format_of(g));
  return 0;
}

int cmd_decompose(const GlobalOpts& g) {
  Document doc = parse_document_file(g.input);
  if (doc.capacities.empty() || doc.valuations.empty())
    throw ParseError("decompose needs a cap line and a val line");
  const SimpleCapacity& kappa = doc.capacities[0];
  const SimpleValuation& nu = doc.valuations[0];
  Report rep;
  LeqResult pre = stochastic_leq(kappa, nu, doc.poset);
  rep.add("kappa_leq_nu", pre.holds);
  if (!pre.holds) {
    rep.add("witness", mask_names(doc.poset, *pre.counterexample));
    rep.print(std::cout, format_of(g));
    return 1;
  }
  std::vector<int> points;
  std::vector<Rational> weights;
  std::vector<Mask> sets;
  for (const auto& [w, b] : kappa.terms()) {
    points.push_back(static_cast<int>(points.size()));
    weights.push_back(w);
    sets.push_back(b);
  }
  // Term index doubles as the point label; the decomposition only needs the
  // (a_x, B_x) list.
  Decomposition d = decompose_capacity(points, weights, sets, nu, doc.poset);
  rep.add("strategies", static_cast<long>(d.sigma.strategy_count()));
  for (int f = 0; f < d.sigma.strategy_count(); ++f)
    if (d.beta[f] != 0) rep.add("beta[" + std::to_string(f) + "]", d.beta[f]);
  bool ok = stochastic_leq(d.mixture, nu, doc.poset).holds;
  rep.add("mixture_leq_nu", ok);
  rep.print(std::cout, format_of(g));
  return ok ? 0 : 1;
}

int cmd_witness(const GlobalOpts& g) {
  Document doc = parse_document_file(g.input);
  if (doc.valuations.empty()) throw ParseError("witness needs a val line");
  const FinitePoset& p = doc.poset;
  Flavor flavor = flavor_of(g.flavor);
  WitnessBundle wb = verify_sandwich(p, doc.valuations[0], doc.conjuncts, flavor, g.grid);
  Report rep;
  rep.add("a", wb.a);
  for (size_t i = 0; i < wb.s.size(); ++i)
    rep.add("s[" + std::to_string(i) + "]", wb.s[i]);
  rep.add("N", wb.big_n);
  rep.add("Z", mask_names(p, wb.z));
  for (const auto& [x, b] : wb.bases.b) rep.add("B[" + p.name(x) + "]", mask_names(p, b));
  rep.add("E.size", static_cast<long>(wb.e_set.size()));
  rep.add("check.nu_in_V", wb.nu_in_v);
  rep.add("check.E_in_U", wb.e_in_u);
  rep.add("check.grid_covered", wb.grid_covered);
  rep.add("check.lemmas", wb.lemma_checks);
  rep.add("grid.members", wb.grid_members);
  rep.print(std::cout, format_of(g));
  return (wb.nu_in_v && wb.e_in_u && wb.grid_covered && wb.lemma_checks) ? 0 : 1;
}

int cmd_counterexample(const GlobalOpts& g, const std::vector<std::string>& tokens) {
  // Tokens come in pairs: E={0,1} r=1/2.
  std::vector<std::pair<std::set<std::uint64_t>, Rational>> conjuncts;
  std::set<std::uint64_t> current_e;
  bool have_e = false;
  for (const std::string& tok : tokens) {
    if (tok.rfind("E=", 0) == 0) {
      std::string body = tok.substr(2);
      if (body.size() < 2 || body.front() != '{' || body.back() != '}')
        throw ParseError("expected E={...}: " + tok);
      current_e.clear();
      std::istringstream in(body.substr(1, body.size() - 2));
      std::string num;
      while (std::getline(in, num, ','))
        if (!num.empty()) current_e.insert(std::stoull(num));
      have_e = true;
    } else if (tok.rfind("r=", 0) == 0) {
      if (!have_e) throw ParseError("r= before any E=");
      conjuncts.emplace_back(current_e, parse_rational(tok.substr(2)));
      have_e = false;
    } else {
      throw ParseError("expected E={...} or r=<q>, got: " + tok);
    }
  }
  if (have_e) throw ParseError("E= without a matching r=");
  CounterexampleWitness w = counterexample_witness(conjuncts);
  Report rep;
  rep.add("n", static_cast<long>(w.n));
  rep.add("check.in_neighborhood", w.in_every_conjunct);
  rep.add("check.a_inf_zero", w.point.a_inf == 0);
  rep.add("check.scott_member", w.scott_member);
  rep.print(std::cout, format_of(g));
  return (w.in_every_conjunct && !w.scott_member) ? 0 : 1;
}

int cmd_selftest(const GlobalOpts& g) {
  if (g.grid < 1) throw ParseError("grid must be at least 1");
  if (g.max_size < 1 || g.max_size > 20) throw ParseError("max-size must be in 1..20");
  SuiteConfig cfg;
  cfg.grid = g.grid;
  cfg.max_poset_size = std::min(g.max_size, 7);
  Report rep;
  rep.add("seed", std::to_string(g.seed));
  bool all_ok = true;
  std::vector<SuiteResult> results = run_all_suites(g.seed, cfg);
  for (size_t i = 0; i < results.size(); ++i) {
    const std::string key = "suite." + std::to_string(i + 1) + "." + results[i].name;
    rep.add(key + ".total", results[i].total);
    rep.add(key + ".failed", results[i].failed);
    all_ok = all_ok && results[i].passed();
  }
  rep.add("all_pass", all_ok);
  rep.print(std::cout, format_of(g));
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for valuations on finite posets"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--seed", g.seed, "seed for the property suites");
  app.add_option("--grid", g.grid, "denominator for grid valuations");
  app.add_option("--flavor", g.flavor, "plain|sub|prob");
  app.add_option("--format", g.format, "text|json-lines");
  app.add_option("--max-size", g.max_size, "poset size bound for generators");

  auto* order = app.add_subcommand("order", "poset and topology summary");
  order->add_option("--input", g.input)->required();
  auto* leq = app.add_subcommand("leq", "stochastic order check");
  leq->add_option("--input", g.input)->required();
  auto* choquet = app.add_subcommand("choquet", "exact Choquet integral");
  choquet->add_option("--input", g.input)->required();
  auto* decompose = app.add_subcommand("decompose", "capacity decomposition");
  decompose->add_option("--input", g.input)->required();
  auto* witness = app.add_subcommand("witness", "sandwich witness construction");
  witness->add_option("--input", g.input)->required();
  auto* counter = app.add_subcommand("counterexample", "weak-vs-Scott separation witness");
  std::vector<std::string> tokens;
  counter->add_option("tokens", tokens, "E={0,1} r=1/2 ...");
  auto* selftest = app.add_subcommand("selftest", "run every property suite");
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (order->parsed()) return cmd_order(g);
    if (leq->parsed()) return cmd_leq(g);
    if (choquet->parsed()) return cmd_choquet(g);
    if (decompose->parsed()) return cmd_decompose(g);
    if (witness->parsed()) return cmd_witness(g);
    if (counter->parsed()) return cmd_counterexample(g, tokens);
    if (selftest->parsed()) return cmd_selftest(g);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
