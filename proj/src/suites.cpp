#include "ordval/suites.hpp"

#include <algorithm>

#include "ordval/alpha_nat.hpp"
#include "ordval/errors.hpp"
#include "ordval/lp.hpp"
#include "ordval/powerdomain.hpp"

namespace ordval {

FinitePoset random_poset(Rng& rng, int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(1, 3)) pairs.emplace_back(names[i], names[j]);
  return FinitePoset::build(names, pairs);
}

SimpleValuation random_valuation(Rng& rng, const FinitePoset& p, int max_num, int max_den) {
  SimpleValuation v;
  for (int i = 0; i < p.size(); ++i)
    if (rng.chance(1, 2)) v.set_weight(i, rng.rational(max_num, max_den));
  return v;
}

namespace {

// Random non-empty subset of the carrier with at most max_size members.
Mask random_subset(Rng& rng, const FinitePoset& p, int max_size) {
  const int size = 1 + rng.below(std::min(max_size, p.size()));
  Mask m = 0;
  while (mask_count(m) < size) m |= mask_single(rng.below(p.size()));
  return m;
}

bool mixture_below_everywhere(const SimpleValuation& mix, const SimpleValuation& nu,
                              const FinitePoset& p) {
  for (OpenSet u : enumerate_opens(p))
    if (mix.value(u) > nu.value(u)) return false;
  return true;
}

}  // namespace

SuiteResult suite_decomposition(std::uint64_t seed, const SuiteConfig& cfg) {
  SuiteResult res{"decomposition"};
  Rng rng(seed);
  for (int trial = 0; trial < 200; ++trial) {
    ++res.total;
    const int n = 2 + rng.below(5);
    FinitePoset p = random_poset(rng, n);
    const int asize = 1 + rng.below(3);
    Mask amask = random_subset(rng, p, asize);
    std::vector<int> points;
    std::vector<Rational> weights;
    std::vector<Mask> choice_sets;
    for (int x = 0; x < n; ++x)
      if (mask_contains(amask, x)) {
        points.push_back(x);
        weights.push_back(rng.rational(4, 4));
        choice_sets.push_back(random_subset(rng, p, 3));
      }
    // kappa <= any mixture of pure strategies, so inflating one such mixture
    // yields an admissible nu.
    StrategySpace sigma = StrategySpace::build(points, weights, choice_sets);
    SimpleValuation nu = sigma.pure_mixture(rng.below(sigma.strategy_count()), 1);
    if (rng.chance(2, 3)) nu = add(nu, random_valuation(rng, p, 3, 3));
    try {
      Decomposition d = decompose_capacity(points, weights, choice_sets, nu, p);
      Rational total_mass = 0;
      for (const Rational& w : weights) total_mass += w;
      bool ok = mixture_below_everywhere(d.mixture, nu, p) && d.mixture.mass() == total_mass;
      if (ok && trial % 10 == 0) {
        // Feasibility is scale-invariant; spot-check on a doubled instance.
        std::vector<Rational> w2 = weights;
        for (Rational& w : w2) w *= 2;
        Decomposition d2 = decompose_capacity(points, w2, choice_sets, scale(2, nu), p);
        ok = mixture_below_everywhere(d2.mixture, scale(2, nu), p);
      }
      if (!ok) ++res.failed;
    } catch (const std::exception& e) {
      ++res.failed;
      res.notes.push_back(std::string("trial ") + std::to_string(trial) + ": " + e.what());
    }
  }
  return res;
}

SuiteResult suite_minimax(std::uint64_t seed, const SuiteConfig&) {
  SuiteResult res{"minimax"};
  Rng rng(seed);
  for (int trial = 0; trial < 200; ++trial) {
    ++res.total;
    const int rows = 1 + rng.below(5), cols = 1 + rng.below(5);
    GameMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        Rational e = rng.rational(9, 9);
        m(i, j) = rng.chance(1, 2) ? e : Rational(-e);
      }
    try {
      matrix_game(m);  // throws if the two LP values differ or fail to certify
    } catch (const std::exception& e) {
      ++res.failed;
      res.notes.push_back(std::string("trial ") + std::to_string(trial) + ": " + e.what());
    }
  }
  return res;
}

namespace {

struct SandwichInstance {
  FinitePoset p;
  SimpleValuation nu;
  std::vector<SubbasicOpen> conjuncts;
};

// The grid for E has roughly N^d cells (d = spread of the local bases), so a
// draw whose step count N lands in the far tail is redrawn.
bool instance_tractable(const SandwichInstance& inst) {
  if (inst.conjuncts.empty()) return true;
  try {
    Constants c = choose_constants(inst.nu, inst.conjuncts);
    LocalBases lb = construct_Bx(inst.p, inst.nu, inst.conjuncts);
    Mask z = 0;
    for (const auto& [x, b] : lb.b) z |= b;
    return choose_N(z, c.s, inst.conjuncts) <= 48;
  } catch (const std::exception&) {
    return true;  // let the suite surface the failure
  }
}

SandwichInstance random_sandwich_instance_once(Rng& rng, Flavor flavor) {
  SandwichInstance inst;
  // Sizes keep N = ceil(|Z| / min gap) small enough for the cell walk over E;
  // large thresholds shrink the gap s - r and blow the 1/N grid up.
  const int n = 2 + rng.below(3);
  inst.p = random_poset(rng, n);
  // At most two support points with weights up to 1/2 keeps the mass of a
  // sub-flavored instance inside [0, 1].
  const int asize = 1 + rng.below(flavor == Flavor::Sub ? 2 : 3);
  Mask amask = random_subset(rng, inst.p, asize);
  for (int x = 0; x < n; ++x)
    if (mask_contains(amask, x)) {
      Rational w = flavor == Flavor::Sub ? Rational(1 + rng.below(2), 4)
                                         : Rational(1 + rng.below(2), 2);
      inst.nu.set_weight(x, w);
    }
  const int nconj = 1 + rng.below(2);
  const Rational ratios[3] = {Rational(1, 8), Rational(1, 4), Rational(1, 2)};
  std::vector<int> sup;
  for (const auto& [x, w] : inst.nu.weights()) sup.push_back(x);
  for (int i = 0; i < nconj; ++i) {
    Mask seedset = random_subset(rng, inst.p, 2) |
                   mask_single(sup[rng.below(static_cast<int>(sup.size()))]);
    SubbasicOpen s;
    s.u = upward_closure(inst.p, seedset);
    s.r = inst.nu.value(s.u) * ratios[rng.below(3)];
    s.mode = SubbasicOpen::Mode::StrictGt;
    if (s.r > 0) inst.conjuncts.push_back(s);
  }
  return inst;
}

SandwichInstance random_sandwich_instance(Rng& rng, Flavor flavor) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    SandwichInstance inst = random_sandwich_instance_once(rng, flavor);
    if (instance_tractable(inst)) return inst;
  }
  // Certainly tractable within the redraw budget: a redraw is needed only
  // when some gap is tiny, which takes several unlucky ratio picks in a row.
  SandwichInstance inst = random_sandwich_instance_once(rng, flavor);
  inst.conjuncts.clear();
  return inst;
}

}  // namespace

std::pair<SuiteResult, SuiteResult> suite_sandwich(std::uint64_t seed,
                                                   const SuiteConfig& cfg) {
  SuiteResult res{"sandwich"};
  SuiteResult lemmas{"lemma-postconditions"};
  Rng rng(seed);
  for (Flavor flavor : {Flavor::Plain, Flavor::Sub}) {
    for (int trial = 0; trial < 100; ++trial) {
      ++res.total;
      ++lemmas.total;
      SandwichInstance inst = random_sandwich_instance(rng, flavor);
      try {
        WitnessBundle wb =
            verify_sandwich(inst.p, inst.nu, inst.conjuncts, flavor, cfg.grid);
        if (!(wb.nu_in_v && wb.e_in_u && wb.grid_covered)) ++res.failed;
        if (!wb.lemma_checks) ++lemmas.failed;
      } catch (const std::exception& e) {
        ++res.failed;
        ++lemmas.failed;
        res.notes.push_back(std::string("trial ") + std::to_string(trial) + ": " + e.what());
      }
    }
  }
  // Probability flavor, served through the lifting homeomorphism.
  for (int trial = 0; trial < 40; ++trial) {
    ++res.total;
    ++lemmas.total;
    const int n = 2 + rng.below(2);
    FinitePoset base = random_poset(rng, n);
    std::vector<std::string> names{"bot"};
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < n; ++i) {
      names.push_back(base.name(i));
      pairs.emplace_back("bot", base.name(i));
      for (int j = 0; j < n; ++j)
        if (i != j && base.leq(i, j)) pairs.emplace_back(base.name(i), base.name(j));
    }
    PointedPoset pp = PointedPoset::make(FinitePoset::build(names, pairs), 0);
    SimpleValuation off_bottom;
    for (int i = 1; i <= n; ++i)
      if (rng.chance(1, 2)) off_bottom.set_weight(i, Rational(1 + rng.below(2), 6));
    SimpleValuation nu = lift_plus(off_bottom, pp);
    std::vector<SubbasicOpen> conjuncts;
    if (!off_bottom.is_zero()) {
      std::vector<int> sup;
      for (const auto& [x, w] : off_bottom.weights()) sup.push_back(x);
      SubbasicOpen s;
      s.u = upward_closure(pp.p, mask_single(sup[rng.below(static_cast<int>(sup.size()))]));
      s.r = nu.value(s.u) / 4;
      s.mode = SubbasicOpen::Mode::StrictGt;
      if (s.r > 0) conjuncts.push_back(s);
    }
    try {
      WitnessBundle wb = verify_sandwich_prob(pp, nu, conjuncts, cfg.grid);
      if (!(wb.nu_in_v && wb.e_in_u && wb.grid_covered)) ++res.failed;
      if (!wb.lemma_checks) ++lemmas.failed;
    } catch (const std::exception& e) {
      ++res.failed;
      ++lemmas.failed;
      res.notes.push_back(std::string("prob trial ") + std::to_string(trial) + ": " + e.what());
    }
  }
  return {res, lemmas};
}

SuiteResult suite_lifting(std::uint64_t seed, const SuiteConfig&) {
  SuiteResult res{"lifting"};
  Rng rng(seed);
  for (int trial = 0; trial < 200; ++trial) {
    ++res.total;
    const int n = 1 + rng.below(5);
    FinitePoset base = random_poset(rng, n);
    std::vector<std::string> names{"bot"};
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < n; ++i) {
      names.push_back(base.name(i));
      pairs.emplace_back("bot", base.name(i));
      for (int j = 0; j < n; ++j)
        if (i != j && base.leq(i, j)) pairs.emplace_back(base.name(i), base.name(j));
    }
    PointedPoset pp = PointedPoset::make(FinitePoset::build(names, pairs), 0);

    SimpleValuation mu;  // subprobability, off bottom
    for (int i = 1; i <= n; ++i)
      if (rng.chance(1, 2)) mu.set_weight(i, Rational(1, 2 * n));
    SimpleValuation nu = lift_plus(mu, pp);

    bool ok = nu.mass() == 1 && lift_minus(nu, pp) == mu &&
              lift_plus(lift_minus(nu, pp), pp) == nu;
    // Membership transport on every proper open, thresholds bracketing the
    // attained value.
    const Mask below = pp.p.down_of(pp.bottom);
    for (OpenSet u : enumerate_opens(pp.p)) {
      if ((u & below) != 0) continue;  // not a proper open
      for (const Rational& r : {Rational(1, 4), Rational(1, 2), nu.value(u)}) {
        if (r == 0) continue;
        const bool in_prob = nu.value(u) > r;
        const bool in_sub = lift_minus(nu, pp).value(u) > r;
        if (in_prob != in_sub) ok = false;
      }
    }
    if (!ok) ++res.failed;
  }
  return res;
}

SuiteResult suite_counterexample(std::uint64_t seed, const SuiteConfig&) {
  SuiteResult res{"counterexample"};
  Rng rng(seed);
  for (int trial = 0; trial < 300; ++trial) {
    ++res.total;
    std::vector<std::pair<std::set<std::uint64_t>, Rational>> conjuncts;
    const int m = 1 + rng.below(3);
    for (int i = 0; i < m; ++i) {
      std::set<std::uint64_t> e;
      const int size = rng.below(9);
      for (int k = 0; k < size; ++k) e.insert(rng.below(13));
      const int den = 2 + rng.below(8);
      conjuncts.emplace_back(e, Rational(1 + rng.below(den - 1), den));
    }
    try {
      CounterexampleWitness w = counterexample_witness(conjuncts);
      bool inf_inside = true;  // delta_infinity must lie in the neighborhood
      for (const auto& [e, r] : conjuncts)
        if (!(eval_alpha(DiscreteValuation::dirac_infinity(), AlphaOpen::cofinite(e)) > r))
          inf_inside = false;
      if (!(inf_inside && w.in_every_conjunct && !w.scott_member &&
            w.point.a_inf == 0))
        ++res.failed;
    } catch (const std::exception& e) {
      ++res.failed;
      res.notes.push_back(std::string("trial ") + std::to_string(trial) + ": " + e.what());
    }
  }
  return res;
}

SuiteResult suite_oracle_agreement(std::uint64_t seed, const SuiteConfig& cfg) {
  SuiteResult res{"oracle-agreement"};
  Rng rng(seed);
  for (int trial = 0; trial < 500; ++trial) {
    ++res.total;
    const int n = 2 + rng.below(std::max(1, cfg.max_poset_size - 1));
    FinitePoset p = random_poset(rng, n);
    SimpleValuation mu = random_valuation(rng, p);
    SimpleValuation nu = random_valuation(rng, p);
    // Bias towards comparable pairs now and then.
    if (rng.chance(1, 3)) nu = add(mu, random_valuation(rng, p, 2, 2));
    if (stochastic_leq(mu, nu, p).holds != stochastic_leq_transport(mu, nu, p))
      ++res.failed;
  }
  // Discrete valuations on the compactified naturals: coefficientwise order
  // against evaluation on sampled opens (decisive opens included, so the
  // sampled comparison is exact).
  for (int trial = 0; trial < 200; ++trial) {
    ++res.total;
    DiscreteValuation a, b;
    for (int k = 0; k < 4; ++k) {
      if (rng.chance(1, 2)) a.weights[rng.below(10)] = rng.rational(3, 3);
      if (rng.chance(1, 2)) b.weights[rng.below(10)] = rng.rational(3, 3);
    }
    if (rng.chance(1, 2)) a.a_inf = rng.rational(2, 3);
    if (rng.chance(1, 2)) b.a_inf = rng.rational(2, 3);
    if (rng.chance(1, 4)) {  // force a comparable pair sometimes
      b = a;
      b.a_inf += 1;
    }
    std::vector<AlphaOpen> opens;
    for (std::uint64_t x = 0; x < 11; ++x) opens.push_back(AlphaOpen::finite({x}));
    std::set<std::uint64_t> head;
    for (std::uint64_t x = 0; x < 11; ++x) head.insert(x);
    opens.push_back(AlphaOpen::cofinite(head));  // isolates both infinity atoms
    for (int k = 0; k < 6; ++k) {
      std::set<std::uint64_t> e;
      for (int j = 0; j < 3; ++j) e.insert(rng.below(12));
      opens.push_back(rng.chance(1, 2) ? AlphaOpen::finite(e) : AlphaOpen::cofinite(e));
    }
    bool eval_leq = true;
    for (const AlphaOpen& u : opens)
      if (eval_alpha(a, u) > eval_alpha(b, u)) eval_leq = false;
    bool coeff_leq = leq_discrete(a, b);
    bool ok = coeff_leq == eval_leq;
    try {
      ok = ok && tail_mass(a) == a.a_inf && tail_mass(b) == b.a_inf;
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) ++res.failed;
  }
  return res;
}

SuiteResult suite_structural(std::uint64_t seed, const SuiteConfig& cfg) {
  SuiteResult res{"structural"};
  Rng rng(seed);

  // Sobriety of every sampled finite T0 poset, with the greatest-element
  // characterization of irreducible closed sets as a cross-check.
  for (int trial = 0; trial < 200; ++trial) {
    ++res.total;
    const int n = 1 + rng.below(cfg.max_poset_size);
    FinitePoset p = random_poset(rng, n);
    SobrietyResult sr = is_sober(p);
    bool ok = sr.sober;
    for (Mask c : irreducible_closed_sets(p)) {
      int greatest = -1;
      for (int x = 0; x < n; ++x)
        if (mask_contains(c, x) && mask_subset(c, p.down_of(x))) greatest = x;
      if (greatest < 0) ok = false;
      else if (sr.closure_points.at(c) != greatest) ok = false;
    }
    if (!ok) ++res.failed;
  }

  // Topology axioms and closure/interior laws.
  for (int trial = 0; trial < 30; ++trial) {
    ++res.total;
    const int n = 1 + rng.below(6);
    FinitePoset p = random_poset(rng, n);
    std::vector<OpenSet> opens = enumerate_opens(p);
    bool ok = true;
    for (OpenSet u : opens)
      for (OpenSet v : opens) {
        if (!std::binary_search(opens.begin(), opens.end(), OpenSet(u | v))) ok = false;
        if (!std::binary_search(opens.begin(), opens.end(), OpenSet(u & v))) ok = false;
      }
    for (int k = 0; k < 8; ++k) {
      Mask s = static_cast<Mask>(rng.next()) & p.full_mask();
      Mask i1 = interior(p, s);
      if (!mask_subset(i1, s) || interior(p, i1) != i1 || !p.is_upward_closed(i1)) ok = false;
      Mask up = upward_closure(p, s);
      if (upward_closure(p, up) != up) ok = false;
      if (upward_closure(p, minimal_elements(p, s)) != up) ok = false;
      if (s != 0) {
        int x = 0;
        while (!mask_contains(s, x)) ++x;
        OpenSet u = upward_closure(p, s);
        Mask e = finitary_basis_at(p, x, u);
        Mask up_e = upward_closure(p, e);
        if (!(mask_contains(interior(p, up_e), x) && mask_subset(up_e, u))) ok = false;
      }
    }
    if (!ok) ++res.failed;
  }

  // On small carriers, the directed-family Scott condition degenerates to
  // upward closure; test the condition literally on every subset.
  for (int trial = 0; trial < 20; ++trial) {
    ++res.total;
    const int n = 1 + rng.below(5);
    FinitePoset p = random_poset(rng, n);
    bool ok = true;
    for (OpenSet u : enumerate_opens(p)) {
      for (Mask d = 1; d <= p.full_mask(); ++d) {
        bool directed = true;
        for (int i = 0; i < n && directed; ++i)
          for (int j = 0; j < n && directed; ++j) {
            if (!mask_contains(d, i) || !mask_contains(d, j)) continue;
            bool has_ub = false;
            for (int k = 0; k < n; ++k)
              if (mask_contains(d, k) && p.leq(i, k) && p.leq(j, k)) has_ub = true;
            if (!has_ub) directed = false;
          }
        if (!directed) continue;
        int top = -1;  // a finite directed set has a greatest element
        for (int k = 0; k < n; ++k)
          if (mask_contains(d, k) && mask_subset(d, p.down_of(k))) top = k;
        if (top < 0) { ok = false; continue; }
        if (mask_contains(u, top) && (d & u) == 0) ok = false;
      }
    }
    if (!ok) ++res.failed;
  }

  // Valuation and capacity evaluators: strict, monotone, modular (valuations
  // only); zero valuation below everything.
  for (int trial = 0; trial < 40; ++trial) {
    ++res.total;
    const int n = 2 + rng.below(5);
    FinitePoset p = random_poset(rng, n);
    SimpleValuation nu = random_valuation(rng, p);
    SimpleCapacity kappa;
    for (int k = 0; k < 1 + rng.below(3); ++k)
      kappa.add_term(rng.rational(3, 3), random_subset(rng, p, 3));
    std::vector<OpenSet> opens = enumerate_opens(p);
    bool ok = nu.value(0) == 0 && kappa.value(0) == 0;
    for (OpenSet u : opens)
      for (OpenSet v : opens) {
        if (nu.value(u) + nu.value(v) != nu.value(u | v) + nu.value(u & v)) ok = false;
        if (mask_subset(u, v) &&
            (nu.value(u) > nu.value(v) || kappa.value(u) > kappa.value(v)))
          ok = false;
      }
    if (!stochastic_leq(SimpleValuation::zero(), nu, p).holds) ok = false;
    if (!ok) ++res.failed;
  }

  // Choquet integral: linearity in h for valuations, the min formula for
  // simple capacities, and the characteristic-map identity.
  for (int trial = 0; trial < 40; ++trial) {
    ++res.total;
    const int n = 2 + rng.below(4);
    FinitePoset p = random_poset(rng, n);
    SimpleValuation nu = random_valuation(rng, p);
    auto random_step = [&] {
      StepFunction h;
      h.values.assign(n, Rational(0));
      for (int i = 0; i < n; ++i) h.values[i] = rng.rational(3, 2);
      // Monotone repair: propagate maxima upward.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (p.leq(i, j)) h.values[j] = std::max(h.values[j], h.values[i]);
      return h;
    };
    StepFunction h1 = random_step(), h2 = random_step();
    StepFunction hsum;
    hsum.values.assign(n, Rational(0));
    for (int i = 0; i < n; ++i) hsum.values[i] = h1.values[i] + h2.values[i];
    StepFunction hscaled;
    hscaled.values.assign(n, Rational(0));
    const Rational c = rng.rational(3, 2);
    for (int i = 0; i < n; ++i) hscaled.values[i] = c * h1.values[i];
    bool ok =
        choquet_integral(hsum, nu, p) ==
            choquet_integral(h1, nu, p) + choquet_integral(h2, nu, p) &&
        choquet_integral(hscaled, nu, p) == c * choquet_integral(h1, nu, p);
    for (OpenSet u : enumerate_opens(p)) {
      StepFunction chi;
      chi.values.assign(n, Rational(0));
      for (int i = 0; i < n; ++i)
        if (mask_contains(u, i)) chi.values[i] = 1;
      if (choquet_integral(chi, nu, p) != nu.value(u)) ok = false;
    }
    SimpleCapacity kappa;
    std::vector<std::pair<Rational, Mask>> kterms;
    for (int k = 0; k < 1 + rng.below(3); ++k) {
      Rational w = rng.rational(3, 3);
      Mask b = random_subset(rng, p, 3);
      kappa.add_term(w, b);
      kterms.emplace_back(w, b);
    }
    Rational min_formula = 0;
    for (const auto& [w, b] : kterms) {
      Rational best = -1;
      for (int y = 0; y < n; ++y)
        if (mask_contains(b, y) && (best < 0 || h1.values[y] < best)) best = h1.values[y];
      min_formula += w * best;
    }
    if (choquet_integral(h1, kappa, p) != min_formula) ok = false;
    if (!ok) ++res.failed;
  }

  // Choquet linearity genuinely fails for capacities: a fixed witness.
  {
    ++res.total;
    FinitePoset two = FinitePoset::build({"a", "b"}, {});
    SimpleCapacity u_ab;
    u_ab.add_term(1, 0b11);
    StepFunction ha{{Rational(1), Rational(0)}};
    StepFunction hb{{Rational(0), Rational(1)}};
    StepFunction hab{{Rational(1), Rational(1)}};
    if (choquet_integral(hab, u_ab, two) ==
        choquet_integral(ha, u_ab, two) + choquet_integral(hb, u_ab, two))
      ++res.failed;
  }

  // Rounding: below the original, per-open gap at most |support|/N.
  for (int trial = 0; trial < 40; ++trial) {
    ++res.total;
    const int n = 2 + rng.below(5);
    FinitePoset p = random_poset(rng, n);
    SimpleValuation nu = random_valuation(rng, p, 5, 7);
    const Int big_n = 1 + rng.below(9);
    SimpleValuation rounded = round_valuation(nu, big_n);
    bool ok = stochastic_leq(rounded, nu, p).holds;
    const Rational gap = Rational(mask_count(nu.support())) / Rational(big_n);
    for (OpenSet u : enumerate_opens(p))
      if (nu.value(u) - rounded.value(u) > gap) ok = false;
    if (!ok) ++res.failed;
  }

  return res;
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, const SuiteConfig& cfg) {
  std::vector<SuiteResult> all;
  all.push_back(suite_decomposition(seed, cfg));
  all.push_back(suite_minimax(seed, cfg));
  auto [sandwich, lemmas] = suite_sandwich(seed, cfg);
  all.push_back(sandwich);
  all.push_back(lemmas);
  all.push_back(suite_lifting(seed, cfg));
  all.push_back(suite_counterexample(seed, cfg));
  all.push_back(suite_oracle_agreement(seed, cfg));
  all.push_back(suite_structural(seed, cfg));
  return all;
}

}  // namespace ordval
