#include "ordval/powerdomain.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>

#include "ordval/errors.hpp"

namespace ordval {

bool member_weak_open(const SimpleValuation& mu, const WeakOpen& w, const FinitePoset& p) {
  if (!mass_admissible(w.flavor, mu.mass())) return false;
  for (const SubbasicOpen& s : w.conjuncts)
    if (!s.contains(mu)) return false;
  return true;
}

SimpleValuation reduce_to_simple(const SimpleValuation& nu, const WeakOpen& w,
                                 const FinitePoset& p) {
  if (!member_weak_open(nu, w, p))
    throw NotMemberError("valuation is not in the weak open");
  // Every valuation on a finite space is simple already.
  return nu;
}

Constants choose_constants(const SimpleValuation& nu,
                           const std::vector<SubbasicOpen>& conjuncts) {
  Constants c;
  Rational max_ratio = 0;
  for (const SubbasicOpen& s : conjuncts) {
    if (s.r <= 0) throw PreconditionError("conjunct threshold must be positive");
    const Rational v = nu.value(s.u);
    if (v <= s.r) throw PreconditionError("nu(U_i) must exceed r_i");
    max_ratio = std::max(max_ratio, Rational(s.r / v));
  }
  c.a = (1 + max_ratio) / 2;
  if (!(c.a > 0 && c.a < 1)) throw std::logic_error("a outside (0,1)");
  for (const SubbasicOpen& s : conjuncts) {
    const Rational v = nu.value(s.u);
    Rational si = (c.a * v + s.r) / 2;
    if (!(c.a * v > si && si > s.r)) throw std::logic_error("a nu(U_i) > s_i > r_i failed");
    c.s.push_back(si);
  }
  return c;
}

namespace {

std::vector<int> support_points(const SimpleValuation& nu) {
  std::vector<int> a;
  for (const auto& [x, w] : nu.weights()) a.push_back(x);
  return a;
}

}  // namespace

LocalBases construct_Bx(const FinitePoset& p, const SimpleValuation& nu,
                        const std::vector<SubbasicOpen>& conjuncts) {
  std::vector<int> a_pts = support_points(nu);
  const Mask a_mask = nu.support();
  // Course-of-values order: number of elements of A below x, ascending.
  std::stable_sort(a_pts.begin(), a_pts.end(), [&](int x, int y) {
    return mask_count(p.down_of(x) & a_mask) < mask_count(p.down_of(y) & a_mask);
  });

  LocalBases bases;
  const Mask full = p.full_mask();
  for (int x : a_pts) {
    Mask sx = full;
    for (const SubbasicOpen& s : conjuncts)
      if (mask_contains(s.u, x)) sx &= s.u;  // i in I_x
    sx &= ~downward_closure(p, a_mask & ~p.up_of(x));
    for (int y : a_pts)
      if (y != x && p.leq(y, x) && bases.v.count(y)) sx &= bases.v.at(y);
    const Mask bx = minimal_elements(p, sx);
    const OpenSet vx = interior(p, upward_closure(p, bx));
    if (!mask_contains(vx, x)) throw std::logic_error("x not in V_x");
    if (vx != sx) throw std::logic_error("V_x differs from its defining open");
    bases.b[x] = bx;
    bases.v[x] = vx;
  }

  // Stated postconditions, checked literally.
  for (int x : a_pts) {
    for (size_t i = 0; i < conjuncts.size(); ++i)
      if (mask_contains(conjuncts[i].u, x) && !mask_subset(bases.b[x], conjuncts[i].u))
        throw std::logic_error("B_x escapes U_i");
    for (int y : a_pts) {
      if (p.leq(x, y)) {
        Mask up_by = upward_closure(p, bases.b[y]);
        Mask up_bx = upward_closure(p, bases.b[x]);
        if (!mask_subset(up_by, bases.v[x]) || !mask_subset(bases.v[x], up_bx))
          throw std::logic_error("up B_y inside V_x inside up B_x failed");
      }
      if (mask_contains(bases.v[y], x) != p.leq(y, x))
        throw std::logic_error("x in V_y iff y <= x failed");
    }
  }
  return bases;
}

WeakOpen build_V(const FinitePoset& p, const SimpleValuation& nu, const Rational& a,
                 const LocalBases& bases, Flavor flavor) {
  std::vector<int> a_pts = support_points(nu);
  const int k = static_cast<int>(a_pts.size());
  WeakOpen v;
  v.flavor = flavor;
  for (Mask sel = 0; sel < (Mask{1} << k); ++sel) {
    Mask b = 0;
    for (int i = 0; i < k; ++i)
      if (mask_contains(sel, i)) b |= mask_single(a_pts[i]);
    // Upward-closed within A only.
    bool up_in_a = true;
    for (int x : a_pts)
      for (int y : a_pts)
        if (mask_contains(b, x) && p.leq(x, y) && !mask_contains(b, y)) up_in_a = false;
    if (!up_in_a) continue;
    SubbasicOpen conj;
    conj.mode = SubbasicOpen::Mode::WayBelow;
    conj.u = 0;
    conj.r = 0;
    for (int x : a_pts)
      if (mask_contains(b, x)) {
        conj.u |= bases.v.at(x);
        conj.r += nu.weight(x);
      }
    conj.r *= a;
    v.conjuncts.push_back(conj);
  }
  return v;
}

bool check_capacity_domination(const SimpleValuation& mu, const SimpleCapacity& kappa,
                               const FinitePoset& p) {
  return stochastic_leq(kappa, mu, p).holds;
}

Int choose_N(Mask z, const std::vector<Rational>& s,
             const std::vector<SubbasicOpen>& conjuncts) {
  Int n = 1;
  const int zsize = mask_count(z);
  for (size_t i = 0; i < conjuncts.size(); ++i) {
    const Rational gap = s[i] - conjuncts[i].r;
    if (gap <= 0) throw PreconditionError("s_i must exceed r_i");
    n = std::max(n, ceil_rational(Rational(zsize) / gap));
  }
  return n;
}

namespace {

std::vector<int> mask_members(Mask m) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (mask_contains(m, i)) out.push_back(i);
  return out;
}

}  // namespace

std::vector<SimpleValuation> enumerate_E(const FinitePoset& p, const StrategySpace& sigma,
                                         const Rational& a, const Int& big_n, Mask z,
                                         const EnumerateLimits& limits) {
  if (z == 0) return {SimpleValuation::zero()};
  const std::vector<int> zs = mask_members(z);
  const int k = static_cast<int>(zs.size());
  const int nf = sigma.strategy_count();

  // Coefficient vectors of the pure strategies; c_z is affine in beta, so its
  // range over the simplex is spanned by these vertices.
  std::vector<std::vector<Rational>> vertex(nf, std::vector<Rational>(k, Rational(0)));
  for (int f = 0; f < nf; ++f) {
    SimpleValuation pure = sigma.pure_mixture(f, a);
    for (int i = 0; i < k; ++i) vertex[f][i] = pure.weight(zs[i]);
  }
  Rational total_mass = 0;
  for (const Rational& w : sigma.weights) total_mass += w;
  total_mass *= a;

  std::vector<Int> lo(k), hi(k);
  for (int i = 0; i < k; ++i) {
    Int l = floor_scaled(vertex[0][i], big_n), h = l;
    for (int f = 1; f < nf; ++f) {
      Int v = floor_scaled(vertex[f][i], big_n);
      l = std::min(l, v);
      h = std::max(h, v);
    }
    lo[i] = l;
    hi[i] = h;
  }
  const Rational sum_target = total_mass * Rational(big_n);

  auto in_window = [&](const std::vector<Int>& g) {
    Int sum = 0;
    for (int i = 0; i < k; ++i) {
      if (g[i] < lo[i] || g[i] > hi[i]) return false;
      sum += g[i];
    }
    // floor coordinates of a point on the mass hyperplane satisfy
    // sum_target - k < sum <= sum_target.
    return Rational(sum) <= sum_target && Rational(sum) > sum_target - k;
  };

  // Strict cell test: some beta with g/N <= c(beta) < (g+1)/N componentwise.
  auto cell_feasible = [&](const std::vector<Int>& g) {
    LinearProgram lp;
    lp.set_vars(nf + 1, true);
    lp.objective(nf) = 1;
    lp.free_var[nf] = true;
    for (int i = 0; i < k; ++i) {
      RVector row_lo = RVector::Zero(nf + 1);
      RVector row_hi = RVector::Zero(nf + 1);
      for (int f = 0; f < nf; ++f) {
        row_lo(f) = vertex[f][i];
        row_hi(f) = vertex[f][i];
      }
      row_hi(nf) = 1;
      lp.add_constraint(row_lo, Relation::Ge, Rational(g[i], big_n));
      lp.add_constraint(row_hi, Relation::Le, Rational(Int(g[i] + 1), big_n));
    }
    RVector simplex_row = RVector::Ones(nf + 1);
    simplex_row(nf) = 0;
    lp.add_constraint(simplex_row, Relation::Eq, 1);
    LpSolution sol = solve_lp(lp);
    return sol.status == LpStatus::Optimal && sol.objective > 0;
  };

  // The floor image of a convex set is connected under king moves, so a BFS
  // from the pure-strategy cells reaches every cell of E.
  std::set<std::vector<Int>> visited, accepted;
  std::deque<std::vector<Int>> queue;
  for (int f = 0; f < nf; ++f) {
    std::vector<Int> g(k);
    for (int i = 0; i < k; ++i) g[i] = floor_scaled(vertex[f][i], big_n);
    if (visited.insert(g).second) queue.push_back(g);
  }
  long tested = 0;
  while (!queue.empty()) {
    std::vector<Int> g = queue.front();
    queue.pop_front();
    if (++tested > limits.max_candidates)
      throw SizeError("candidate grid for E exceeds the configured cap");
    if (!in_window(g) || !cell_feasible(g)) continue;
    accepted.insert(g);
    std::vector<Int> nb(k);
    std::vector<int> step(k, -1);
    while (true) {
      bool all_zero = true;
      for (int i = 0; i < k; ++i) {
        nb[i] = g[i] + step[i];
        if (step[i] != 0) all_zero = false;
      }
      if (!all_zero && in_window(nb) && !visited.count(nb)) {
        visited.insert(nb);
        queue.push_back(nb);
      }
      int i = 0;
      while (i < k && step[i] == 1) step[i++] = -1;
      if (i == k) break;
      ++step[i];
    }
  }

  std::vector<SimpleValuation> e_set;
  for (const auto& g : accepted) {
    SimpleValuation v;
    for (int i = 0; i < k; ++i)
      if (g[i] > 0) v.set_weight(zs[i], Rational(g[i], big_n));
    e_set.push_back(v);
  }
  std::sort(e_set.begin(), e_set.end());
  return e_set;
}

namespace {

// Enumerates valuations with weights that are multiples of 1/grid and total
// mass at most cap, visiting each exactly once.
template <typename Fn>
void for_each_grid_valuation(const FinitePoset& p, int grid, const Int& cap_units, Fn&& fn) {
  std::vector<Int> units(p.size(), 0);
  SimpleValuation current;
  auto rec = [&](auto&& self, int i, Int remaining) -> void {
    if (i == p.size()) {
      fn(current);
      return;
    }
    for (Int u = 0; u <= remaining; ++u) {
      if (u > 0) current.set_weight(i, Rational(u, grid));
      self(self, i + 1, remaining - u);
    }
    current.set_weight(i, 0);
  };
  rec(rec, 0, cap_units);
}

}  // namespace

WitnessBundle verify_sandwich(const FinitePoset& p, const SimpleValuation& nu,
                              const std::vector<SubbasicOpen>& u_conjuncts,
                              Flavor flavor, int grid, const EnumerateLimits& limits) {
  if (grid < 1) throw PreconditionError("grid must be at least 1");
  WeakOpen ambient{u_conjuncts, flavor};
  WitnessBundle wb;
  wb.nu = reduce_to_simple(nu, ambient, p);
  wb.u_conjuncts = u_conjuncts;
  wb.flavor = flavor;

  Constants c = choose_constants(wb.nu, u_conjuncts);
  wb.a = c.a;
  wb.s = c.s;
  wb.bases = construct_Bx(p, wb.nu, u_conjuncts);

  std::vector<int> points;
  std::vector<Rational> scaled_weights;
  std::vector<Mask> choice_sets;
  for (const auto& [x, w] : wb.nu.weights()) {
    points.push_back(x);
    scaled_weights.push_back(wb.a * w);
    choice_sets.push_back(wb.bases.b.at(x));
    wb.kappa.add_term(wb.a * w, wb.bases.b.at(x));
    wb.z |= wb.bases.b.at(x);
  }
  wb.big_n = choose_N(wb.z, wb.s, u_conjuncts);
  wb.v_open = build_V(p, wb.nu, wb.a, wb.bases, flavor);

  StrategySpace sigma = StrategySpace::build(points, scaled_weights, choice_sets);
  wb.e_set = enumerate_E(p, sigma, 1, wb.big_n, wb.z, limits);

  wb.nu_in_v = member_weak_open(wb.nu, wb.v_open, p);

  const Rational z_gap = Rational(mask_count(wb.z)) / Rational(wb.big_n);
  wb.e_in_u = true;
  bool rounding_bound = true;
  for (const SimpleValuation& e : wb.e_set) {
    if (!member_weak_open(e, ambient, p)) wb.e_in_u = false;
    for (size_t i = 0; i < u_conjuncts.size(); ++i)
      if (!(e.value(u_conjuncts[i].u) > wb.s[i] - z_gap)) rounding_bound = false;
  }

  // Grid sweep: every member of V must dominate the constructive witness
  // produced by decompose-then-round, and that witness must be listed in E.
  Int cap_units;
  if (flavor == Flavor::Sub)
    cap_units = grid;
  else
    cap_units = std::max(Int(1), ceil_rational(wb.nu.mass())) * grid;
  wb.grid_covered = true;
  for_each_grid_valuation(p, grid, cap_units, [&](const SimpleValuation& mu) {
    ++wb.grid_points;
    if (!member_weak_open(mu, wb.v_open, p)) return;
    ++wb.grid_members;
    try {
      Decomposition d = decompose_capacity(points, scaled_weights, choice_sets, mu, p);
      SimpleValuation witness = round_valuation(d.mixture, wb.big_n);
      if (!stochastic_leq(witness, mu, p).holds) wb.grid_covered = false;
      if (!std::binary_search(wb.e_set.begin(), wb.e_set.end(), witness))
        wb.grid_covered = false;
    } catch (const PreconditionError&) {
      // kappa <= mu is guaranteed for members of V; reaching here means the
      // domination lemma failed on this point.
      wb.grid_covered = false;
    }
  });

  wb.lemma_checks = wb.nu_in_v && rounding_bound &&
                    check_capacity_domination(wb.nu, wb.kappa, p);
  return wb;
}

PointedPoset PointedPoset::make(FinitePoset p, int bottom) {
  for (int i = 0; i < p.size(); ++i)
    if (!p.leq(bottom, i)) throw PreconditionError("bottom is not a least element");
  return PointedPoset{std::move(p), bottom};
}

SimpleValuation lift_minus(const SimpleValuation& nu, const PointedPoset& pp) {
  if (nu.mass() != 1) throw PreconditionError("lift_minus needs a probability valuation");
  SimpleValuation r;
  const Mask below = pp.p.down_of(pp.bottom);
  for (const auto& [x, w] : nu.weights())
    if (!mask_contains(below, x)) r.set_weight(x, w);
  return r;
}

SimpleValuation lift_plus(const SimpleValuation& mu, const PointedPoset& pp) {
  const Rational m = mu.mass();
  if (m > 1) throw PreconditionError("lift_plus needs a subprobability valuation");
  if (mu.weight(pp.bottom) != 0)
    throw PreconditionError("input valuation already charges bottom");
  SimpleValuation r = mu;
  r.set_weight(pp.bottom, 1 - m);
  return r;
}

RemovedBottom remove_bottom(const PointedPoset& pp) {
  RemovedBottom rb;
  rb.to_sub.assign(pp.p.size(), -1);
  std::vector<std::string> names;
  for (int i = 0; i < pp.p.size(); ++i) {
    if (i == pp.bottom) continue;
    rb.to_sub[i] = static_cast<int>(rb.to_full.size());
    rb.to_full.push_back(i);
    names.push_back(pp.p.name(i));
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i : rb.to_full)
    for (int j : rb.to_full)
      if (i != j && pp.p.leq(i, j)) pairs.emplace_back(pp.p.name(i), pp.p.name(j));
  rb.p = FinitePoset::build(names, pairs);
  return rb;
}

WitnessBundle verify_sandwich_prob(const PointedPoset& pp, const SimpleValuation& nu,
                                   const std::vector<SubbasicOpen>& u_conjuncts,
                                   int grid, const EnumerateLimits& limits) {
  const Mask below = pp.p.down_of(pp.bottom);
  for (const SubbasicOpen& s : u_conjuncts)
    if ((s.u & below) != 0)
      throw PreconditionError("prob-flavor conjunct opens must be proper");
  SimpleValuation reduced = lift_minus(nu, pp);
  if (lift_plus(reduced, pp) != nu) throw std::logic_error("lifting round trip failed");

  RemovedBottom rb = remove_bottom(pp);
  auto map_mask = [&](Mask m) {
    Mask out = 0;
    for (int i = 0; i < pp.p.size(); ++i)
      if (mask_contains(m, i) && rb.to_sub[i] >= 0) out |= mask_single(rb.to_sub[i]);
    return out;
  };
  SimpleValuation mapped;
  for (const auto& [x, w] : reduced.weights()) mapped.set_weight(rb.to_sub[x], w);
  std::vector<SubbasicOpen> mapped_conjuncts;
  for (const SubbasicOpen& s : u_conjuncts)
    mapped_conjuncts.push_back({map_mask(s.u), s.r, s.mode});
  return verify_sandwich(rb.p, mapped, mapped_conjuncts, Flavor::Sub, grid, limits);
}

}  // namespace ordval
