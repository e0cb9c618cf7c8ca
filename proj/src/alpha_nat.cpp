#include "ordval/alpha_nat.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordval/errors.hpp"

namespace ordval {

namespace {

std::set<std::uint64_t> diff(const std::set<std::uint64_t>& a,
                             const std::set<std::uint64_t>& b) {
  std::set<std::uint64_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

std::set<std::uint64_t> unite(const std::set<std::uint64_t>& a,
                              const std::set<std::uint64_t>& b) {
  std::set<std::uint64_t> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

std::set<std::uint64_t> intersect(const std::set<std::uint64_t>& a,
                                  const std::set<std::uint64_t>& b) {
  std::set<std::uint64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

}  // namespace

AlphaOpen set_union(const AlphaOpen& a, const AlphaOpen& b) {
  if (a.cofinite_ && b.cofinite_)
    return AlphaOpen::cofinite(intersect(a.exceptions_, b.exceptions_));
  if (a.cofinite_) return AlphaOpen::cofinite(diff(a.exceptions_, b.exceptions_));
  if (b.cofinite_) return AlphaOpen::cofinite(diff(b.exceptions_, a.exceptions_));
  return AlphaOpen::finite(unite(a.exceptions_, b.exceptions_));
}

AlphaOpen set_intersection(const AlphaOpen& a, const AlphaOpen& b) {
  if (a.cofinite_ && b.cofinite_)
    return AlphaOpen::cofinite(unite(a.exceptions_, b.exceptions_));
  if (a.cofinite_) return AlphaOpen::finite(diff(b.exceptions_, a.exceptions_));
  if (b.cofinite_) return AlphaOpen::finite(diff(a.exceptions_, b.exceptions_));
  return AlphaOpen::finite(intersect(a.exceptions_, b.exceptions_));
}

Rational DiscreteValuation::mass() const {
  Rational m = a_inf;
  for (const auto& [n, w] : weights) m += w;
  return m;
}

Rational eval_alpha(const DiscreteValuation& nu, const AlphaOpen& u) {
  Rational m = u.contains_infinity() ? nu.a_inf : Rational(0);
  for (const auto& [n, w] : nu.weights)
    if (u.contains(n)) m += w;
  return m;
}

bool leq_discrete(const DiscreteValuation& nu, const DiscreteValuation& mu) {
  if (nu.a_inf > mu.a_inf) return false;
  for (const auto& [n, w] : nu.weights) {
    auto it = mu.weights.find(n);
    if (it == mu.weights.end() || w > it->second) return false;
  }
  return true;
}

Rational tail_mass(const DiscreteValuation& nu) {
  std::uint64_t cut = 0;
  if (!nu.weights.empty()) cut = nu.weights.rbegin()->first + 1;
  std::set<std::uint64_t> below;
  for (std::uint64_t i = 0; i < cut; ++i) below.insert(i);
  const Rational tail = eval_alpha(nu, AlphaOpen::cofinite(below));
  if (tail != nu.a_inf) throw std::logic_error("tail mass differs from the infinity atom");
  return tail;
}

CounterexampleWitness counterexample_witness(
    const std::vector<std::pair<std::set<std::uint64_t>, Rational>>& conjuncts) {
  for (const auto& [e, r] : conjuncts)
    if (r <= 0 || r >= 1)
      throw PreconditionError("conjunct threshold must lie strictly between 0 and 1");

  std::set<std::uint64_t> excluded;
  for (const auto& [e, r] : conjuncts) excluded.insert(e.begin(), e.end());
  std::uint64_t n = 0;
  while (excluded.count(n)) ++n;

  CounterexampleWitness w;
  w.n = n;
  w.point = DiscreteValuation::dirac(n);
  w.in_every_conjunct = true;
  for (const auto& [e, r] : conjuncts) {
    const AlphaOpen u = AlphaOpen::cofinite(e);
    if (!(eval_alpha(w.point, u) > r)) w.in_every_conjunct = false;
  }
  w.scott_member = scott_V_member(w.point);
  return w;
}

}  // namespace ordval
