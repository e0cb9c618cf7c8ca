#include "ordval/valuation.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ordval/errors.hpp"

namespace ordval {

void SimpleValuation::set_weight(int x, const Rational& a) {
  if (a < 0) throw PreconditionError("negative weight");
  if (a == 0)
    w_.erase(x);
  else
    w_[x] = a;
}

Rational SimpleValuation::weight(int x) const {
  auto it = w_.find(x);
  return it == w_.end() ? Rational(0) : it->second;
}

Mask SimpleValuation::support() const {
  Mask s = 0;
  for (const auto& [x, a] : w_) s |= mask_single(x);
  return s;
}

Rational SimpleValuation::mass() const {
  Rational m = 0;
  for (const auto& [x, a] : w_) m += a;
  return m;
}

Rational SimpleValuation::value(Mask u) const {
  Rational m = 0;
  for (const auto& [x, a] : w_)
    if (mask_contains(u, x)) m += a;
  return m;
}

void SimpleCapacity::add_term(const Rational& weight, Mask b) {
  if (weight <= 0) throw PreconditionError("capacity term weight must be positive");
  if (b == 0) throw PreconditionError("capacity term set must be non-empty");
  terms_.emplace_back(weight, b);
}

Rational SimpleCapacity::value(Mask u) const {
  Rational m = 0;
  for (const auto& [a, b] : terms_)
    if (mask_subset(b, u)) m += a;
  return m;
}

Rational SimpleCapacity::total_weight() const {
  Rational m = 0;
  for (const auto& [a, b] : terms_) m += a;
  return m;
}

bool StepFunction::is_monotone(const FinitePoset& p) const {
  if (static_cast<int>(values.size()) != p.size()) return false;
  for (const Rational& v : values)
    if (v < 0) return false;
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if (p.leq(i, j) && values[i] > values[j]) return false;
  return true;
}

bool mass_admissible(Flavor flavor, const Rational& mass) {
  switch (flavor) {
    case Flavor::Plain:
      return true;
    case Flavor::Sub:
      return mass <= 1;
    case Flavor::Prob:
      return mass == 1;
  }
  return false;
}

namespace {

template <typename G>
LeqResult leq_over_opens(const G& mu, const SimpleValuation& nu, const FinitePoset& p) {
  for (OpenSet u : enumerate_opens(p)) {
    if (mu.value(u) > nu.value(u)) return {false, u};
  }
  return {true, std::nullopt};
}

}  // namespace

LeqResult stochastic_leq(const SimpleValuation& mu, const SimpleValuation& nu,
                         const FinitePoset& p) {
  return leq_over_opens(mu, nu, p);
}

LeqResult stochastic_leq(const SimpleCapacity& kappa, const SimpleValuation& nu,
                         const FinitePoset& p) {
  return leq_over_opens(kappa, nu, p);
}

namespace {

// Edmonds-Karp on the bipartite transport network with exact integer
// capacities.  Node layout: 0 = source, 1..n = mu side, n+1..2n = nu side,
// 2n+1 = sink.
bool max_flow_feasible(const std::vector<Int>& supply, const std::vector<Int>& demand,
                       const FinitePoset& p) {
  const int n = p.size();
  const int source = 0, sink = 2 * n + 1, nodes = 2 * n + 2;
  Int need = 0;
  for (const Int& s : supply) need += s;
  if (need == 0) return true;
  Int inf = need + 1;
  std::vector<std::vector<Int>> cap(nodes, std::vector<Int>(nodes, 0));
  for (int i = 0; i < n; ++i) {
    cap[source][1 + i] = supply[i];
    cap[n + 1 + i][sink] = demand[i];
    for (int j = 0; j < n; ++j)
      if (p.leq(i, j)) cap[1 + i][n + 1 + j] = inf;
  }
  Int flow = 0;
  while (true) {
    std::vector<int> prev(nodes, -1);
    prev[source] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && prev[sink] < 0) {
      int v = queue.front();
      queue.pop_front();
      for (int w = 0; w < nodes; ++w)
        if (prev[w] < 0 && cap[v][w] > 0) {
          prev[w] = v;
          queue.push_back(w);
        }
    }
    if (prev[sink] < 0) break;
    Int aug = inf;
    for (int v = sink; v != source; v = prev[v]) aug = std::min(aug, cap[prev[v]][v]);
    for (int v = sink; v != source; v = prev[v]) {
      cap[prev[v]][v] -= aug;
      cap[v][prev[v]] += aug;
    }
    flow += aug;
  }
  return flow == need;
}

}  // namespace

bool stochastic_leq_transport(const SimpleValuation& mu, const SimpleValuation& nu,
                              const FinitePoset& p) {
  Int denom_lcm = 1;
  for (const auto& [x, a] : mu.weights()) denom_lcm = lcm(denom_lcm, denominator(a));
  for (const auto& [x, a] : nu.weights()) denom_lcm = lcm(denom_lcm, denominator(a));
  std::vector<Int> supply(p.size(), 0), demand(p.size(), 0);
  for (const auto& [x, a] : mu.weights())
    supply[x] = numerator(a) * (denom_lcm / denominator(a));
  for (const auto& [y, b] : nu.weights())
    demand[y] = numerator(b) * (denom_lcm / denominator(b));
  return max_flow_feasible(supply, demand, p);
}

namespace {

template <typename G>
Rational choquet_impl(const StepFunction& h, const G& g, const FinitePoset& p) {
  if (!h.is_monotone(p)) throw NonMonotoneError("step function is not monotone");
  std::set<Rational> levels(h.values.begin(), h.values.end());
  levels.erase(Rational(0));
  Rational total = 0;
  Rational prev = 0;
  for (const Rational& t : levels) {
    Mask level_set = 0;
    for (int i = 0; i < p.size(); ++i)
      if (h.values[i] >= t) level_set |= mask_single(i);
    // Upward-closed by monotonicity of h, hence open.
    total += (t - prev) * g.value(level_set);
    prev = t;
  }
  return total;
}

}  // namespace

Rational choquet_integral(const StepFunction& h, const SimpleValuation& nu,
                          const FinitePoset& p) {
  return choquet_impl(h, nu, p);
}

Rational choquet_integral(const StepFunction& h, const SimpleCapacity& kappa,
                          const FinitePoset& p) {
  return choquet_impl(h, kappa, p);
}

SimpleValuation round_valuation(const SimpleValuation& v, const Int& n) {
  if (n <= 0) throw PreconditionError("rounding denominator must be positive");
  SimpleValuation r;
  for (const auto& [x, a] : v.weights()) r.set_weight(x, Rational(floor_scaled(a, n), n));
  return r;
}

SimpleValuation add(const SimpleValuation& a, const SimpleValuation& b) {
  SimpleValuation r = a;
  for (const auto& [x, w] : b.weights()) r.set_weight(x, r.weight(x) + w);
  return r;
}

SimpleValuation scale(const Rational& c, const SimpleValuation& v) {
  if (c < 0) throw PreconditionError("negative scale factor");
  SimpleValuation r;
  for (const auto& [x, w] : v.weights()) r.set_weight(x, c * w);
  return r;
}

}  // namespace ordval
