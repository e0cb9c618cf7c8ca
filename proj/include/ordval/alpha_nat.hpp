#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ordval/rational.hpp"

namespace ordval {

/// An open of the one-point compactification of the naturals: either a finite
/// set of naturals, or the complement of one (which then contains infinity).
class AlphaOpen {
 public:
  static AlphaOpen finite(std::set<std::uint64_t> f) { return AlphaOpen{false, std::move(f)}; }
  static AlphaOpen cofinite(std::set<std::uint64_t> e) { return AlphaOpen{true, std::move(e)}; }

  bool is_cofinite() const { return cofinite_; }
  bool contains_infinity() const { return cofinite_; }
  bool contains(std::uint64_t n) const {
    return cofinite_ ? !exceptions_.count(n) : exceptions_.count(n) > 0;
  }
  /// The finite F (finite kind) or the excluded E (cofinite kind).
  const std::set<std::uint64_t>& exceptions() const { return exceptions_; }

  friend AlphaOpen set_union(const AlphaOpen& a, const AlphaOpen& b);
  friend AlphaOpen set_intersection(const AlphaOpen& a, const AlphaOpen& b);
  bool operator==(const AlphaOpen&) const = default;

 private:
  AlphaOpen(bool cofinite, std::set<std::uint64_t> e)
      : cofinite_(cofinite), exceptions_(std::move(e)) {}
  bool cofinite_;
  std::set<std::uint64_t> exceptions_;
};

AlphaOpen set_union(const AlphaOpen& a, const AlphaOpen& b);
AlphaOpen set_intersection(const AlphaOpen& a, const AlphaOpen& b);

/// Finitely supported weights on the naturals plus an atom at infinity.
struct DiscreteValuation {
  std::map<std::uint64_t, Rational> weights;  // > 0 entries only
  Rational a_inf = 0;

  static DiscreteValuation dirac(std::uint64_t n) {
    DiscreteValuation v;
    v.weights[n] = 1;
    return v;
  }
  static DiscreteValuation dirac_infinity() {
    DiscreteValuation v;
    v.a_inf = 1;
    return v;
  }

  Rational mass() const;
  bool operator==(const DiscreteValuation&) const = default;
};

Rational eval_alpha(const DiscreteValuation& nu, const AlphaOpen& u);

/// The order-isomorphism onto coefficient families: nu <= mu iff
/// coefficientwise, including the infinity coordinate.
bool leq_discrete(const DiscreteValuation& nu, const DiscreteValuation& mu);

/// inf over n of nu({n, n+1, ..., infinity}); attained past the support and
/// asserted equal to the stored atom.
Rational tail_mass(const DiscreteValuation& nu);

/// Membership in the Scott-open {a_inf > 0}.
inline bool scott_V_member(const DiscreteValuation& nu) { return nu.a_inf > 0; }

struct CounterexampleWitness {
  std::uint64_t n = 0;
  DiscreteValuation point;           // delta_n
  bool in_every_conjunct = false;    // delta_n(U_i) = 1 > r_i for all i
  bool scott_member = false;         // a_inf of delta_n is zero, so false
};

/// Given a basic weak neighborhood of delta_infinity (one conjunct
/// [cofinite(E_i) > r_i] per entry, 0 < r_i < 1), produces the least natural
/// outside every E_i and the verdicts separating {a_inf > 0} from it.
CounterexampleWitness counterexample_witness(
    const std::vector<std::pair<std::set<std::uint64_t>, Rational>>& conjuncts);

}  // namespace ordval
