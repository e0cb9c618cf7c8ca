#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ordval/poset.hpp"
#include "ordval/rational.hpp"

namespace ordval {

enum class Flavor { Plain, Sub, Prob };

/// Finite weighted sum of Dirac masses; weights are strictly positive,
/// zero weights are normalized away.
class SimpleValuation {
 public:
  SimpleValuation() = default;

  static SimpleValuation zero() { return {}; }
  static SimpleValuation dirac(int x) {
    SimpleValuation v;
    v.w_[x] = 1;
    return v;
  }

  void set_weight(int x, const Rational& a);
  Rational weight(int x) const;
  const std::map<int, Rational>& weights() const { return w_; }
  Mask support() const;
  Rational mass() const;
  bool is_zero() const { return w_.empty(); }

  /// nu(U) = sum of weights at members of U.
  Rational value(Mask u) const;

  bool operator==(const SimpleValuation& o) const { return w_ == o.w_; }
  bool operator<(const SimpleValuation& o) const { return w_ < o.w_; }

 private:
  std::map<int, Rational> w_;
};

/// Finite positive combination of unanimity games u_B; each B non-empty.
class SimpleCapacity {
 public:
  SimpleCapacity() = default;
  void add_term(const Rational& weight, Mask b);
  const std::vector<std::pair<Rational, Mask>>& terms() const { return terms_; }

  /// kappa(U) = sum of weights of terms with B subset of U.
  Rational value(Mask u) const;
  Rational total_weight() const;

 private:
  std::vector<std::pair<Rational, Mask>> terms_;
};

/// Total map element -> Rational >= 0, monotone along the order.
struct StepFunction {
  std::vector<Rational> values;

  bool is_monotone(const FinitePoset& p) const;
};

inline Rational eval_valuation(const SimpleValuation& v, Mask u) { return v.value(u); }
inline Rational eval_capacity(const SimpleCapacity& k, Mask u) { return k.value(u); }

bool mass_admissible(Flavor flavor, const Rational& mass);

/// Way-below on non-negative reals: r << s iff r = 0 or r < s.
inline bool way_below(const Rational& r, const Rational& s) { return r == 0 || r < s; }

struct LeqResult {
  bool holds = false;
  /// An open witnessing failure, when !holds.
  std::optional<Mask> counterexample;
};

/// mu <= nu in the stochastic order: mu(U) <= nu(U) for every open U.
LeqResult stochastic_leq(const SimpleValuation& mu, const SimpleValuation& nu,
                         const FinitePoset& p);
LeqResult stochastic_leq(const SimpleCapacity& kappa, const SimpleValuation& nu,
                         const FinitePoset& p);

/// Independent oracle: feasibility of a transport plan t(x,y) >= 0 supported
/// on x <= y with row sums = mu weights and column sums <= nu weights,
/// decided by integer max-flow after clearing denominators.
bool stochastic_leq_transport(const SimpleValuation& mu, const SimpleValuation& nu,
                              const FinitePoset& p);

/// Exact Choquet integral of a monotone step function: threshold sums over
/// the distinct values of h.  Throws NonMonotoneError.
Rational choquet_integral(const StepFunction& h, const SimpleValuation& nu,
                          const FinitePoset& p);
Rational choquet_integral(const StepFunction& h, const SimpleCapacity& kappa,
                          const FinitePoset& p);

/// Coefficientwise floor(N c) / N; result <= input, gap < 1/N per coefficient.
SimpleValuation round_valuation(const SimpleValuation& v, const Int& n);

SimpleValuation add(const SimpleValuation& a, const SimpleValuation& b);
SimpleValuation scale(const Rational& c, const SimpleValuation& v);

}  // namespace ordval
