#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <vector>

#include "ordval/rational.hpp"
#include "ordval/valuation.hpp"

namespace ordval {

using RVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using GameMatrix = RMatrix;

enum class Relation { Le, Eq, Ge };
enum class LpStatus { Optimal, Infeasible, Unbounded };

/// max (or min) c.x subject to rows a_i.x {<=,=,>=} b_i; variables are
/// non-negative unless declared free.
struct LinearProgram {
  bool maximize = true;
  RVector objective;
  std::vector<bool> free_var;
  RMatrix a{0, 0};
  std::vector<Relation> rel;
  RVector b;

  int num_vars() const { return static_cast<int>(objective.size()); }
  void set_vars(int n, bool maximize_objective = true);
  void add_constraint(const RVector& row, Relation r, const Rational& rhs);
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  RVector x;        // primal point (Optimal; feasible start point when Unbounded)
  Rational objective = 0;
  RVector dual;     // per-constraint multipliers (Optimal)
  RVector ray;      // improving direction (Unbounded)
  RVector farkas;   // per-constraint infeasibility multipliers (Infeasible)

  /// Re-substitutes the certificate exactly: primal/dual feasibility and a
  /// zero duality gap for Optimal, an improving feasible ray for Unbounded,
  /// a Farkas contradiction for Infeasible.
  bool verify(const LinearProgram& lp) const;
};

/// Exact primal simplex, two phases, Bland's anti-cycling rule.
LpSolution solve_lp(const LinearProgram& lp);

struct GameSolution {
  Rational value;
  std::vector<Rational> row_strategy;
  std::vector<Rational> col_strategy;
};

/// Solves the zero-sum game for both players independently and asserts the
/// two optimal values coincide exactly.
GameSolution matrix_game(const GameMatrix& m);

/// The strategy set for a capacity (a_x, B_x)_{x in A}: all choice functions
/// f with f(x) in B_x, enumerated lexicographically (points ascending, the
/// last point's choice varying fastest).
struct StrategySpace {
  std::vector<int> points;                 // A, ascending element index
  std::vector<Rational> weights;           // a_x, aligned with points
  std::vector<std::vector<int>> choices;   // B_x members, ascending
  std::vector<std::vector<int>> strategies;  // f as per-point choice indices

  static StrategySpace build(const std::vector<int>& points,
                             const std::vector<Rational>& weights,
                             const std::vector<Mask>& choice_sets);

  int strategy_count() const { return static_cast<int>(strategies.size()); }
  /// Element picked by strategy f at the k-th point.
  int picked(int f, int k) const { return choices[k][strategies[f][k]]; }
  /// scale * sum_x a_x delta_{f(x)} for a single strategy f.
  SimpleValuation pure_mixture(int f, const Rational& scale_factor) const;
  /// scale * sum_{f,x} beta_f a_x delta_{f(x)}.
  SimpleValuation mixture(const std::vector<Rational>& beta,
                          const Rational& scale_factor) const;
};

struct Decomposition {
  StrategySpace sigma;
  std::vector<Rational> beta;  // simplex vector over sigma.strategies
  SimpleValuation mixture;     // sum_{f,x} beta_f a_x delta_{f(x)}
};

/// The capacity-domination decomposition: given kappa = sum a_x u_{B_x} <= nu,
/// finds beta in the simplex whose mixture is <= nu.  Throws
/// PreconditionError when kappa <= nu fails; an infeasible LP afterwards is
/// an internal error.
Decomposition decompose_capacity(const std::vector<int>& points,
                                 const std::vector<Rational>& weights,
                                 const std::vector<Mask>& choice_sets,
                                 const SimpleValuation& nu, const FinitePoset& p);

}  // namespace ordval
