#include "ordval/lp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "ordval/errors.hpp"

namespace ordval {

void LinearProgram::set_vars(int n, bool maximize_objective) {
  maximize = maximize_objective;
  objective = RVector::Zero(n);
  free_var.assign(n, false);
  a.resize(0, n);
  rel.clear();
  b.resize(0);
}

void LinearProgram::add_constraint(const RVector& row, Relation r, const Rational& rhs) {
  if (row.size() != num_vars()) throw std::invalid_argument("constraint arity mismatch");
  a.conservativeResize(a.rows() + 1, num_vars());
  a.row(a.rows() - 1) = row.transpose();
  rel.push_back(r);
  b.conservativeResize(b.size() + 1);
  b(b.size() - 1) = rhs;
}

namespace {

// Dense tableau simplex.  Columns: structural (free vars split into a
// positive and a negative part), then one slack/surplus per row, then one
// artificial per Ge/Eq row.  Rows are pre-normalized to b >= 0.
struct Tableau {
  int m = 0;       // constraint rows
  int ncols = 0;   // all columns except rhs
  RMatrix t;       // (m+1) x (ncols+1); last row = reduced costs, last col = rhs
  std::vector<int> basis;          // basic column per row
  std::vector<int> col_var;        // structural column -> original var
  std::vector<int> col_sign;      // +1 / -1 for split parts
  int n_struct = 0;
  std::vector<int> slack_col;      // per row; -1 if none
  std::vector<int> art_col;        // per row; -1 if none
  std::vector<bool> is_artificial; // per column
  std::vector<bool> row_flipped;   // per row

  void pivot(int r, int c) {
    const Rational piv = t(r, c);
    t.row(r) /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == r) continue;
      const Rational factor = t(i, c);
      if (factor != 0) t.row(i) -= factor * t.row(r);
    }
    basis[r] = c;
  }

  void load_costs(const RVector& cost) {
    for (int j = 0; j < ncols; ++j) t(m, j) = -cost(j);
    t(m, ncols) = 0;
    for (int r = 0; r < m; ++r)
      if (cost(basis[r]) != 0) t.row(m) += cost(basis[r]) * t.row(r);
  }

  // Bland's rule; returns true when optimal, false when unbounded (the
  // offending entering column is stored in *unbounded_col).
  bool run(const std::vector<bool>& allowed, int* unbounded_col) {
    while (true) {
      int entering = -1;
      for (int j = 0; j < ncols; ++j)
        if (allowed[j] && t(m, j) < 0) {
          entering = j;
          break;
        }
      if (entering < 0) return true;
      int leave = -1;
      Rational best_ratio = 0;
      for (int r = 0; r < m; ++r) {
        if (t(r, entering) <= 0) continue;
        Rational ratio = t(r, ncols) / t(r, entering);
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave < 0) {
        if (unbounded_col) *unbounded_col = entering;
        return false;
      }
      pivot(leave, entering);
    }
  }
};

Tableau build_tableau(const LinearProgram& lp) {
  Tableau tb;
  const int nvars = lp.num_vars();
  tb.m = static_cast<int>(lp.rel.size());
  for (int j = 0; j < nvars; ++j) {
    tb.col_var.push_back(j);
    tb.col_sign.push_back(+1);
    if (lp.free_var[j]) {
      tb.col_var.push_back(j);
      tb.col_sign.push_back(-1);
    }
  }
  tb.n_struct = static_cast<int>(tb.col_var.size());
  tb.row_flipped.assign(tb.m, false);
  std::vector<Relation> rel(lp.rel);
  for (int r = 0; r < tb.m; ++r) {
    if (lp.b(r) < 0) {
      tb.row_flipped[r] = true;
      if (rel[r] == Relation::Le)
        rel[r] = Relation::Ge;
      else if (rel[r] == Relation::Ge)
        rel[r] = Relation::Le;
    }
  }
  tb.slack_col.assign(tb.m, -1);
  tb.art_col.assign(tb.m, -1);
  int next = tb.n_struct;
  for (int r = 0; r < tb.m; ++r)
    if (rel[r] != Relation::Eq) tb.slack_col[r] = next++;
  for (int r = 0; r < tb.m; ++r)
    if (rel[r] != Relation::Le) tb.art_col[r] = next++;
  tb.ncols = next;
  tb.is_artificial.assign(tb.ncols, false);
  for (int r = 0; r < tb.m; ++r)
    if (tb.art_col[r] >= 0) tb.is_artificial[tb.art_col[r]] = true;

  tb.t = RMatrix::Zero(tb.m + 1, tb.ncols + 1);
  tb.basis.assign(tb.m, -1);
  for (int r = 0; r < tb.m; ++r) {
    const Rational sign = tb.row_flipped[r] ? Rational(-1) : Rational(1);
    for (int c = 0; c < tb.n_struct; ++c)
      tb.t(r, c) = sign * Rational(tb.col_sign[c]) * lp.a(r, tb.col_var[c]);
    tb.t(r, tb.ncols) = sign * lp.b(r);
    if (tb.slack_col[r] >= 0)
      tb.t(r, tb.slack_col[r]) = (rel[r] == Relation::Le) ? 1 : -1;
    if (tb.art_col[r] >= 0) {
      tb.t(r, tb.art_col[r]) = 1;
      tb.basis[r] = tb.art_col[r];
    } else {
      tb.basis[r] = tb.slack_col[r];
    }
  }
  return tb;
}

RVector primal_point(const Tableau& tb, int nvars) {
  RVector x = RVector::Zero(nvars);
  for (int r = 0; r < tb.m; ++r) {
    int c = tb.basis[r];
    if (c < tb.n_struct)
      x(tb.col_var[c]) += Rational(tb.col_sign[c]) * tb.t(r, tb.ncols);
  }
  return x;
}

// y_i read from the reduced cost of row i's original identity column.
RVector dual_point(const Tableau& tb, const RVector& cost) {
  RVector y(tb.m);
  for (int r = 0; r < tb.m; ++r) {
    int id = tb.art_col[r] >= 0 ? tb.art_col[r] : tb.slack_col[r];
    Rational yi = tb.t(tb.m, id) + cost(id);
    // For a Le row the identity column is the slack (+e_i); for Ge/Eq it is
    // the artificial (+e_i); either way z_id = y_i.
    y(r) = tb.row_flipped[r] ? -yi : yi;
  }
  return y;
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const int nvars = lp.num_vars();
  Tableau tb = build_tableau(lp);
  LpSolution sol;

  // Phase 1: maximize minus the sum of artificials.
  RVector cost1 = RVector::Zero(tb.ncols);
  for (int j = 0; j < tb.ncols; ++j)
    if (tb.is_artificial[j]) cost1(j) = -1;
  tb.load_costs(cost1);
  std::vector<bool> allow_all(tb.ncols, true);
  bool ok = tb.run(allow_all, nullptr);
  assert(ok);
  (void)ok;
  if (tb.t(tb.m, tb.ncols) < 0) {
    sol.status = LpStatus::Infeasible;
    sol.farkas = dual_point(tb, cost1);
    return sol;
  }

  // Drive leftover artificials out of the basis where possible; rows whose
  // non-artificial entries are all zero are redundant and stay put at zero.
  std::vector<bool> allow2(tb.ncols, true);
  for (int j = 0; j < tb.ncols; ++j)
    if (tb.is_artificial[j]) allow2[j] = false;
  for (int r = 0; r < tb.m; ++r) {
    if (!tb.is_artificial[tb.basis[r]]) continue;
    for (int c = 0; c < tb.ncols; ++c)
      if (allow2[c] && tb.t(r, c) != 0) {
        tb.pivot(r, c);
        break;
      }
  }

  // Phase 2 on the real objective, in max sense.
  RVector cost2 = RVector::Zero(tb.ncols);
  for (int c = 0; c < tb.n_struct; ++c) {
    Rational cj = lp.objective(tb.col_var[c]) * tb.col_sign[c];
    cost2(c) = lp.maximize ? cj : -cj;
  }
  tb.load_costs(cost2);
  int unbounded_col = -1;
  if (!tb.run(allow2, &unbounded_col)) {
    sol.status = LpStatus::Unbounded;
    sol.x = primal_point(tb, nvars);
    RVector d = RVector::Zero(nvars);
    if (unbounded_col < tb.n_struct)
      d(tb.col_var[unbounded_col]) += tb.col_sign[unbounded_col];
    for (int r = 0; r < tb.m; ++r) {
      int c = tb.basis[r];
      if (c < tb.n_struct)
        d(tb.col_var[c]) -= Rational(tb.col_sign[c]) * tb.t(r, unbounded_col);
    }
    sol.ray = d;
    return sol;
  }
  sol.status = LpStatus::Optimal;
  sol.x = primal_point(tb, nvars);
  sol.objective = lp.objective.dot(sol.x);
  sol.dual = dual_point(tb, cost2);
  return sol;
}

namespace {

bool primal_feasible(const LinearProgram& lp, const RVector& x) {
  if (x.size() != lp.num_vars()) return false;
  for (int j = 0; j < lp.num_vars(); ++j)
    if (!lp.free_var[j] && x(j) < 0) return false;
  for (int r = 0; r < static_cast<int>(lp.rel.size()); ++r) {
    Rational lhs = lp.a.row(r).dot(x);
    switch (lp.rel[r]) {
      case Relation::Le:
        if (lhs > lp.b(r)) return false;
        break;
      case Relation::Ge:
        if (lhs < lp.b(r)) return false;
        break;
      case Relation::Eq:
        if (lhs != lp.b(r)) return false;
        break;
    }
  }
  return true;
}

bool multiplier_signs_ok(const LinearProgram& lp, const RVector& y) {
  for (int r = 0; r < static_cast<int>(lp.rel.size()); ++r) {
    if (lp.rel[r] == Relation::Le && y(r) < 0) return false;
    if (lp.rel[r] == Relation::Ge && y(r) > 0) return false;
  }
  return true;
}

}  // namespace

bool LpSolution::verify(const LinearProgram& lp) const {
  const int m = static_cast<int>(lp.rel.size());
  RVector cm = lp.maximize ? lp.objective : RVector(-lp.objective);
  switch (status) {
    case LpStatus::Optimal: {
      if (!primal_feasible(lp, x)) return false;
      if (dual.size() != m || !multiplier_signs_ok(lp, dual)) return false;
      for (int j = 0; j < lp.num_vars(); ++j) {
        Rational slack = lp.a.col(j).dot(dual) - cm(j);
        if (lp.free_var[j] ? slack != 0 : slack < 0) return false;
      }
      return lp.b.dot(dual) == cm.dot(x) && objective == lp.objective.dot(x);
    }
    case LpStatus::Unbounded: {
      if (!primal_feasible(lp, x)) return false;
      if (ray.size() != lp.num_vars()) return false;
      for (int j = 0; j < lp.num_vars(); ++j)
        if (!lp.free_var[j] && ray(j) < 0) return false;
      for (int r = 0; r < m; ++r) {
        Rational lhs = lp.a.row(r).dot(ray);
        if (lp.rel[r] == Relation::Le && lhs > 0) return false;
        if (lp.rel[r] == Relation::Ge && lhs < 0) return false;
        if (lp.rel[r] == Relation::Eq && lhs != 0) return false;
      }
      return cm.dot(ray) > 0;
    }
    case LpStatus::Infeasible: {
      if (farkas.size() != m || !multiplier_signs_ok(lp, farkas)) return false;
      for (int j = 0; j < lp.num_vars(); ++j) {
        Rational combo = lp.a.col(j).dot(farkas);
        if (lp.free_var[j] ? combo != 0 : combo < 0) return false;
      }
      return lp.b.dot(farkas) < 0;
    }
  }
  return false;
}

GameSolution matrix_game(const GameMatrix& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  if (rows == 0 || cols == 0) throw PreconditionError("empty game matrix");

  // Row player: maximize v with beta^T M >= v per column, beta in the simplex.
  LinearProgram row_lp;
  row_lp.set_vars(rows + 1, true);
  row_lp.objective(rows) = 1;
  row_lp.free_var[rows] = true;
  for (int j = 0; j < cols; ++j) {
    RVector c = RVector::Zero(rows + 1);
    for (int i = 0; i < rows; ++i) c(i) = -m(i, j);
    c(rows) = 1;
    row_lp.add_constraint(c, Relation::Le, 0);
  }
  RVector ones = RVector::Ones(rows + 1);
  ones(rows) = 0;
  row_lp.add_constraint(ones, Relation::Eq, 1);
  LpSolution row_sol = solve_lp(row_lp);
  if (row_sol.status != LpStatus::Optimal || !row_sol.verify(row_lp))
    throw std::logic_error("row-player game LP did not certify optimal");

  // Column player: minimize w with M alpha <= w per row, alpha in the simplex.
  LinearProgram col_lp;
  col_lp.set_vars(cols + 1, false);
  col_lp.objective(cols) = 1;
  col_lp.free_var[cols] = true;
  for (int i = 0; i < rows; ++i) {
    RVector c = RVector::Zero(cols + 1);
    for (int j = 0; j < cols; ++j) c(j) = m(i, j);
    c(cols) = -1;
    col_lp.add_constraint(c, Relation::Le, 0);
  }
  RVector onesc = RVector::Ones(cols + 1);
  onesc(cols) = 0;
  col_lp.add_constraint(onesc, Relation::Eq, 1);
  LpSolution col_sol = solve_lp(col_lp);
  if (col_sol.status != LpStatus::Optimal || !col_sol.verify(col_lp))
    throw std::logic_error("column-player game LP did not certify optimal");

  if (row_sol.objective != col_sol.objective)
    throw std::logic_error("minimax equality violated");

  GameSolution g;
  g.value = row_sol.objective;
  for (int i = 0; i < rows; ++i) g.row_strategy.push_back(row_sol.x(i));
  for (int j = 0; j < cols; ++j) g.col_strategy.push_back(col_sol.x(j));
  return g;
}

StrategySpace StrategySpace::build(const std::vector<int>& points,
                                   const std::vector<Rational>& weights,
                                   const std::vector<Mask>& choice_sets) {
  if (points.size() != weights.size() || points.size() != choice_sets.size())
    throw std::invalid_argument("strategy space arity mismatch");
  StrategySpace s;
  std::vector<int> order(points.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return points[a] < points[b]; });
  for (int i : order) {
    if (choice_sets[i] == 0) throw PreconditionError("empty choice set B_x");
    s.points.push_back(points[i]);
    s.weights.push_back(weights[i]);
    std::vector<int> members;
    for (int e = 0; e < 32; ++e)
      if (mask_contains(choice_sets[i], e)) members.push_back(e);
    s.choices.push_back(members);
  }
  // Odometer enumeration: the last point's choice index varies fastest, so
  // strategies come out in lexicographic order of (f(x1), f(x2), ...).
  std::vector<int> f(s.points.size(), 0);
  while (true) {
    s.strategies.push_back(f);
    int k = static_cast<int>(f.size()) - 1;
    while (k >= 0) {
      if (++f[k] < static_cast<int>(s.choices[k].size())) break;
      f[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return s;
}

SimpleValuation StrategySpace::pure_mixture(int f, const Rational& scale_factor) const {
  SimpleValuation v;
  for (size_t k = 0; k < points.size(); ++k) {
    int y = picked(f, static_cast<int>(k));
    v.set_weight(y, v.weight(y) + scale_factor * weights[k]);
  }
  return v;
}

SimpleValuation StrategySpace::mixture(const std::vector<Rational>& beta,
                                       const Rational& scale_factor) const {
  SimpleValuation v;
  for (int f = 0; f < strategy_count(); ++f) {
    if (beta[f] == 0) continue;
    v = add(v, scale(beta[f], pure_mixture(f, scale_factor)));
  }
  return v;
}

Decomposition decompose_capacity(const std::vector<int>& points,
                                 const std::vector<Rational>& weights,
                                 const std::vector<Mask>& choice_sets,
                                 const SimpleValuation& nu, const FinitePoset& p) {
  SimpleCapacity kappa;
  for (size_t i = 0; i < points.size(); ++i) kappa.add_term(weights[i], choice_sets[i]);
  LeqResult pre = stochastic_leq(kappa, nu, p);
  if (!pre.holds)
    throw PreconditionError("kappa is not dominated by nu (witness open " +
                            std::to_string(*pre.counterexample) + ")");

  StrategySpace sigma = StrategySpace::build(points, weights, choice_sets);
  const int nf = sigma.strategy_count();
  LinearProgram lp;
  lp.set_vars(nf, true);  // zero objective: pure feasibility
  for (OpenSet u : enumerate_opens(p)) {
    RVector row(nf);
    for (int f = 0; f < nf; ++f) row(f) = sigma.pure_mixture(f, 1).value(u);
    lp.add_constraint(row, Relation::Le, nu.value(u));
  }
  lp.add_constraint(RVector::Ones(nf), Relation::Eq, 1);
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal)
    throw std::logic_error("decomposition LP infeasible despite kappa <= nu");

  Decomposition d;
  d.beta.assign(nf, Rational(0));
  for (int f = 0; f < nf; ++f) d.beta[f] = sol.x(f);
  d.mixture = sigma.mixture(d.beta, 1);
  d.sigma = std::move(sigma);
  return d;
}

}  // namespace ordval
