#pragma once

#include <map>
#include <string>
#include <vector>

#include "ordval/lp.hpp"
#include "ordval/poset.hpp"
#include "ordval/valuation.hpp"

namespace ordval {

/// One generator of the weak topology: [U > r] or [r << U].
struct SubbasicOpen {
  OpenSet u = 0;
  Rational r = 0;
  enum class Mode { StrictGt, WayBelow } mode = Mode::StrictGt;

  bool contains(const SimpleValuation& mu) const {
    const Rational v = mu.value(u);
    return mode == Mode::StrictGt ? v > r : way_below(r, v);
  }
};

/// Finite intersection of subbasic sets, within a flavored valuation space.
struct WeakOpen {
  std::vector<SubbasicOpen> conjuncts;
  Flavor flavor = Flavor::Plain;
};

bool member_weak_open(const SimpleValuation& mu, const WeakOpen& w, const FinitePoset& p);

/// On a finite space every valuation is simple, so the simple approximant
/// inside w below nu is nu itself.  Throws NotMemberError when nu is not in w.
SimpleValuation reduce_to_simple(const SimpleValuation& nu, const WeakOpen& w,
                                 const FinitePoset& p);

struct Constants {
  Rational a;                // strictly between 0 and 1
  std::vector<Rational> s;   // one per conjunct, a nu(U_i) > s_i > r_i
};

/// Midpoint choices for a and the s_i.  Requires nu(U_i) > r_i > 0.
Constants choose_constants(const SimpleValuation& nu,
                           const std::vector<SubbasicOpen>& conjuncts);

struct LocalBases {
  std::map<int, Mask> b;      // x in A -> B_x
  std::map<int, OpenSet> v;   // x in A -> V_x = interior(up B_x)
};

/// Course-of-values construction of the B_x / V_x; asserts the per-stage
/// postconditions (x in V_x; up B_y inside V_x inside up B_x for x <= y;
/// x in U_i implies B_x inside U_i; x in V_y iff y <= x).
LocalBases construct_Bx(const FinitePoset& p, const SimpleValuation& nu,
                        const std::vector<SubbasicOpen>& conjuncts);

/// One way-below conjunct [s_B << V_B] per upward-closed subset B of A,
/// including the empty one.
WeakOpen build_V(const FinitePoset& p, const SimpleValuation& nu, const Rational& a,
                 const LocalBases& bases, Flavor flavor);

bool check_capacity_domination(const SimpleValuation& mu, const SimpleCapacity& kappa,
                               const FinitePoset& p);

/// N = max(1, ceil(max_i |Z| / (s_i - r_i))).
Int choose_N(Mask z, const std::vector<Rational>& s, const std::vector<SubbasicOpen>& conjuncts);

struct WitnessBundle {
  SimpleValuation nu;
  std::vector<SubbasicOpen> u_conjuncts;  // the ambient basic open
  Flavor flavor = Flavor::Plain;
  Rational a;
  std::vector<Rational> s;
  LocalBases bases;
  SimpleCapacity kappa;    // a sum a_x u_{B_x}
  Mask z = 0;              // union of the B_x
  Int big_n = 1;
  WeakOpen v_open;
  std::vector<SimpleValuation> e_set;
  // Verification verdicts.
  bool nu_in_v = false;
  bool e_in_u = false;
  bool grid_covered = false;
  long grid_members = 0;
  long grid_points = 0;
  bool lemma_checks = false;  // construction postconditions all held
};

struct EnumerateLimits {
  long max_candidates = 2000000;
};

/// The finite E: floor-roundings at step 1/N of the mixtures over the
/// strategy simplex.  Cell enumeration walks king-adjacent grid cells from
/// the pure-strategy seeds, keeping a cell iff a strict-feasibility LP
/// certifies some beta rounds into it.  Throws SizeError past the cap.
std::vector<SimpleValuation> enumerate_E(const FinitePoset& p, const StrategySpace& sigma,
                                         const Rational& a, const Int& big_n,
                                         Mask z, const EnumerateLimits& limits = {});

/// Runs the whole sandwich nu in V inside up E inside U and verifies it:
/// (1) nu in V; (2) every e in E lies in U; (3) every grid valuation in V is
/// above some e in E, found constructively by decompose-then-round.
WitnessBundle verify_sandwich(const FinitePoset& p, const SimpleValuation& nu,
                              const std::vector<SubbasicOpen>& u_conjuncts,
                              Flavor flavor, int grid,
                              const EnumerateLimits& limits = {});

struct PointedPoset {
  FinitePoset p;
  int bottom = 0;

  static PointedPoset make(FinitePoset p, int bottom);
};

/// Restriction of a probability valuation to the space above bottom.
SimpleValuation lift_minus(const SimpleValuation& nu, const PointedPoset& pp);

/// Adds the missing mass back at bottom; inverse of lift_minus.
SimpleValuation lift_plus(const SimpleValuation& mu, const PointedPoset& pp);

struct RemovedBottom {
  FinitePoset p;                 // the subspace without bottom
  std::vector<int> to_sub;       // old index -> new index (-1 for bottom)
  std::vector<int> to_full;      // new index -> old index
};

/// The subspace P minus its least element, with index maps both ways.
RemovedBottom remove_bottom(const PointedPoset& pp);

/// Probability-flavored sandwich, served through the lifting homeomorphism:
/// conjunct opens must be proper (not containing bottom); the construction
/// runs on the subspace with flavor Sub.
WitnessBundle verify_sandwich_prob(const PointedPoset& pp, const SimpleValuation& nu,
                                   const std::vector<SubbasicOpen>& u_conjuncts,
                                   int grid, const EnumerateLimits& limits = {});

}  // namespace ordval
