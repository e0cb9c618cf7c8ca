#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordval/errors.hpp"

namespace ordval {

/// Subsets of a poset's carrier as bit masks over element indices.
using Mask = std::uint32_t;

/// Upward-closed subsets are the opens of the topology; same representation.
using OpenSet = Mask;

constexpr int kMaxPosetSize = 20;

inline bool mask_contains(Mask s, int i) { return (s >> i) & 1u; }
inline Mask mask_single(int i) { return Mask{1} << i; }
inline bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline int mask_count(Mask s) { return __builtin_popcount(s); }

/// A finite T0 poset: element names plus the full order relation.
/// The order doubles as the specialization order of the upper-set topology,
/// whose opens are exactly the upward-closed subsets.
class FinitePoset {
 public:
  /// Empty poset; usable only as a placeholder before assignment.
  FinitePoset() = default;

  /// Builds the reflexive-transitive closure of `pairs` over `names`.
  /// Throws CycleError when the closure is not antisymmetric and
  /// DuplicateNameError on repeated labels.
  static FinitePoset build(const std::vector<std::string>& names,
                           const std::vector<std::pair<std::string, std::string>>& pairs);

  int size() const { return n_; }
  bool leq(int i, int j) const { return mask_contains(up_[i], j); }
  const std::string& name(int i) const { return names_.at(i); }
  std::optional<int> index_of(const std::string& name) const;
  int require_index(const std::string& name) const;

  /// All y with i <= y, including i.
  Mask up_of(int i) const { return up_[i]; }
  /// All y with y <= i, including i.
  Mask down_of(int i) const { return down_[i]; }
  Mask full_mask() const { return n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1; }

  bool is_upward_closed(Mask s) const;
  bool is_downward_closed(Mask s) const;

 private:
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
  std::map<std::string, int> index_;
};

Mask upward_closure(const FinitePoset& p, Mask s);
Mask downward_closure(const FinitePoset& p, Mask s);

/// All upward-closed subsets, each once, in ascending mask order.
std::vector<OpenSet> enumerate_opens(const FinitePoset& p);

/// Largest open contained in s: {x in s | up(x) subset of s}.
OpenSet interior(const FinitePoset& p, Mask s);

/// {x in s | no y in s with y < x}.
Mask minimal_elements(const FinitePoset& p, Mask s);

/// Non-empty closed C with: C subset of C1 union C2 implies C in one of them,
/// decided by brute force over all closed pairs.
std::vector<Mask> irreducible_closed_sets(const FinitePoset& p);

struct SobrietyResult {
  bool sober = false;
  /// irreducible closed set -> the point whose closure it is.
  std::map<Mask, int> closure_points;
};

SobrietyResult is_sober(const FinitePoset& p);

/// Canonical finite generator E with x in interior(up(E)) subset of up(E)
/// subset of U. Throws NotMemberError when x is outside U.
Mask finitary_basis_at(const FinitePoset& p, int x, OpenSet u);

}  // namespace ordval
