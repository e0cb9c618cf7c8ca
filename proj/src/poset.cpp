#include "ordval/poset.hpp"

#include <algorithm>
#include <set>

namespace ordval {

FinitePoset FinitePoset::build(const std::vector<std::string>& names,
                               const std::vector<std::pair<std::string, std::string>>& pairs) {
  const int n = static_cast<int>(names.size());
  if (n > kMaxPosetSize) throw SizeError("poset too large: " + std::to_string(n));
  FinitePoset p;
  p.n_ = n;
  p.names_ = names;
  for (int i = 0; i < n; ++i) {
    if (!p.index_.emplace(names[i], i).second)
      throw DuplicateNameError("duplicate element name: " + names[i]);
  }
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [a, b] : pairs) {
    le[p.require_index(a)][p.require_index(b)] = true;
  }
  // Floyd-Warshall style transitive closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (le[i][k])
        for (int j = 0; j < n; ++j)
          if (le[k][j]) le[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && le[i][j] && le[j][i])
        throw CycleError("order cycle through " + names[i] + " and " + names[j]);
  p.up_.assign(n, 0);
  p.down_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (le[i][j]) {
        p.up_[i] |= mask_single(j);
        p.down_[j] |= mask_single(i);
      }
  return p;
}

std::optional<int> FinitePoset::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FinitePoset::require_index(const std::string& name) const {
  auto idx = index_of(name);
  if (!idx) throw NotMemberError("unknown element name: " + name);
  return *idx;
}

bool FinitePoset::is_upward_closed(Mask s) const {
  for (int i = 0; i < n_; ++i)
    if (mask_contains(s, i) && !mask_subset(up_[i], s)) return false;
  return true;
}

bool FinitePoset::is_downward_closed(Mask s) const {
  for (int i = 0; i < n_; ++i)
    if (mask_contains(s, i) && !mask_subset(down_[i], s)) return false;
  return true;
}

Mask upward_closure(const FinitePoset& p, Mask s) {
  Mask r = 0;
  for (int i = 0; i < p.size(); ++i)
    if (mask_contains(s, i)) r |= p.up_of(i);
  return r;
}

Mask downward_closure(const FinitePoset& p, Mask s) {
  Mask r = 0;
  for (int i = 0; i < p.size(); ++i)
    if (mask_contains(s, i)) r |= p.down_of(i);
  return r;
}

std::vector<OpenSet> enumerate_opens(const FinitePoset& p) {
  std::vector<OpenSet> opens;
  const Mask full = p.full_mask();
  for (Mask s = 0;; ++s) {
    if (p.is_upward_closed(s)) opens.push_back(s);
    if (s == full) break;
  }
  return opens;
}

OpenSet interior(const FinitePoset& p, Mask s) {
  Mask r = 0;
  for (int i = 0; i < p.size(); ++i)
    if (mask_contains(s, i) && mask_subset(p.up_of(i), s)) r |= mask_single(i);
  return r;
}

Mask minimal_elements(const FinitePoset& p, Mask s) {
  Mask r = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (!mask_contains(s, i)) continue;
    bool minimal = true;
    for (int j = 0; j < p.size(); ++j)
      if (j != i && mask_contains(s, j) && p.leq(j, i)) {
        minimal = false;
        break;
      }
    if (minimal) r |= mask_single(i);
  }
  return r;
}

std::vector<Mask> irreducible_closed_sets(const FinitePoset& p) {
  std::vector<Mask> closed;
  const Mask full = p.full_mask();
  for (Mask s = 0;; ++s) {
    if (p.is_downward_closed(s)) closed.push_back(s);
    if (s == full) break;
  }
  std::vector<Mask> irred;
  for (Mask c : closed) {
    if (c == 0) continue;
    bool ok = true;
    for (Mask c1 : closed) {
      for (Mask c2 : closed) {
        if (mask_subset(c, c1 | c2) && !mask_subset(c, c1) && !mask_subset(c, c2)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) irred.push_back(c);
  }
  return irred;
}

SobrietyResult is_sober(const FinitePoset& p) {
  SobrietyResult res;
  res.sober = true;
  for (Mask c : irreducible_closed_sets(p)) {
    bool found = false;
    for (int x = 0; x < p.size(); ++x)
      if (p.down_of(x) == c) {
        res.closure_points[c] = x;
        found = true;
        break;
      }
    if (!found) res.sober = false;
  }
  return res;
}

Mask finitary_basis_at(const FinitePoset& p, int x, OpenSet u) {
  if (!mask_contains(u, x)) throw NotMemberError("point not in the open set");
  return minimal_elements(p, u);
}

}  // namespace ordval
