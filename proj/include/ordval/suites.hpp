#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ordval/poset.hpp"
#include "ordval/valuation.hpp"

namespace ordval {

struct SuiteResult {
  std::string name;
  long total = 0;
  long failed = 0;
  std::vector<std::string> notes;

  bool passed() const { return failed == 0; }
};

struct SuiteConfig {
  int max_poset_size = 7;
  int grid = 4;
};

/// Deterministic generator shared by every property suite.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  bool chance(int num, int den) { return below(den) < num; }
  Rational rational(int max_num, int max_den) {
    return Rational(1 + below(max_num), 1 + below(max_den));
  }

 private:
  std::mt19937_64 eng_;
};

FinitePoset random_poset(Rng& rng, int n);
SimpleValuation random_valuation(Rng& rng, const FinitePoset& p, int max_num = 4,
                                 int max_den = 4);

SuiteResult suite_decomposition(std::uint64_t seed, const SuiteConfig& cfg = {});
SuiteResult suite_minimax(std::uint64_t seed, const SuiteConfig& cfg = {});
/// Returns {sandwich verdicts, per-bundle lemma postconditions} — the two are
/// produced by the same constructions.
std::pair<SuiteResult, SuiteResult> suite_sandwich(std::uint64_t seed,
                                                   const SuiteConfig& cfg = {});
SuiteResult suite_lifting(std::uint64_t seed, const SuiteConfig& cfg = {});
SuiteResult suite_counterexample(std::uint64_t seed, const SuiteConfig& cfg = {});
SuiteResult suite_oracle_agreement(std::uint64_t seed, const SuiteConfig& cfg = {});
SuiteResult suite_structural(std::uint64_t seed, const SuiteConfig& cfg = {});

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, const SuiteConfig& cfg = {});

}  // namespace ordval
