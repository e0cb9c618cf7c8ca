// Release gate: one line per criterion, non-zero exit on any failure.
#include <iostream>

#include "ordval/suites.hpp"

using namespace ordval;

namespace {

int g_failures = 0;

void report(int number, const std::string& label, const SuiteResult& r) {
  const bool ok = r.passed();
  if (!ok) ++g_failures;
  std::cout << "criterion " << number << " [" << label << "]: "
            << (ok ? "pass" : "FAIL") << " (" << r.total - r.failed << "/" << r.total
            << ")\n";
  if (!ok)
    for (const std::string& note : r.notes) std::cout << "  " << note << "\n";
  std::cout.flush();
}

}  // namespace

int main() {
  const std::uint64_t seed = 20260826;
  SuiteConfig cfg;

  report(1, "capacity decomposition", suite_decomposition(seed, cfg));
  report(2, "minimax equality", suite_minimax(seed + 1, cfg));
  auto [sandwich, lemmas] = suite_sandwich(seed + 2, cfg);
  report(3, "sandwich construction", sandwich);
  report(4, "construction postconditions", lemmas);
  report(5, "lifting round trips", suite_lifting(seed + 3, cfg));
  report(6, "weak-vs-Scott separation", suite_counterexample(seed + 4, cfg));
  report(7, "oracle agreement", suite_oracle_agreement(seed + 5, cfg));
  report(8, "structural suites", suite_structural(seed + 6, cfg));

  if (g_failures != 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
