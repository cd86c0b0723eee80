#include <chrono>
#include <cstdio>
#include <exception>

#include "suites.hpp"

// Runs every acceptance criterion once and prints one verdict line each.
int main() {
  using galg::suites::run_criterion;
  const auto budget = galg::Budget::from_env();
  int failed = 0;
  for (int id = 1; id <= galg::suites::kCriteria; ++id) {
    const auto t0 = std::chrono::steady_clock::now();
    galg::suites::CheckResult r;
    try {
      r = run_criterion(id, 1, budget);
    } catch (const std::exception& e) {
      r.id = id;
      r.title = galg::suites::criterion_title(id);
      r.failures = 1;
      r.details["error"] = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d: %s (cases=%d failures=%d time=%.1fs)\n", r.passed() ? "PASS" : "FAIL", id,
                r.title.c_str(), r.cases, r.failures, secs);
    if (!r.passed()) {
      std::printf("  details: %s\n", r.details.dump().c_str());
      if (!r.witness.is_null()) std::printf("  witness: %s\n", r.witness.dump().c_str());
      ++failed;
    }
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", galg::suites::kCriteria - failed, galg::suites::kCriteria);
  return failed == 0 ? 0 : 1;
}
