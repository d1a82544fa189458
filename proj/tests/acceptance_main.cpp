// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include "pentagramma/verification.hpp"

#include <chrono>
#include <cstdio>

int main() {
  namespace v = pentagramma::verification;
  const auto start = std::chrono::steady_clock::now();
  const auto results = v::run_acceptance();
  int failed = 0;
  for (const auto& r : results) {
    std::fputs(v::format_result(r).c_str(), stdout);
    if (!r.pass()) ++failed;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu criteria, %d failed, %.2f s\n", results.size(), failed, seconds);
  return failed == 0 ? 0 : 1;
}
