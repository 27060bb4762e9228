// One PASS/FAIL line per acceptance criterion, then the checks behind each
// failure. Exits non-zero when any criterion fails.

#include <cstdio>

#include "fcip/app.hpp"

int main() {
  const auto results = fcip::app::run_acceptance();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s  criterion %2d  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str());
    failed += r.pass ? 0 : 1;
  }
  for (const auto& r : results) {
    if (r.pass) continue;
    std::printf("\ncriterion %d:\n", r.id);
    for (const auto& d : r.details) std::printf("  %s\n", d.c_str());
  }
  std::printf("\n%zu/%zu criteria pass\n", results.size() - failed, results.size());
  return failed == 0 ? 0 : 1;
}
