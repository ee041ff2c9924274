// Acceptance runner: one PASS/FAIL line per criterion, built on the verify suites.

#include <cstdio>
#include <string>
#include <vector>

#include "diskpoly/verify.hpp"

using namespace diskpoly;

namespace {

struct Criterion {
  const char* id;
  const char* what;
  std::vector<std::string> suites;
};

const Criterion kCriteria[] = {
    {"AC1", "Burchnall operator formulas", {"burchnall"}},
    {"AC2", "Nielsen-type product expansions", {"nielsen"}},
    {"AC3", "recurrence relations and conjugates", {"recurrences"}},
    {"AC4", "operator composition, Chu-Vandermonde and Hermite corollaries", {"composition", "chu", "hermite"}},
    {"AC5", "Runge-type addition identity", {"runge"}},
    {"AC6", "agreement of the evaluation engines", {"engines"}},
    {"AC7", "generating functions", {"genfct"}},
    {"AC8", "summation formulas", {"summation"}},
    {"AC9", "orthogonality under the disk weight", {"orthogonality"}},
    {"AC10", "hypergeometric transformations", {"hypergeometric"}},
};

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : kCriteria) {
    SuiteResult total;
    total.suite_name = c.suites.front();
    for (const auto& s : c.suites) total.merge(run_suite(s));
    std::printf("%s %s  %s: %d cases, %d failed, worst residual %.3g, %.2f s\n", c.id,
                total.passed() ? "PASS" : "FAIL", c.what, total.cases_run, total.cases_failed, total.worst_residual,
                total.elapsed);
    for (const auto& f : total.failures) std::printf("    failed: %s\n", f.c_str());
    std::fflush(stdout);
    if (!total.passed()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
