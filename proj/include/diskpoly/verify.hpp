/**
 * @file verify.hpp
 * @brief Verification suites over seeded parameter grids, shared by the CLI and
 *        the acceptance runner.
 *
 * Exact suites count a case as failed when its residual polynomial is nonzero and
 * report the number of surviving terms as the residual; numeric suites report
 * the residual the underlying check defines.
 */
#ifndef DISKPOLY_VERIFY_HPP
#define DISKPOLY_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace diskpoly {

struct SuiteResult {
  std::string suite_name;
  int cases_run = 0;
  int cases_failed = 0;
  double worst_residual = 0;
  double elapsed = 0;                 // seconds
  std::vector<std::string> failures;  // labels of the first few failed cases

  bool passed() const { return cases_failed == 0; }
  void record(bool ok, double residual, const std::string& label);
  void merge(const SuiteResult& other);
};

/// Negative or zero fields mean "the suite's default".
struct SuiteOptions {
  int cap = -1;   // main index cap
  int cap2 = -1;  // secondary cap (nielsen2 indices, operator-route Chu check)
  std::uint32_t seed = 2024;
  double tol = -1;
  int samples = -1;  // random polynomials or points
  int max_terms = -1;
};

/// Suites the CLI's `verify --suite all` runs.
const std::vector<std::string>& identity_suite_names();
/// Every suite name accepted by run_suite.
const std::vector<std::string>& all_suite_names();

/// Throws DomainError for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

// Individual suites; defaults in brackets.
SuiteResult suite_burchnall(const SuiteOptions&);      // formulas 1-3, m, n <= cap [3], samples [5] random f of degree <= 3
SuiteResult suite_composition(const SuiteOptions&);    // A_{m+m'} = A_m A_m', m, m' <= cap [3], samples [5]
SuiteResult suite_nielsen(const SuiteOptions&);        // nielsen1 and eq41/eq42 up to cap [3], nielsen2 up to cap2 [4]
SuiteResult suite_recurrences(const SuiteOptions&);    // all relations and conjugates, m, n <= cap [6]
SuiteResult suite_chu(const SuiteOptions&);            // Chu-Vandermonde 1 <= m <= cap [10], operator route m, n <= cap2 [5]
SuiteResult suite_hermite(const SuiteOptions&);        // Hermite corollary m, n <= cap [4]
SuiteResult suite_runge(const SuiteOptions&);          // gamma 1..3, m, n <= cap [2], samples [20] pairs, tol [1e-9]
SuiteResult suite_engines(const SuiteOptions&);        // four engines, m, n <= cap [8], samples [50], tol [1e-10]
SuiteResult suite_genfct(const SuiteOptions&);         // m <= cap [4], samples [10] points, tol [1e-9]
SuiteResult suite_summation(const SuiteOptions&);      // all summation formulas, samples [10] points, tol [1e-8]
SuiteResult suite_orthogonality(const SuiteOptions&);  // degree cap [10], gamma in {0, 1, 2.5}, tol [1e-10]
SuiteResult suite_hypergeometric(const SuiteOptions&);  // quadratic transformation and reduction, tol [1e-10]

}  // namespace diskpoly

#endif  // DISKPOLY_VERIFY_HPP
