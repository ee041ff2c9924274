#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "diskpoly/recurrences.hpp"

using namespace diskpoly;
using C = ComplexValue;

TEST_CASE("eval_by_recurrence examples") {
  CHECK(eval_by_recurrence(DiskIndex(0, 3), 1.0, C(0.5)).value == C(3.0));
  CHECK(std::abs(eval_by_recurrence(DiskIndex(1, 1), 0.0, C(0.5)).value - C(-1.0)) <= 1e-15);
  C z(0.3, -0.2);
  C a = eval_by_recurrence(DiskIndex(5, 4), 2.5, z).value;
  C b = zernike_explicit(DiskIndex(5, 4), 2.5, z).value;
  CHECK(std::abs(a - b) <= 1e-10 * std::abs(b));
  CHECK(eval_by_recurrence(DiskIndex(5, 4), 2.5, z).engine == Engine::recurrence);
}

TEST_CASE("eval_by_recurrence refuses gamma <= -1") {
  CHECK_THROWS_AS(eval_by_recurrence(DiskIndex(2, 2), -1.0, C(0.2)), DomainError);
  CHECK_THROWS_AS(eval_by_recurrence(DiskIndex(2, 2), -2.5, C(0.2)), DomainError);
}

TEST_CASE("recurrence engine agrees with the explicit sum") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> rad(0.0, 0.95), ang(0.0, 6.283185307179586);
  double worst = 0;
  for (double gamma : {-0.5, 0.0, 1.5, 3.0}) {
    for (int t = 0; t < 30; ++t) {
      const C z = std::polar(rad(rng), ang(rng));
      for (int m = 0; m <= 8; ++m) {
        for (int n = 0; n <= 8; ++n) {
          C a = eval_by_recurrence(DiskIndex(m, n), gamma, z).value;
          C b = zernike_explicit(DiskIndex(m, n), gamma, z).value;
          worst = std::max(worst, std::abs(a - b) / std::max(std::abs(a), std::abs(b)));
        }
      }
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("residual examples") {
  CHECK(recurrence_residual(RecurrenceId::ttr11, DiskIndex(1, 0)).is_zero());
  CHECK(recurrence_residual(RecurrenceId::ttr21, DiskIndex(2, 1)).is_zero());
  CHECK(recurrence_residual(RecurrenceId::basic, DiskIndex(0, 0)).is_zero());
  CHECK(conjugate_counterpart(RecurrenceId::ttr11, DiskIndex(1, 0)).is_zero());
  CHECK(conjugate_counterpart(RecurrenceId::ttr51, DiskIndex(1, 1)).is_zero());
  CHECK(conjugate_counterpart(RecurrenceId::ttr41, DiskIndex(0, 1)).is_zero());
}

TEST_CASE("all relations hold exactly for m, n <= 6") {
  for (RecurrenceId rid : kAllRecurrences) {
    for (int m = 0; m <= 6; ++m) {
      for (int n = 0; n <= 6; ++n) {
        INFO(recurrence_name(rid), " m=", m, " n=", n);
        CHECK(recurrence_residual(rid, DiskIndex(m, n)).is_zero());
        CHECK(conjugate_counterpart(rid, DiskIndex(m, n)).is_zero());
      }
    }
  }
}

TEST_CASE("a perturbed relation is detected") {
  // Dropping the w term of ttr41 must leave a nonzero residual.
  const int m = 2, n = 1;
  TriPoly s(GammaPoly::gamma(m + n + 1));
  TriPoly bad = s * zernike_exact(DiskIndex(m, n)) - TriPoly::zbar() * zernike_exact(DiskIndex(m, n + 1));
  CHECK_FALSE(bad.substitute_w().is_zero());
}

TEST_CASE("the operator-free form of ttr61 is not an identity") {
  // {(g+m+1) zbar - w} Z_{m,n} = (g+m+1)/(g+m+n+1) Z_{m+1,n} fails; the derivative is required.
  const int m = 1, n = 1;
  TriPoly g1(GammaPoly::gamma(m + 1)), s(GammaPoly::gamma(m + n + 1));
  TriPoly lhs = s * (g1 * TriPoly::zbar() - TriPoly::w()) * zernike_exact(DiskIndex(m, n));
  CHECK_FALSE((lhs - g1 * zernike_exact(DiskIndex(m + 1, n))).substitute_w().is_zero());
  CHECK(recurrence_residual(RecurrenceId::ttr61, DiskIndex(m, n)).is_zero());
}

TEST_CASE("recurrence names round-trip") {
  for (RecurrenceId rid : kAllRecurrences) CHECK(parse_recurrence(recurrence_name(rid)) == rid);
  CHECK_THROWS_AS(parse_recurrence("ttr99"), DomainError);
}
