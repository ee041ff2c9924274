#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "diskpoly/scalar_kernel.hpp"

using namespace diskpoly;

TEST_CASE("pochhammer examples") {
  CHECK(pochhammer(2.7, 0) == 1.0);
  CHECK(pochhammer(1.0, 5) == 120.0);
  CHECK(pochhammer(3.0, 2) == 12.0);
}

TEST_CASE("pochhammer step property") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-6.0, 6.0);
  for (int trial = 0; trial < 40; ++trial) {
    const double a = dist(rng);
    for (int n = 0; n < 50; ++n) {
      const double lhs = pochhammer(a, n + 1);
      const double rhs = pochhammer(a, n) * (a + n);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    }
  }
}

TEST_CASE("pochhammer vanishes at negative integers") {
  for (int k = 0; k < 10; ++k) {
    for (int n = k + 1; n < 15; ++n) CHECK(pochhammer(double(-k), n) == 0.0);
    if (k > 0) CHECK(pochhammer(double(-k), k) != 0.0);
  }
}

TEST_CASE("log path agrees with direct product") {
  for (double a : {0.5, 1.0, 3.25, 10.0, -3.5, -7.25}) {
    for (int n = 1; n < 60; ++n) {
      double direct = 1.0;
      for (int i = 0; i < n; ++i) direct *= a + i;
      auto [lg, sign] = log_pochhammer(a, n);
      CHECK(sign * std::exp(lg) == doctest::Approx(direct).epsilon(1e-12));
    }
  }
}

TEST_CASE("pochhammer switches to log-gamma past overflow of the running product") {
  // (1)_170 = 170! ~ 7.3e306 passes the 1e300 switch.
  const double v = pochhammer(1.0, 170);
  CHECK(std::isfinite(v));
  CHECK(v == doctest::Approx(std::exp(std::lgamma(171.0))).epsilon(1e-12));
  CHECK(pochhammer(-0.5, 171) < 0.0);
  CHECK(std::isinf(pochhammer(1.0, 200)));
}

TEST_CASE("multinomial") {
  CHECK(multinomial(2, {1, 1, 0, 0}) == 2);
  CHECK(multinomial(0, {0, 0, 0, 0}) == 1);
  CHECK(multinomial(4, {1, 1, 1, 1}) == 24);
  CHECK(multinomial(5, {2, 3}) == 10);
  CHECK_THROWS_AS(multinomial(3, {1, 1}), DomainError);
  CHECK_THROWS_AS(multinomial(0, {1, -1}), DomainError);
}

TEST_CASE("stable_sum") {
  CHECK(stable_sum(std::vector<ComplexValue>{}) == ComplexValue(0.0));
  CHECK(stable_sum(std::vector<ComplexValue>{1.0, -1.0, 1e-16}) == ComplexValue(1e-16));
  std::vector<ComplexValue> tenths(10, ComplexValue(0.1, -0.1));
  ComplexValue s = stable_sum(tenths);
  CHECK(std::abs(s.real() - 1.0) <= std::numeric_limits<double>::epsilon());
  CHECK(std::abs(s.imag() + 1.0) <= std::numeric_limits<double>::epsilon());
}

TEST_CASE("compensated sum survives large cancellation") {
  CompensatedSum<double> acc;
  acc.add(1e16);
  for (int i = 0; i < 1000; ++i) acc.add(1.0);
  acc.add(-1e16);
  CHECK(acc.value() == 1000.0);
}

TEST_CASE("binomial, factorial and ipow") {
  CHECK(binomial<double>(10, 3) == 120.0);
  CHECK(binomial<double>(4, 5) == 0.0);
  CHECK(factorial<double>(6) == 720.0);
  CHECK(factorial_exact(25) == mpz_class("15511210043330985984000000"));
  CHECK(ipow(2.0, 10) == 1024.0);
  CHECK(ipow(ComplexValue(0, 1), 3) == ComplexValue(0, -1));
  CHECK(ipow(2.0, -2) == 0.25);
}

TEST_CASE("RealParam rejects non-finite values") {
  CHECK_THROWS_AS(RealParam(std::nan("")), DomainError);
  CHECK(double(RealParam(1.5)) == 1.5);
}
