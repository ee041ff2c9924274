#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "diskpoly/disk_poly.hpp"

using namespace diskpoly;
using C = ComplexValue;

namespace {

bool close(C a, C b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b))); }

const TriPoly Z = TriPoly::z();
const TriPoly Zb = TriPoly::zbar();
const TriPoly W = TriPoly::w();

TriPoly G(long s) { return TriPoly(GammaPoly::gamma(s)); }

}  // namespace

TEST_CASE("c_coeff") {
  CHECK(c_coeff(0, 0, 5.0) == 1.0);
  CHECK(c_coeff(1, 1, 0.0) == 2.0);
  CHECK(c_coeff(2, 3, 1.0) == 120.0);
}

TEST_CASE("zernike_explicit examples") {
  CHECK(zernike_explicit(DiskIndex(0, 0), 3.7, C(0.9, 0.1)).value == C(1.0));
  CHECK(close(zernike_explicit(DiskIndex(0, 1), 0.0, C(0.5)).value, C(0.5), 1e-15));
  CHECK(close(zernike_explicit(DiskIndex(1, 1), 0.0, C(0.5)).value, C(-1.0), 1e-15));
  CHECK(zernike_explicit(DiskIndex(1, 1), 0.0, C(0.5)).condition_estimate >= 1.0);
}

TEST_CASE("zernike_jacobi examples") {
  CHECK(close(zernike_jacobi(DiskIndex(1, 1), 0.0, C(0.5)).value, C(-1.0), 1e-15));
  CHECK(close(zernike_jacobi(DiskIndex(0, 2), 1.0, C(0.0, 0.4)).value, C(-0.96), 1e-15));
  CHECK(zernike_jacobi(DiskIndex(3, 1), 2.0, C(0.0)).value == C(0.0));
}

TEST_CASE("zernike_2f1 examples") {
  CHECK(close(zernike_2f1(DiskIndex(1, 1), 0.0, C(0.5)).value, C(-1.0), 1e-15));
  CHECK(close(zernike_2f1(DiskIndex(1, 0), 2.0, C(0.3, 0.4)).value, C(0.9, -1.2), 1e-15));
  CHECK(close(zernike_2f1(DiskIndex(2, 2), 1.0, C(0.6)).value, zernike_explicit(DiskIndex(2, 2), 1.0, C(0.6)).value, 1e-12));
  auto origin = zernike_2f1(DiskIndex(2, 2), 1.0, C(0.0));
  CHECK(origin.engine == Engine::explicit_sum);
  CHECK(close(origin.value, zernike_explicit(DiskIndex(2, 2), 1.0, C(0.0)).value, 0.0));
}

TEST_CASE("jacobi_p") {
  CHECK(jacobi_p(0, 0.3, 0.7, 0.2) == 1.0);
  CHECK(jacobi_p(1, 0.0, 0.0, 0.3) == doctest::Approx(0.3));
  for (int m = 0; m < 8; ++m) {
    for (double beta : {0.0, 0.5, 2.5}) {
      const double expected = (m % 2 ? -1.0 : 1.0) * pochhammer(1.0 + beta, m) / factorial<double>(m);
      CHECK(jacobi_p(m, 1.5, beta, -1.0) == doctest::Approx(expected).epsilon(1e-13));
    }
  }
  // Legendre P_3(x) = (5x^3 - 3x)/2 and a complex argument
  CHECK(jacobi_p(3, 0.0, 0.0, 0.4) == doctest::Approx((5 * 0.064 - 1.2) / 2));
  const C x(0.2, 0.5);
  CHECK(close(jacobi_p<double, C>(3, 0.0, 0.0, x), (5.0 * x * x * x - 3.0 * x) / 2.0, 1e-15));
  // Degenerate recurrence coefficients route through the hypergeometric form.
  CHECK(jacobi_p(2, -1.0, -1.0, 0.5) == doctest::Approx((0.25 - 1.0) / 4));
}

TEST_CASE("conjugation symmetry") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      CHECK(zernike_exact(DiskIndex(m, n)).conjugated() == zernike_exact(DiskIndex(n, m)));
      C z(u(rng), u(rng));
      C a = zernike_explicit(DiskIndex(m, n), 1.5, z).value;
      C b = std::conj(zernike_explicit(DiskIndex(n, m), 1.5, z).value);
      CHECK(close(a, b, 1e-13));
    }
  }
}

TEST_CASE("cross-engine agreement") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> rad(0.0, 0.95), ang(0.0, 6.283185307179586);
  double worst = 0.0;
  for (double gamma : {-0.5, 0.0, 1.5, 3.0}) {
    for (int t = 0; t < 20; ++t) {
      const C z = std::polar(rad(rng), ang(rng));
      for (int m = 0; m <= 8; ++m) {
        for (int n = 0; n <= 8; ++n) {
          C e = zernike_explicit(DiskIndex(m, n), gamma, z).value;
          for (C v : {zernike_jacobi(DiskIndex(m, n), gamma, z).value, zernike_2f1(DiskIndex(m, n), gamma, z).value}) {
            const double den = std::max(std::abs(e), std::abs(v));
            if (den > 0) worst = std::max(worst, std::abs(e - v) / den);
          }
        }
      }
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("zernike_exact examples") {
  CHECK(zernike_exact(DiskIndex(0, 0)) == TriPoly(1));
  CHECK(zernike_exact(DiskIndex(1, 0)) == G(1) * Zb);
  CHECK(zernike_exact(DiskIndex(1, 1)) == G(1) * G(2) * Z * Zb - G(2) * W);
}

TEST_CASE("zernike_exact matches the numeric engine at rational points") {
  const ExactComplex z{BigRational(1, 3), BigRational(-1, 4)};
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= 5; ++n) {
      for (int g0 : {0, 1, 3}) {
        ExactComplex ex = eval_exact(zernike_exact(DiskIndex(m, n)), g0, z);
        C nv = zernike_explicit(DiskIndex(m, n), double(g0), C(1.0 / 3, -0.25)).value;
        CHECK(close(C(ex.re.get_d(), ex.im.get_d()), nv, 1e-13));
      }
    }
  }
}

TEST_CASE("Rodrigues forms") {
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= 5; ++n) {
      const TriPoly expected = zernike_exact(DiskIndex(m, n));
      // (-1)^(m+n) w^(-g) d^m/dz^m d^n/dzbar^n w^(g+m+n)
      WeightedExpr e = d_dzbar(d_dz(WeightedExpr(m + n, TriPoly(1)), m), n);
      if ((m + n) % 2) e = -e;
      CHECK(exact_equal(e, WeightedExpr(0, expected)));
      // (-1)^m C w^(-g) d^m/dz^m (z^n w^(g+m))
      WeightedExpr f = d_dz(WeightedExpr(m, Z.pow(n)), m).scaled(GammaPoly::pochhammer(GammaPoly::gamma(m + 1), n));
      if (m % 2) f = -f;
      CHECK(exact_equal(f, WeightedExpr(0, expected)));
    }
  }
}

TEST_CASE("hermite_complex") {
  CHECK(hermite_complex(HermiteIndex(0, 0), C(0.3, 0.2)) == C(1.0));
  CHECK(hermite_complex(HermiteIndex(1, 0), C(0.3, 0.2)) == C(0.3, 0.2));
  CHECK(close(hermite_complex(HermiteIndex(1, 1), C(0.5)), C(-0.75), 1e-15));
  CHECK(hermite_exact(HermiteIndex(2, 1)) == Z * Z * Zb - TriPoly(2) * Z);
}

TEST_CASE("normalizations") {
  CHECK(to_dunkl(DiskIndex(0, 0), 1.0, C(0.3)) == C(1.0));
  CHECK(close(to_dunkl(DiskIndex(0, 1), 0.0, C(0.5)), C(0.5), 1e-15));
  for (int m = 0; m <= 6; ++m) {
    for (double g : {0.0, 1.5}) {
      CHECK(std::abs(to_dunkl(DiskIndex(m, m), g, std::polar(1.0, 0.7))) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  CHECK(to_wunsche(DiskIndex(2, 1), 0.5, C(0.1, 0.2)) == to_dunkl(DiskIndex(2, 1), 0.5, C(0.1, 0.2)));
  CHECK_THROWS_AS(to_dunkl(DiskIndex(1, 1), -1.5, C(0.1)), DomainError);
}

TEST_CASE("real_zernike_radial") {
  CHECK(real_zernike_radial(0, 0, 0.4) == 1.0);
  CHECK(real_zernike_radial(2, 0, 0.0) == doctest::Approx(-1.0));
  CHECK(real_zernike_radial(1, 1, 0.37) == doctest::Approx(0.37));
  // R^0_2 = 2 rho^2 - 1, R^2_4 = 4 rho^4 - 3 rho^2
  CHECK(real_zernike_radial(2, 0, 0.6) == doctest::Approx(2 * 0.36 - 1));
  CHECK(real_zernike_radial(4, 2, 0.6) == doctest::Approx(4 * 0.1296 - 3 * 0.36));
  CHECK_THROWS_AS(real_zernike_radial(3, 0, 0.5), DomainError);
  CHECK_THROWS_AS(real_zernike_radial(1, 2, 0.5), DomainError);
}

TEST_CASE("psi_eigenfunction") {
  CHECK(psi_eigenfunction(DiskIndex(0, 0), 1.0, C(0.0)) == C(1.0));
  CHECK(close(psi_eigenfunction(DiskIndex(0, 1), 1.0, C(0.5)), C(0.375), 1e-15));
  CHECK(std::abs(psi_eigenfunction(DiskIndex(1, 2), 3.0, std::polar(0.999999, 0.3))) < 1e-5);
  CHECK_THROWS_AS(psi_eigenfunction(DiskIndex(0, 0), 0.4, C(0.0)), DomainError);
  CHECK_THROWS_AS(psi_eigenfunction(DiskIndex(2, 0), 2.0, C(0.0)), DomainError);
  CHECK_THROWS_AS(psi_eigenfunction(DiskIndex(0, 0), 1.0, C(1.0)), DomainError);
}

TEST_CASE("engine names round-trip") {
  for (Engine e : {Engine::explicit_sum, Engine::jacobi, Engine::hyp2f1, Engine::recurrence}) {
    CHECK(parse_engine(engine_name(e)) == e);
  }
  CHECK_THROWS_AS(parse_engine("bogus"), DomainError);
}
