#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "diskpoly/exact_ring.hpp"

using namespace diskpoly;

namespace {

BigRational q(long a, long b) {
  BigRational r(a, b);
  r.canonicalize();
  return r;
}

const TriPoly Z = TriPoly::z();
const TriPoly Zb = TriPoly::zbar();
const TriPoly W = TriPoly::w();
const TriPoly G = TriPoly(GammaPoly::gamma());

TriPoly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> e(0, max_deg), c(-4, 4), count(1, 4);
  TriPoly p;
  for (int t = count(rng); t > 0; --t) {
    int i = e(rng), j = e(rng), k = e(rng);
    if (i + j + k > max_deg) continue;
    GammaPoly coef(std::vector<BigRational>{BigRational(c(rng)), q(c(rng), 3)});
    p.add_term({i, j, k}, coef);
  }
  return p;
}

WeightedExpr random_expr(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> off(-2, 2), mult(-1, 1);
  return WeightedExpr(mult(rng), off(rng), random_poly(rng, max_deg));
}

}  // namespace

TEST_CASE("GammaPoly arithmetic") {
  GammaPoly g = GammaPoly::gamma();
  GammaPoly p = (g + GammaPoly(1)) * (g + GammaPoly(2));
  CHECK(p == GammaPoly(std::vector<BigRational>{2, 3, 1}));
  CHECK(p.to_string() == "g^2 + 3*g + 2");
  CHECK(GammaPoly::pochhammer(GammaPoly::gamma(1), 2) == p);
  CHECK(p.shifted(1) == (g + GammaPoly(2)) * (g + GammaPoly(3)));
  CHECK(p.divided_exactly(g + GammaPoly(2)) == g + GammaPoly(1));
  CHECK_THROWS_AS(p.divided_exactly(g), UnsupportedExpression);
  CHECK(p.eval(BigRational(1, 2)) == BigRational(15, 4));
  CHECK((p - p).is_zero());
  CHECK(GammaPoly(BigRational(-1, 2)).to_string() == "-1/2");
}

TEST_CASE("ring_add examples") {
  CHECK(ring_add(WeightedExpr(0, TriPoly(1)), WeightedExpr(0, TriPoly(-1))).is_zero());
  WeightedExpr r = ring_add(WeightedExpr(1, TriPoly(1)), WeightedExpr(0, TriPoly()));
  CHECK(r.offset() == 1);
  CHECK(r.body() == TriPoly(1));
  WeightedExpr s = ring_add(WeightedExpr(1, TriPoly(1)), WeightedExpr(0, TriPoly(1)));
  CHECK(s.offset() == 0);
  CHECK(s.body() == W + TriPoly(1));
}

TEST_CASE("ring_mul examples") {
  WeightedExpr a = ring_mul(WeightedExpr(0, Z), Zb);
  CHECK(a.offset() == 0);
  CHECK(a.body() == Z * Zb);
  WeightedExpr b = ring_mul(WeightedExpr(2, TriPoly(1)), W);
  CHECK(exact_equal(b, WeightedExpr(3, TriPoly(1))));
  CHECK_THROWS_AS(ring_mul(WeightedExpr(0, TriPoly(1)), WeightedExpr(0, TriPoly(1))), UnsupportedExpression);
  // w^(g+1) * w^(-g-1) is a plain polynomial again.
  WeightedExpr c = ring_mul(WeightedExpr(1, 1, Z), WeightedExpr(-1, -1, Zb));
  CHECK(c.gamma_mult() == 0);
  CHECK(normalize(c, true) == Z * Zb);
}

TEST_CASE("derivative examples") {
  WeightedExpr a = d_dz(WeightedExpr(0, TriPoly(1)));
  CHECK(a.offset() == -1);
  CHECK(a.body() == -(G * Zb));
  WeightedExpr b = d_dz(WeightedExpr(0, Z));
  CHECK(b.offset() == -1);
  CHECK(b.body() == W - G * Z * Zb);
  WeightedExpr c = d_dzbar(WeightedExpr(0, TriPoly(1)));
  CHECK(c.offset() == -1);
  CHECK(c.body() == -(G * Z));
  // Plain polynomials differentiate without acquiring a weight.
  WeightedExpr d = d_dz(WeightedExpr::plain(Z * Z * Zb));
  CHECK(d.offset() == 0);
  CHECK(d.body() == TriPoly(2) * Z * Zb);
}

TEST_CASE("normalize examples") {
  CHECK(normalize(WeightedExpr(0, W)) == TriPoly(1) - Z * Zb);
  CHECK(normalize(WeightedExpr(0, W * Z - Z)) == -(Z * Z * Zb));
  CHECK(normalize(WeightedExpr(0, TriPoly())).is_zero());
  CHECK_THROWS_AS(normalize(WeightedExpr(0, W), true), UnsupportedExpression);
  CHECK(normalize(WeightedExpr::plain(TriPoly(1), 2), true) == (TriPoly(1) - Z * Zb).pow(2));
}

TEST_CASE("exact_equal examples") {
  WeightedExpr a(2, Z * W + G);
  CHECK(exact_equal(a, a));
  CHECK(exact_equal(WeightedExpr(1, TriPoly(1)), WeightedExpr(0, W)));
  CHECK_FALSE(exact_equal(WeightedExpr(0, Z), WeightedExpr(0, Zb)));
  CHECK_THROWS_AS(exact_equal(WeightedExpr(0, Z), WeightedExpr::plain(Z)), UnsupportedExpression);
}

TEST_CASE("eval_exact examples") {
  const ExactComplex origin{0, 0}, half{BigRational(1, 2), 0};
  CHECK(eval_exact(WeightedExpr(0, TriPoly(1)), 2, origin) == ExactComplex{1, 0});
  CHECK(eval_exact(WeightedExpr(0, Z * Zb), 0, half) == ExactComplex{BigRational(1, 4), 0});
  CHECK(eval_exact(WeightedExpr(1, TriPoly(1)), 1, half) == ExactComplex{BigRational(9, 16), 0});
  CHECK_THROWS_AS(eval_exact(WeightedExpr(0, TriPoly(1)), BigRational(1, 2), half), UnsupportedExpression);
}

TEST_CASE("serialization is deterministic graded-lex") {
  TriPoly p = Z * Zb + TriPoly(3) * W - G * Z + TriPoly(BigRational(1, 2));
  CHECK(p.to_string() == "(1) * z^1 zbar^1 w^0 + (3) * z^0 zbar^0 w^1 + (-g) * z^1 zbar^0 w^0 + (1/2) * z^0 zbar^0 w^0");
  CHECK(TriPoly().to_string() == "0");
}

TEST_CASE("d_dz and d_dzbar commute") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 100; ++t) {
    WeightedExpr e = random_expr(rng, 4);
    CHECK(exact_equal(d_dz(d_dzbar(e)), d_dzbar(d_dz(e))));
  }
}

TEST_CASE("normalize is a ring homomorphism") {
  std::mt19937 rng(99);
  for (int t = 0; t < 50; ++t) {
    WeightedExpr a(1, 0, random_poly(rng, 4)), b(1, 0, random_poly(rng, 4));
    TriPoly c = random_poly(rng, 3);
    CHECK(normalize(ring_add(a, b)) == normalize(a) + normalize(b));
    CHECK(normalize(ring_mul(a, c)) == normalize(a) * c.substitute_w());
  }
}

TEST_CASE("eval_exact agrees with numeric evaluation") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-9, 9);
  for (int t = 0; t < 40; ++t) {
    TriPoly p = random_poly(rng, 4);
    ExactComplex z{q(num(rng), 13), q(num(rng), 17)};
    for (int g0 = 0; g0 <= 4; ++g0) {
      ExactComplex ex = eval_exact(WeightedExpr(0, p), g0, z);
      std::complex<double> nz(z.re.get_d(), z.im.get_d());
      const double w = 1.0 - std::norm(nz);
      std::complex<double> nv = p.substitute_w().eval_numeric<double>(g0, nz) * std::pow(w, g0);
      const double scale = std::max(1.0, std::abs(nv));
      CHECK(std::abs(std::complex<double>(ex.re.get_d(), ex.im.get_d()) - nv) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("derivative rule matches central finite differences") {
  std::mt19937 rng(11);
  const double h = 1e-5;
  for (int t = 0; t < 30; ++t) {
    WeightedExpr e(1, 1, random_poly(rng, 3));
    const int g0 = 2;
    auto value = [&](const WeightedExpr& x, std::complex<double> z) {
      const double w = 1.0 - std::norm(z);
      return x.body().eval_numeric<double>(g0, z) * std::pow(w, g0 + x.offset());
    };
    const std::complex<double> z0(0.31, -0.22);
    // d/dz = (d/dx - i d/dy) / 2
    auto fx = (value(e, z0 + h) - value(e, z0 - h)) / (2 * h);
    auto fy = (value(e, z0 + std::complex<double>(0, h)) - value(e, z0 - std::complex<double>(0, h))) / (2 * h);
    const std::complex<double> i(0, 1);
    CHECK(std::abs(value(d_dz(e), z0) - (fx - i * fy) / 2.0) <= 1e-7);
    CHECK(std::abs(value(d_dzbar(e), z0) - (fx + i * fy) / 2.0) <= 1e-7);
    ExactComplex zq{q(31, 100), q(-22, 100)};
    ExactComplex ex = eval_exact(e, g0, zq);
    CHECK(std::abs(std::complex<double>(ex.re.get_d(), ex.im.get_d()) - value(e, z0)) <= 1e-12);
  }
}

TEST_CASE("weights outside the supported class are rejected") {
  CHECK_THROWS_AS(WeightedExpr(2, 0, TriPoly(1)), UnsupportedExpression);
  CHECK_THROWS_AS(ring_mul(WeightedExpr(-1, 0, TriPoly(1)), WeightedExpr(-1, 0, TriPoly(1))), UnsupportedExpression);
}
