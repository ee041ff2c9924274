#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "diskpoly/quadrature.hpp"

using namespace diskpoly;
using C = ComplexValue;

namespace {

constexpr double pi = std::numbers::pi;

DiskFunction Z(int m, int n, double g) {
  return [=](C z) { return zernike_explicit(DiskIndex(m, n), g, z).value; };
}

// ||Z_{m,n}||^2 from mpmath, integrating |Z|^2 (1-r^2)^g over the disk adaptively.
struct NormRef {
  double g;
  int m, n;
  double value;
};
const NormRef kNorms[] = {
    {0.0, 1, 1, 4.18879020478639098462},
    {0.0, 0, 0, pi},
    {1.0, 2, 1, 60.3185789489240301785},
    {2.5, 2, 3, 57972.7794344237103008},
    {0.0, 3, 5, 567477190.751477275919},
};

}  // namespace

TEST_CASE("rule mass") {
  CHECK(build_rule(0.0, 3, 1).mass() == doctest::Approx(pi).epsilon(1e-14));
  CHECK(build_rule(1.0, 3, 1).mass() == doctest::Approx(pi / 2).epsilon(1e-14));
  CHECK(std::abs(build_rule(2.5, 5, 1).mass() - pi / 3.5) <= 1e-12);
  CHECK(std::abs(build_rule(-0.5, 7, 1).mass() - pi / 0.5) <= 1e-12);
}

TEST_CASE("rule shape and errors") {
  const DiskRule r = build_rule(1.5, 6, 9);
  CHECK(r.radial_nodes.size() == 6);
  CHECK(r.angular_count == 9);
  for (std::size_t i = 0; i < r.radial_nodes.size(); ++i) {
    CHECK(r.radial_nodes[i] > 0);
    CHECK(r.radial_nodes[i] < 1);
    CHECK(r.radial_weights[i] > 0);
  }
  CHECK_THROWS_AS(build_rule(-1.0, 3, 1), DomainError);
  CHECK_THROWS_AS(build_rule(-2.0, 3, 1), DomainError);
  CHECK_THROWS_AS(build_rule(0.0, 0, 1), DomainError);
  CHECK_THROWS_AS(build_rule(0.0, 2, 0), DomainError);
}

TEST_CASE("radial exactness up to degree 2n-1") {
  // int_0^1 u^k (1-u)^g du = B(k+1, g+1)
  for (double g : {0.0, 1.0, 2.5, -0.5}) {
    const DiskRule r = build_rule(g, 5, 1);
    for (int k = 0; k <= 9; ++k) {
      double s = 0;
      for (std::size_t i = 0; i < r.radial_nodes.size(); ++i) s += r.radial_weights[i] * std::pow(r.radial_nodes[i], k);
      const double exact = std::exp(std::lgamma(k + 1.0) + std::lgamma(g + 1) - std::lgamma(g + k + 2));
      CHECK_MESSAGE(std::abs(s - exact) <= 1e-14 * exact * 10, "g=" << g << " k=" << k);
    }
  }
}

TEST_CASE("inner product examples") {
  const DiskRule r0 = rule_for_degree(0.0, 4);
  CHECK(std::abs(inner_product(Z(0, 0, 0), Z(0, 0, 0), 0.0, r0) - C(pi)) <= 1e-13);
  CHECK(std::abs(inner_product(Z(1, 0, 0), Z(0, 1, 0), 0.0, r0)) <= 1e-14);
  const C n11 = inner_product(Z(1, 1, 0), Z(1, 1, 0), 0.0, r0);
  CHECK(std::abs(n11.imag()) <= 1e-14);
  CHECK(std::abs(n11.real() - kNorms[0].value) <= 1e-12 * kNorms[0].value);
  CHECK_THROWS_AS(inner_product(Z(0, 0, 0), Z(0, 0, 0), 1.0, r0), DomainError);
}

TEST_CASE("monomial oracle") {
  CHECK(monomial_integral(0, 0, 0.0) == doctest::Approx(pi));
  CHECK(monomial_integral(2, 1, 1.0) == 0.0);
  // a = 1, g = 1: pi * 1 * 1 / 3!
  CHECK(monomial_integral(1, 1, 1.0) == doctest::Approx(pi / 6));
  for (const auto& ref : kNorms) {
    CHECK_MESSAGE(std::abs(norm_by_monomials(DiskIndex(ref.m, ref.n), ref.g) - ref.value) <= 1e-12 * ref.value,
                  "m=" << ref.m << " n=" << ref.n << " g=" << ref.g);
  }
}

TEST_CASE("Gram matrix orthogonality") {
  for (double g : {0.0, 1.0, 2.5}) {
    for (int cap : {4, 10}) {
      const DiskRule r = rule_for_degree(g, cap);
      const GramMatrix G = gram_matrix(cap, g, r);
      CHECK(G.indices.size() == static_cast<std::size_t>((cap + 1) * (cap + 2) / 2));
      CHECK_MESSAGE(G.worst_offdiagonal_ratio() <= 1e-10, "g=" << g << " cap=" << cap);
      CHECK(G.hermitian_defect() <= 1e-14);
      for (std::size_t a = 0; a < G.indices.size(); ++a) {
        const double d = G.entries(a, a).real();
        CHECK(d > 0);
        CHECK(std::abs(G.entries(a, a).imag()) <= 1e-13 * d);
        const double oracle = norm_by_monomials(G.indices[a], g);
        CHECK_MESSAGE(std::abs(d - oracle) <= 1e-10 * oracle, "m=" << G.indices[a].m << " n=" << G.indices[a].n);
      }
    }
  }
}

TEST_CASE("entries across different m - n vanish") {
  const GramMatrix G = gram_matrix(5, 1.0, rule_for_degree(1.0, 5));
  const double diag = G.entries.diagonal().cwiseAbs().maxCoeff();
  for (std::size_t a = 0; a < G.indices.size(); ++a) {
    for (std::size_t b = 0; b < G.indices.size(); ++b) {
      if (G.indices[a].m - G.indices[a].n != G.indices[b].m - G.indices[b].n) {
        CHECK(std::abs(G.entries(a, b)) <= 1e-14 * diag);
      }
    }
  }
}

TEST_CASE("rule saturation") {
  for (double g : {0.0, 2.5}) {
    const int cap = 6;
    const DiskRule r = rule_for_degree(g, cap);
    const DiskRule r2 = build_rule(g, 2 * static_cast<int>(r.radial_nodes.size()), r.angular_count);
    const GramMatrix a = gram_matrix(cap, g, r), b = gram_matrix(cap, g, r2);
    const double scale = a.entries.diagonal().cwiseAbs().maxCoeff();
    CHECK((a.entries - b.entries).cwiseAbs().maxCoeff() <= 1e-12 * scale);
  }
}
