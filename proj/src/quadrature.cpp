#include "diskpoly/quadrature.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace diskpoly {

double DiskRule::mass() const {
  double s = 0;
  for (double w : radial_weights) s += w;
  return std::numbers::pi * s;
}

DiskRule build_rule(RealParam gamma, int radial_order, int angular_count) {
  const double g = gamma;
  if (!(g > -1.0)) throw DomainError("build_rule: gamma must exceed -1");
  if (radial_order < 1) throw DomainError("build_rule: radial_order must be at least 1");
  if (angular_count < 1) throw DomainError("build_rule: angular_count must be at least 1");

  // Golub-Welsch for the Jacobi weight (1-x)^g (1+x)^0 on (-1, 1), then u = (1+x)/2.
  const int n = radial_order;
  const double a = g, b = 0.0, ab = a + b;
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = k == 0 ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
    if (k + 1 < n) {
      const double j = k + 1.0, t = 2.0 * j + ab;
      sub(k) = std::sqrt(4.0 * j * (j + a) * (j + b) * (j + ab) / (t * t * (t + 1.0) * (t - 1.0)));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (eig.info() != Eigen::Success) throw NonConvergence("build_rule: tridiagonal eigensolver failed");

  // mass of (1-u)^g on (0, 1)
  const double mu = 1.0 / (g + 1.0);
  DiskRule rule;
  rule.gamma = g;
  rule.angular_count = angular_count;
  for (int k = 0; k < n; ++k) {
    const double v0 = eig.eigenvectors()(0, k);
    rule.radial_nodes.push_back((1.0 + eig.eigenvalues()(k)) / 2.0);
    rule.radial_weights.push_back(mu * v0 * v0);
  }
  return rule;
}

DiskRule rule_for_degree(RealParam gamma, int degree_cap) {
  if (degree_cap < 0) throw DomainError("rule_for_degree: degree_cap must be nonnegative");
  // |Z_a|^2-type products have degree <= degree_cap in u
  return build_rule(gamma, degree_cap / 2 + 2, 4 * degree_cap + 1);
}

namespace {

void check_gamma(double gamma, const DiskRule& rule) {
  if (gamma != rule.gamma) throw DomainError("inner_product: gamma differs from the rule's gamma");
}

// All quadrature points with their weights (measure included).
template <class F>
void for_each_point(const DiskRule& rule, F&& f) {
  const double dtheta = 2 * std::numbers::pi / rule.angular_count;
  for (std::size_t i = 0; i < rule.radial_nodes.size(); ++i) {
    const double r = std::sqrt(rule.radial_nodes[i]);
    const double w = std::numbers::pi * rule.radial_weights[i] / rule.angular_count;
    for (int j = 0; j < rule.angular_count; ++j) f(std::polar(r, j * dtheta), w);
  }
}

}  // namespace

ComplexValue inner_product(const DiskFunction& f, const DiskFunction& g, RealParam gamma, const DiskRule& rule) {
  check_gamma(gamma, rule);
  CompensatedComplexSum<double> acc;
  for_each_point(rule, [&](ComplexValue z, double w) { acc.add(f(z) * std::conj(g(z)) * w); });
  return acc.value();
}

GramMatrix gram_matrix(int degree_cap, RealParam gamma, const DiskRule& rule) {
  if (degree_cap < 0) throw DomainError("gram_matrix: degree_cap must be nonnegative");
  check_gamma(gamma, rule);
  GramMatrix G;
  G.gamma = gamma;
  G.degree_cap = degree_cap;
  for (int d = 0; d <= degree_cap; ++d) {
    for (int m = 0; m <= d; ++m) G.indices.emplace_back(m, d - m);
  }
  const auto nb = static_cast<Eigen::Index>(G.indices.size());
  const auto np = static_cast<Eigen::Index>(rule.radial_nodes.size()) * rule.angular_count;
  // V(p, a) = sqrt(w_p) Z_a(z_p); G = V^T conj(V)
  Eigen::MatrixXcd V(np, nb);
  Eigen::Index p = 0;
  for_each_point(rule, [&](ComplexValue z, double w) {
    const double sw = std::sqrt(w);
    for (Eigen::Index a = 0; a < nb; ++a) V(p, a) = zernike_explicit(G.indices[a], gamma.value, z).value * sw;
    ++p;
  });
  G.entries = V.transpose() * V.conjugate();
  return G;
}

double GramMatrix::worst_offdiagonal_ratio() const {
  double worst = 0;
  for (Eigen::Index a = 0; a < entries.rows(); ++a) {
    for (Eigen::Index b = 0; b < entries.cols(); ++b) {
      if (a == b) continue;
      const double scale = std::sqrt(entries(a, a).real() * entries(b, b).real());
      worst = std::max(worst, std::abs(entries(a, b)) / scale);
    }
  }
  return worst;
}

double GramMatrix::hermitian_defect() const {
  if (entries.size() == 0) return 0;
  const double diag = entries.diagonal().cwiseAbs().maxCoeff();
  return (entries - entries.adjoint()).cwiseAbs().maxCoeff() / diag;
}

double monomial_integral(int a, int b, RealParam gamma) {
  if (a < 0 || b < 0) throw DomainError("monomial_integral: exponents must be nonnegative");
  if (!(gamma > -1.0)) throw DomainError("monomial_integral: gamma must exceed -1");
  if (a != b) return 0.0;
  const double g = gamma;
  return std::numbers::pi * std::exp(std::lgamma(a + 1.0) + std::lgamma(g + 1.0) - std::lgamma(g + a + 2.0));
}

double norm_by_monomials(DiskIndex idx, RealParam gamma) {
  if (!(gamma > -1.0)) throw DomainError("norm_by_monomials: gamma must exceed -1");
  const int m = idx.m, n = idx.n, k = std::min(m, n);
  using R = long double;
  const R g = gamma.value;
  // Z = sum_j c_j zbar^(m-j) z^(n-j) w^j, so |Z|^2 = sum_{j,l} c_j c_l |z|^(2(m+n-j-l)) w^(j+l)
  std::vector<R> c(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    c[j] = pochhammer(g + R(j + 1), m + n - j) * binomial<R>(m, j) * binomial<R>(n, j) * factorial<R>(j);
    if (j % 2 != 0) c[j] = -c[j];
  }
  CompensatedSum<R> acc;
  for (int j = 0; j <= k; ++j) {
    for (int l = 0; l <= k; ++l) {
      const int a = m + n - j - l;
      const R ge = g + R(j + l);
      // int |z|^(2a) w^ge dlambda = pi a! Gamma(ge+1) / Gamma(ge+a+2)
      const R integral = std::numbers::pi_v<R> * std::exp(std::lgamma(R(a + 1)) + std::lgamma(ge + 1) - std::lgamma(ge + R(a + 2)));
      acc.add(c[j] * c[l] * integral);
    }
  }
  return static_cast<double>(acc.value());
}

}  // namespace diskpoly
