/**
 * @file quadrature.hpp
 * @brief Product quadrature on the disk for the weight (1-|z|^2)^gamma and the
 *        Gram matrix of the family.
 *
 * With u = r^2 the measure becomes (1/2) (1-u)^gamma du dtheta: Gauss nodes for
 * (1-u)^gamma on (0, 1) in u, a uniform grid in theta.
 */
#ifndef DISKPOLY_QUADRATURE_HPP
#define DISKPOLY_QUADRATURE_HPP

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "diskpoly/disk_poly.hpp"

namespace diskpoly {

struct DiskRule {
  double gamma = 0;
  std::vector<double> radial_nodes;    // u = r^2 in (0, 1)
  std::vector<double> radial_weights;  // sum to 1/(gamma+1)
  int angular_count = 1;

  /// pi * sum of radial weights: the measure of the disk, pi/(gamma+1).
  double mass() const;
};

/// Exact for radial polynomials of degree <= 2 radial_order - 1 in u and for
/// trigonometric polynomials of degree < angular_count.
DiskRule build_rule(RealParam gamma, int radial_order, int angular_count);
/// Rule that integrates every product Z_a conj(Z_b) with |a|, |b| <= degree_cap,
/// with angular_count = 4 degree_cap + 1.
DiskRule rule_for_degree(RealParam gamma, int degree_cap);

using DiskFunction = std::function<ComplexValue(ComplexValue)>;

/// int_D f conj(g) (1-|z|^2)^gamma dlambda by the rule; gamma must match the rule's.
ComplexValue inner_product(const DiskFunction& f, const DiskFunction& g, RealParam gamma, const DiskRule& rule);

struct GramMatrix {
  double gamma = 0;
  int degree_cap = 0;
  std::vector<DiskIndex> indices;  // all (m, n) with m + n <= degree_cap, by degree then m
  Eigen::MatrixXcd entries;

  /// max |G_ab| / sqrt(G_aa G_bb) over a != b.
  double worst_offdiagonal_ratio() const;
  /// max |G_ab - conj(G_ba)| relative to the largest diagonal entry.
  double hermitian_defect() const;
};

GramMatrix gram_matrix(int degree_cap, RealParam gamma, const DiskRule& rule);

/// int_D z^a zbar^b (1-|z|^2)^gamma dlambda = delta_ab pi a! Gamma(gamma+1) / Gamma(gamma+a+2).
double monomial_integral(int a, int b, RealParam gamma);

/// ||Z_{m,n}||^2 by expanding |Z_{m,n}|^2 into monomials times powers of w and
/// integrating term by term; independent of any quadrature rule.
double norm_by_monomials(DiskIndex idx, RealParam gamma);

}  // namespace diskpoly

#endif  // DISKPOLY_QUADRATURE_HPP
