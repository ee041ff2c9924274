/**
 * @file identities.hpp
 * @brief Weighted differential operators and exact residuals of the operational,
 *        Nielsen-type and addition formulae.
 *
 * Every *_residual returning a TriPoly gives LHS - RHS in Q[gamma][z, zbar]
 * (w already substituted) with gamma symbolic; the identity holds iff the
 * result is the zero polynomial. Where a formula carries gamma-dependent
 * denominators, both sides are multiplied by the stated factor first.
 */
#ifndef DISKPOLY_IDENTITIES_HPP
#define DISKPOLY_IDENTITIES_HPP

#include <string>

#include "diskpoly/disk_poly.hpp"

namespace diskpoly {

/// A_m(f) = w^(m+1) d^m/dz^m (w^(m-1) f). f must carry no gamma in its weight.
WeightedExpr apply_A_m(int m, const WeightedExpr& f);
inline WeightedExpr apply_A_m(int m, const TriPoly& f) { return apply_A_m(m, WeightedExpr::plain(f)); }

/// (w^2 d/dz)^m f applied one factor at a time (the left side of the closed form for A_m).
WeightedExpr apply_w2_dz_power(int m, const TriPoly& f);

/// (-1)^m C^gamma_{m,n} w^(-gamma) d^m/dz^m (z^n w^(gamma+m) f).
WeightedExpr apply_op_A(int m, int n, const WeightedExpr& f);
/// (-1)^(m+n) w^(-gamma) d^(m+n)/dz^m dzbar^n (w^(gamma+m+n) f).
WeightedExpr apply_op_B(int m, int n, const WeightedExpr& f);

/// nabla^gamma_m o conj-nabla^gamma'_n applied to a plain polynomial by composing
/// the first-order factors nabla_a = -w d/dz + a zbar (the rightmost, a = gamma - m,
/// acts first). gamma and gamma' are polynomials in the symbolic gamma, typically
/// gamma itself and gamma + delta, or constants.
WeightedExpr apply_op_nabla(int m, int n, const GammaPoly& gamma, const GammaPoly& gamma_prime,
                            const WeightedExpr& f);

/// Closed form (-1)^(m+n) w^(m+1-gamma) d^m/dz^m (w^(gamma-gamma'+n) d^n/dzbar^n (w^(gamma'-1) f))
/// for gamma' = gamma + delta; used to cross-check apply_op_nabla.
WeightedExpr apply_op_nabla_closed(int m, int n, int delta, const TriPoly& f);

/// Right-hand side of a Burchnall-type formula (1: A, 2: B, 3: nabla) as a
/// polynomial; `reversed` sums the terms in the opposite order. For formula 3
/// the result is multiplied by (gamma)_n to clear (gamma+k)_{n-k}.
TriPoly burchnall_rhs(int formula, int m, int n, const TriPoly& f, const GammaPoly& gamma_prime, bool reversed = false);

/// LHS - RHS of Burchnall formula 1, 2 or 3. gamma_prime only matters for formula 3.
TriPoly burchnall_residual(int formula, int m, int n, const TriPoly& f,
                           const GammaPoly& gamma_prime = GammaPoly::gamma());

/// A_{m+m'}(f) - A_m(A_{m'}(f)).
TriPoly composition_residual(int m, int mprime, const TriPoly& f);
/// (w^2 d/dz)^m f - A_m(f).
TriPoly iterated_operator_residual(int m, const TriPoly& f);

/// sum_j (-m)_j (gamma+m)_j / j! zbar^j Z^(gamma+j)_{m-j,n} minus 0 (m > n) or
/// (-n)_m (gamma+1+m)_n z^(n-m) w^m (m <= n).
TriPoly corollary32_residual(int m, int n);
/// A^gamma_{m,n}(w^(-gamma-m)) minus its closed form; the operator route to the same corollary.
TriPoly corollary32_operator_residual(int m, int n);

/// (gamma+1)_m * 2F1(-m, gamma+m; gamma+1 | 1), which vanishes for m >= 1.
GammaPoly chu_vandermonde_residual(int m);

/// (gamma+m+1)_n H_{n,m} w^m minus m! sum_j sum_k (-1)^k (gamma+m)_k / k!
/// zbar^j w^(j-k) / (j-k)! Z^(gamma+j)_{m-j,n} / (m-j)!.
TriPoly hermite_corollary_residual(int m, int n);

enum class NielsenId { eq41, eq42, nielsen1, nielsen2 };
std::string nielsen_name(NielsenId id);
NielsenId parse_nielsen(const std::string& s);

/// Residual of a Nielsen-type formula. Indices a formula does not use are ignored.
TriPoly nielsen_residual(NielsenId which, int m, int n, int r, int s);

/// d^(j+k)/dz^j dzbar^k Z^gamma_{r,s} minus r! s! (gamma+r+1)_j (gamma+s+1)_k /
/// ((r-k)! (s-j)!) Z^(gamma+j+k)_{r-k,s-j}, for j <= s, k <= r.
TriPoly mixed_derivative_residual(int r, int s, int j, int k);

/// Numeric residual of the addition formula at x = (z + w)/sqrt(2):
/// (1-|x|^2)^gamma Z^gamma_{m,n}(x) minus the quadruple sum. gamma + m must be a
/// positive integer; |z|, |w| < 1 and |z + w| < sqrt(2).
ComplexValue runge_residual(int m, int n, int gamma, ComplexValue z, ComplexValue w);
/// Left-hand side alone, for scaling the residual.
ComplexValue runge_lhs(int m, int n, int gamma, ComplexValue z, ComplexValue w);

/// Exact form at rational points: both sides are multiplied by 2^((m+n)/2), which
/// makes them rational; returns the scaled difference.
ExactComplex runge_residual_exact(int m, int n, int gamma, const ExactComplex& z, const ExactComplex& w);

/// sum over s1+s2+s3+s4 = gamma of |z|^(2(s3+s4)) (1-|z|^2)^(s1+s2) / s!; equals 2^gamma / gamma!.
double runge_remark_value(int gamma, ComplexValue z);
BigRational runge_remark_value_exact(int gamma, const ExactComplex& z);

}  // namespace diskpoly

#endif  // DISKPOLY_IDENTITIES_HPP
