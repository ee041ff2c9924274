/**
 * @file disk_poly.hpp
 * @brief The disk polynomials Z^gamma_{m,n}(z, zbar): numeric engines, exact
 *        constructor, normalization conversions and complex Hermite polynomials.
 *
 * Numeric engines are templated on the real scalar. The Real parameter is not
 * deduced, so plain calls run in double and `zernike_explicit<MpReal>(...)`
 * selects another precision.
 */
#ifndef DISKPOLY_DISK_POLY_HPP
#define DISKPOLY_DISK_POLY_HPP

#include <algorithm>
#include <complex>
#include <limits>
#include <string>
#include <type_traits>

#include "diskpoly/exact_ring.hpp"
#include "diskpoly/scalar_kernel.hpp"

namespace diskpoly {

enum class Engine { explicit_sum, jacobi, hyp2f1, recurrence };

std::string engine_name(Engine e);
/// Accepts "explicit", "jacobi", "hyp2f1", "recurrence"; throws DomainError otherwise.
Engine parse_engine(const std::string& s);

struct DiskIndex {
  int m = 0;
  int n = 0;

  DiskIndex() = default;
  DiskIndex(int m_, int n_) : m(m_), n(n_) {
    if (m < 0 || n < 0) throw DomainError("DiskIndex: indices must be nonnegative");
  }
};

struct HermiteIndex {
  int p = 0;
  int q = 0;

  HermiteIndex() = default;
  HermiteIndex(int p_, int q_) : p(p_), q(q_) {
    if (p < 0 || q < 0) throw DomainError("HermiteIndex: indices must be nonnegative");
  }
};

template <class Real>
struct BasicDiskPolyValue {
  std::complex<Real> value;
  Engine engine = Engine::explicit_sum;
  // max |term| / |value| of the explicit sum; >= 1, infinite for a cancelled zero.
  double condition_estimate = 1.0;
};

using DiskPolyValue = BasicDiskPolyValue<double>;

template <class T>
using NoDeduce = std::type_identity_t<T>;

namespace detail {

template <class Real>
void check_finite(const Real& g, const char* what) {
  using std::isfinite;
  if (!isfinite(static_cast<double>(g))) throw DomainError(std::string(what) + " must be finite");
}

template <class Real>
double condition_ratio(const Real& max_term, const Real& magnitude) {
  if (max_term == Real(0)) return 1.0;
  if (magnitude == Real(0)) return std::numeric_limits<double>::infinity();
  return std::max(1.0, static_cast<double>(max_term / magnitude));
}

// Largest term magnitude of the explicit sum, used as the conditioning yardstick
// for engines that do not sum the explicit terms themselves.
template <class Real>
Real explicit_max_term(int m, int n, const Real& gamma, const std::complex<Real>& z) {
  using std::abs;
  const Real r = abs(z);
  const Real w = Real(1) - r * r;
  Real best(0);
  for (int j = 0; j <= std::min(m, n); ++j) {
    Real t = abs(pochhammer(gamma + Real(j + 1), m + n - j)) * binomial<Real>(m, j) *
             binomial<Real>(n, j) * factorial<Real>(j) * ipow(abs(w), j) * ipow(r, m + n - 2 * j);
    best = std::max(best, t);
  }
  return best;
}

}  // namespace detail

/// C^gamma_{m,n} = (gamma + m + 1)_n.
template <class Real = double>
Real c_coeff(int m, int n, const NoDeduce<Real>& gamma) {
  if (m < 0 || n < 0) throw DomainError("c_coeff: indices must be nonnegative");
  return pochhammer(gamma + Real(m + 1), n);
}

/// Jacobi polynomial P^(alpha,beta)_k(x) by the three-term recurrence in k.
/// X may be real or complex.
template <class Real = double, class X = Real>
X jacobi_p(int k, const NoDeduce<Real>& alpha, const NoDeduce<Real>& beta, const X& x) {
  if (k < 0) throw DomainError("jacobi_p: degree must be nonnegative");
  if (k == 0) return X(1);
  const Real ab = alpha + beta;
  X p0(1);
  X p1 = X(alpha + Real(1)) + X(ab + Real(2)) * (x - X(1)) / X(2);
  for (int n = 2; n <= k; ++n) {
    const Real nn(n);
    const Real c0 = Real(2) * nn * (nn + ab) * (Real(2) * nn + ab - Real(2));
    if (c0 == Real(0)) {
      // Degenerate recurrence coefficients (alpha + beta a negative integer):
      // use sum_s binom(k+alpha, k-s) binom(k+beta, s) ((x-1)/2)^s ((x+1)/2)^(k-s),
      // whose generalized binomials have no poles.
      auto gbinom = [](const Real& a, int j) {
        Real r(1);
        for (int i = 0; i < j; ++i) r = r * (a - Real(i)) / Real(i + 1);
        return r;
      };
      const X xm = (x - X(1)) / X(2), xp = (x + X(1)) / X(2);
      X acc(0);
      for (int s = 0; s <= k; ++s) {
        acc += X(gbinom(Real(k) + alpha, k - s) * gbinom(Real(k) + beta, s)) * ipow(xm, s) * ipow(xp, k - s);
      }
      return acc;
    }
    const Real c1 = (Real(2) * nn + ab - Real(1)) * (Real(2) * nn + ab) * (Real(2) * nn + ab - Real(2));
    const Real c2 = (Real(2) * nn + ab - Real(1)) * (alpha * alpha - beta * beta);
    const Real c3 = Real(2) * (nn + alpha - Real(1)) * (nn + beta - Real(1)) * (Real(2) * nn + ab);
    X p2 = ((X(c1) * x + X(c2)) * p1 - X(c3) * p0) / X(c0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

/// Explicit finite sum, the reference engine.
template <class Real = double>
BasicDiskPolyValue<Real> zernike_explicit(DiskIndex idx, const NoDeduce<Real>& gamma,
                                          const std::complex<NoDeduce<Real>>& z) {
  using std::abs;
  detail::check_finite(gamma, "gamma");
  const int m = idx.m, n = idx.n;
  const std::complex<Real> zb = std::conj(z);
  const Real w = Real(1) - std::norm(z);
  CompensatedComplexSum<Real> acc;
  Real max_term(0);
  for (int j = 0; j <= std::min(m, n); ++j) {
    Real coef = pochhammer(gamma + Real(j + 1), m + n - j) * binomial<Real>(m, j) * binomial<Real>(n, j) *
                factorial<Real>(j) * ipow(w, j);
    if (j % 2 != 0) coef = -coef;
    std::complex<Real> t = ipow(zb, m - j) * ipow(z, n - j) * coef;
    max_term = std::max(max_term, Real(abs(t)));
    acc.add(t);
  }
  std::complex<Real> v = acc.value();
  return {v, Engine::explicit_sum, detail::condition_ratio(max_term, Real(abs(v)))};
}

/// Jacobi route: (gamma+k+1)_K (-1)^k k! * angular * P^(K-k, gamma)_k(1 - 2|z|^2)
/// with k = min(m, n), K = max(m, n). For m <= n the prefactor is C^gamma_{m,n}; for
/// m > n the same form is reached through Z_{m,n} = conj(Z_{n,m}), since using
/// C^gamma_{m,n} there would be off by (gamma+1)_m / (gamma+1)_n.
/// The angular factor is z^(n-m) or zbar^(m-n), never computed through arg z.
template <class Real = double>
BasicDiskPolyValue<Real> zernike_jacobi(DiskIndex idx, const NoDeduce<Real>& gamma,
                                        const std::complex<NoDeduce<Real>>& z) {
  using std::abs;
  detail::check_finite(gamma, "gamma");
  const int m = idx.m, n = idx.n;
  const int k = std::min(m, n);
  const std::complex<Real> ang = n >= m ? ipow(z, n - m) : ipow(std::conj(z), m - n);
  const Real x = Real(1) - Real(2) * std::norm(z);
  Real scale = c_coeff<Real>(k, std::max(m, n), gamma) * factorial<Real>(k) * jacobi_p<Real>(k, Real(std::abs(m - n)), gamma, x);
  if (k % 2 != 0) scale = -scale;
  std::complex<Real> v = ang * scale;
  return {v, Engine::jacobi, detail::condition_ratio(detail::explicit_max_term(m, n, gamma, z), Real(abs(v)))};
}

/// Terminating 2F1 route: (gamma+1)_{m+n} zbar^m z^n 2F1(-m, -n; gamma+1 | 1 - 1/|z|^2).
/// At z = 0 the argument is singular and the explicit engine is used instead.
template <class Real = double>
BasicDiskPolyValue<Real> zernike_2f1(DiskIndex idx, const NoDeduce<Real>& gamma,
                                     const std::complex<NoDeduce<Real>>& z) {
  using std::abs;
  detail::check_finite(gamma, "gamma");
  if (z == std::complex<Real>(0)) {
    auto r = zernike_explicit<Real>(idx, gamma, z);
    return r;
  }
  const int m = idx.m, n = idx.n;
  const Real x = Real(1) - Real(1) / std::norm(z);
  const std::complex<Real> pre = ipow(std::conj(z), m) * ipow(z, n) * pochhammer(gamma + Real(1), m + n);
  CompensatedComplexSum<Real> acc;
  Real term(1), max_term(0);
  for (int k = 0; k <= std::min(m, n); ++k) {
    std::complex<Real> t = pre * term;
    max_term = std::max(max_term, Real(abs(t)));
    acc.add(t);
    const Real den = (gamma + Real(k + 1)) * Real(k + 1);
    if (den == Real(0)) throw DomainError("zernike_2f1: gamma + 1 is a nonpositive integer within the series");
    term *= Real(k - m) * Real(k - n) * x / den;
  }
  std::complex<Real> v = acc.value();
  return {v, Engine::hyp2f1, detail::condition_ratio(max_term, Real(abs(v)))};
}

/// Exact polynomial in Q[gamma][z, zbar, w].
TriPoly zernike_exact(DiskIndex idx);
/// Exact H_{p,q} in Q[z, zbar].
TriPoly hermite_exact(HermiteIndex idx);

/// H_{p,q}(z, zbar) = sum_k (-1)^k k! C(p,k) C(q,k) z^(p-k) zbar^(q-k).
template <class Real = double>
std::complex<Real> hermite_complex(HermiteIndex idx, const std::complex<NoDeduce<Real>>& z) {
  const std::complex<Real> zb = std::conj(z);
  CompensatedComplexSum<Real> acc;
  for (int k = 0; k <= std::min(idx.p, idx.q); ++k) {
    Real c = factorial<Real>(k) * binomial<Real>(idx.p, k) * binomial<Real>(idx.q, k);
    if (k % 2 != 0) c = -c;
    acc.add(ipow(z, idx.p - k) * ipow(zb, idx.q - k) * c);
  }
  return acc.value();
}

/// conj(Z^gamma_{m,n}) / (gamma+1)_{m+n}: the Dunkl normalization.
ComplexValue to_dunkl(DiskIndex idx, RealParam gamma, ComplexValue z);
/// Same normalization under Wuensche's name for it.
ComplexValue to_wunsche(DiskIndex idx, RealParam gamma, ComplexValue z);

/// Radial Zernike polynomial R^nu_k(rho) recovered from Z^0_{m,n} with m = (k-nu)/2, n = (k+nu)/2.
double real_zernike_radial(int k, int nu, double rho);

/// psi^nu_{m,n} = (1-|z|^2)^((gamma+1)/2) Z^gamma_{m,n} / C^gamma_{m,n} with gamma = 2(nu-m) - 1.
ComplexValue psi_eigenfunction(DiskIndex idx, RealParam nu, ComplexValue z);

}  // namespace diskpoly

#endif  // DISKPOLY_DISK_POLY_HPP
