/**
 * @file scalar_kernel.hpp
 * @brief Scalar primitives shared by the numeric engines.
 *
 * Everything here is templated on the real scalar so the same code runs in
 * double, long double, or a Boost.Multiprecision float. Unqualified calls to
 * abs/exp/lgamma are deliberate: they resolve through ADL for multiprecision
 * types and through the `using std::...` declarations for builtin types.
 */
#ifndef DISKPOLY_SCALAR_KERNEL_HPP
#define DISKPOLY_SCALAR_KERNEL_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace diskpoly {

/// Raised when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an exact-algebra expression falls outside the supported class.
class UnsupportedExpression : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a series exhausts its term budget before meeting its tolerance.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ComplexValue = std::complex<double>;

/// Real parameter (gamma or nu). Finite by construction.
struct RealParam {
  double value = 0.0;

  RealParam() = default;
  RealParam(double v) : value(v) {  // NOLINT: implicit from double is intended
    if (!std::isfinite(v)) throw DomainError("RealParam must be finite");
  }
  operator double() const { return value; }  // NOLINT
};

namespace detail {

template <class Real>
bool is_nonpositive_integer(const Real& a) {
  using std::floor;
  return a <= Real(0) && floor(a) == a;
}

template <class Real>
long long to_ll(const Real& a) {
  return static_cast<long long>(a);
}

// Threshold at which the direct Pochhammer product hands over to log-gamma.
inline constexpr double kPochhammerSwitch = 1e300;

}  // namespace detail

/// Logarithm of |(a)_n| and the sign of (a)_n. Sign is 0 when (a)_n vanishes.
template <class Real>
std::pair<Real, int> log_pochhammer(const Real& a, int n) {
  using std::abs;
  using std::lgamma;
  using std::log;
  if (n < 0) throw DomainError("log_pochhammer: n must be nonnegative");
  if (n == 0) return {Real(0), 1};
  if (detail::is_nonpositive_integer(a) && detail::to_ll(-a) < n) {
    return {-std::numeric_limits<double>::infinity(), 0};
  }
  int sign = 1;
  if (a < Real(0)) {
    // Count the negative factors a, a+1, ..., a+n-1.
    Real first_nonneg = -a;
    using std::ceil;
    long long negatives = detail::to_ll(ceil(first_nonneg));
    if (negatives > n) negatives = n;
    if (negatives % 2 != 0) sign = -1;
  }
  if (a > Real(0)) {
    return {Real(lgamma(a + Real(n)) - lgamma(a)), sign};
  }
  // Direct log-sum handles the mixed-sign range without reflection formulas.
  Real acc(0);
  for (int i = 0; i < n; ++i) acc += log(abs(a + Real(i)));
  return {acc, sign};
}

/// Rising factorial (a)_n = a(a+1)...(a+n-1).
///
/// The running product is used until its magnitude passes 1e300, after which
/// the value is rebuilt from log-gamma with explicit sign tracking. Bases that
/// are nonpositive integers with -a < n give an exact zero.
template <class Real>
Real pochhammer(const Real& a, int n) {
  using std::abs;
  using std::exp;
  if (n < 0) throw DomainError("pochhammer: n must be nonnegative");
  if (detail::is_nonpositive_integer(a) && detail::to_ll(-a) < n) return Real(0);
  Real prod(1);
  for (int i = 0; i < n; ++i) {
    prod *= a + Real(i);
    if (abs(prod) > Real(detail::kPochhammerSwitch)) {
      auto [lg, sign] = log_pochhammer(a, n);
      return Real(sign) * exp(lg);
    }
  }
  return prod;
}

template <class Real = double>
Real factorial(int n) {
  return pochhammer(Real(1), n);
}

template <class Real = double>
Real binomial(int n, int k) {
  if (k < 0 || k > n) return Real(0);
  if (k > n - k) k = n - k;
  Real r(1);
  for (int i = 1; i <= k; ++i) r = r * Real(n - k + i) / Real(i);
  return r;
}

/// Exact factorial as a GMP integer.
inline mpz_class factorial_exact(int n) {
  if (n < 0) throw DomainError("factorial_exact: negative argument");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// total! / prod(parts!) as an exact rational.
inline mpq_class multinomial(int total, std::span<const int> parts) {
  long long s = 0;
  for (int p : parts) {
    if (p < 0) throw DomainError("multinomial: negative part");
    s += p;
  }
  if (total < 0 || s != total) {
    throw DomainError("multinomial: parts sum " + std::to_string(s) + " != total " +
                      std::to_string(total));
  }
  mpz_class den = 1;
  for (int p : parts) den *= factorial_exact(p);
  mpq_class r(factorial_exact(total), den);
  r.canonicalize();
  return r;
}

inline mpq_class multinomial(int total, std::initializer_list<int> parts) {
  std::vector<int> v(parts);
  return multinomial(total, std::span<const int>(v));
}

namespace detail {

// Knuth's error-free transformation: a + b = s + e exactly.
template <class Real>
void two_sum(const Real& a, const Real& b, Real& s, Real& e) {
  s = a + b;
  Real bv = s - a;
  e = (a - (s - bv)) + (b - bv);
}

}  // namespace detail

/// Compensated summation accumulator (cascaded TwoSum, i.e. Sum2).
///
/// The result is as accurate as if the sum were formed in twice the working
/// precision and then rounded once.
template <class Real>
class CompensatedSum {
 public:
  void add(const Real& x) {
    Real s, e;
    detail::two_sum(sum_, x, s, e);
    sum_ = s;
    comp_ += e;
  }
  Real value() const { return sum_ + comp_; }

 private:
  Real sum_{0};
  Real comp_{0};
};

/// Complex version: real and imaginary parts accumulate independently.
template <class Real>
class CompensatedComplexSum {
 public:
  void add(const std::complex<Real>& x) {
    re_.add(x.real());
    im_.add(x.imag());
  }
  std::complex<Real> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<Real> re_;
  CompensatedSum<Real> im_;
};

template <class Real>
std::complex<Real> stable_sum(std::span<const std::complex<Real>> terms) {
  CompensatedComplexSum<Real> acc;
  for (const auto& t : terms) acc.add(t);
  return acc.value();
}

inline ComplexValue stable_sum(const std::vector<ComplexValue>& terms) {
  return stable_sum(std::span<const ComplexValue>(terms));
}

/// Integer power by repeated squaring; works for real and complex scalars.
template <class T>
T ipow(T base, int e) {
  if (e < 0) return T(1) / ipow(base, -e);
  T r(1);
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

}  // namespace diskpoly

#endif  // DISKPOLY_SCALAR_KERNEL_HPP
