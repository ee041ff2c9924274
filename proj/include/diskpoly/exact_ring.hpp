/**
 * @file exact_ring.hpp
 * @brief Exact algebra over Q[gamma][z, zbar, w] with w standing for 1 - z*zbar.
 *
 * The layer exists so that polynomial identities can be checked with gamma
 * kept symbolic. Three types build on each other:
 *
 *  - GammaPoly: univariate polynomial in gamma with rational coefficients.
 *  - TriPoly: sparse polynomial in the formal variables z, zbar, w whose
 *    coefficients are GammaPoly.
 *  - WeightedExpr: w^(a*gamma + t) * p with a in {-1, 0, 1}, an integer t
 *    and a TriPoly body p. This is closed under d/dz and d/dzbar, which is
 *    what the weighted differential operators need.
 *
 * Keeping w as a separate variable (rather than substituting 1 - z*zbar right
 * away) is what lets the weight bookkeeping survive differentiation. normalize()
 * performs the substitution when two expressions are compared.
 */
#ifndef DISKPOLY_EXACT_RING_HPP
#define DISKPOLY_EXACT_RING_HPP

#include <complex>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "diskpoly/scalar_kernel.hpp"

namespace diskpoly {

using BigRational = mpq_class;

/// Polynomial in gamma with exact rational coefficients, lowest degree first.
class GammaPoly {
 public:
  GammaPoly() = default;
  GammaPoly(const BigRational& c);  // NOLINT: constants promote implicitly
  GammaPoly(long c) : GammaPoly(BigRational(c)) {}  // NOLINT
  explicit GammaPoly(std::vector<BigRational> coeffs);

  /// The polynomial gamma + shift.
  static GammaPoly gamma(const BigRational& shift = 0);
  /// (base)_n as a polynomial in gamma.
  static GammaPoly pochhammer(const GammaPoly& base, int n);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigRational>& coeffs() const { return c_; }
  BigRational coeff(int k) const;

  GammaPoly& operator+=(const GammaPoly& o);
  GammaPoly& operator-=(const GammaPoly& o);
  GammaPoly& operator*=(const GammaPoly& o);
  GammaPoly operator-() const;
  friend GammaPoly operator+(GammaPoly a, const GammaPoly& b) { return a += b; }
  friend GammaPoly operator-(GammaPoly a, const GammaPoly& b) { return a -= b; }
  friend GammaPoly operator*(GammaPoly a, const GammaPoly& b) { return a *= b; }
  friend bool operator==(const GammaPoly& a, const GammaPoly& b) { return a.c_ == b.c_; }

  /// p(gamma + s).
  GammaPoly shifted(const BigRational& s) const;
  /// p(q(gamma)) for a polynomial substitution.
  GammaPoly composed(const GammaPoly& q) const;
  /// Exact division; throws UnsupportedExpression if the remainder is nonzero.
  GammaPoly divided_exactly(const GammaPoly& d) const;

  BigRational eval(const BigRational& g) const;
  double eval(double g) const;
  template <class Real>
  Real eval_as(const Real& g) const {
    Real acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * g + Real(c_[k].get_d());
    return acc;
  }

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigRational> c_;
};

/// Exponents of z, zbar and w.
struct Monomial {
  int z = 0;
  int zbar = 0;
  int w = 0;

  int total() const { return z + zbar + w; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order on (w, z, zbar): higher total degree first, ties broken
/// lexicographically by the w, z, zbar exponents (larger first).
struct GradedLexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    if (a.w != b.w) return a.w > b.w;
    if (a.z != b.z) return a.z > b.z;
    return a.zbar > b.zbar;
  }
};

/// Sparse polynomial in z, zbar, w with GammaPoly coefficients.
class TriPoly {
 public:
  using TermMap = std::map<Monomial, GammaPoly, GradedLexOrder>;

  TriPoly() = default;
  TriPoly(const GammaPoly& c);  // NOLINT: constants promote implicitly
  TriPoly(long c) : TriPoly(GammaPoly(c)) {}  // NOLINT

  static TriPoly monomial(int z_exp, int zbar_exp, int w_exp, const GammaPoly& c = GammaPoly(1));
  static TriPoly z() { return monomial(1, 0, 0); }
  static TriPoly zbar() { return monomial(0, 1, 0); }
  static TriPoly w() { return monomial(0, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  int max_w_degree() const;

  void add_term(const Monomial& m, const GammaPoly& c);

  TriPoly& operator+=(const TriPoly& o);
  TriPoly& operator-=(const TriPoly& o);
  TriPoly& operator*=(const TriPoly& o);
  TriPoly operator-() const;
  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }

  TriPoly pow(int e) const;

  /// Formal partial derivatives with dw/dz = -zbar, dw/dzbar = -z.
  TriPoly d_dz() const;
  TriPoly d_dzbar() const;

  /// Substitute gamma -> gamma + s in every coefficient.
  TriPoly gamma_shifted(const BigRational& s) const;
  /// Substitute gamma -> q(gamma) in every coefficient.
  TriPoly gamma_composed(const GammaPoly& q) const;
  /// Swap the roles of z and zbar (complex conjugation of the formal variables).
  TriPoly conjugated() const;
  /// Replace w by 1 - z*zbar; the result has no w.
  TriPoly substitute_w() const;

  /// Numeric evaluation; w is computed as 1 - |z|^2.
  template <class Real>
  std::complex<Real> eval_numeric(const Real& g, const std::complex<Real>& zv) const;

  std::string to_string() const;

 private:
  TermMap terms_;
};

TriPoly operator*(const TriPoly& a, const TriPoly& b);

/// w^(gamma_mult * gamma + offset) * body.
class WeightedExpr {
 public:
  WeightedExpr() = default;
  /// Weight exponent gamma + offset (the common case).
  WeightedExpr(int offset, TriPoly body) : WeightedExpr(1, offset, std::move(body)) {}
  WeightedExpr(int gamma_mult, int offset, TriPoly body);

  /// A polynomial with no weight factor at all.
  static WeightedExpr plain(TriPoly body, int offset = 0) {
    return WeightedExpr(0, offset, std::move(body));
  }

  int gamma_mult() const { return gamma_mult_; }
  int offset() const { return offset_; }
  const TriPoly& body() const { return body_; }
  bool is_zero() const { return body_.is_zero(); }

  /// Same element rewritten with a smaller offset (body multiplied by w^delta).
  WeightedExpr with_offset(int new_offset) const;

  friend WeightedExpr ring_add(const WeightedExpr& a, const WeightedExpr& b);
  friend WeightedExpr ring_mul(const WeightedExpr& a, const WeightedExpr& b);
  friend WeightedExpr ring_mul(const WeightedExpr& a, const TriPoly& b);

  WeightedExpr operator-() const { return {gamma_mult_, offset_, -body_}; }
  WeightedExpr scaled(const GammaPoly& c) const { return {gamma_mult_, offset_, body_ * TriPoly(c)}; }

  std::string to_string() const;

 private:
  int gamma_mult_ = 1;
  int offset_ = 0;
  TriPoly body_;
};

WeightedExpr ring_add(const WeightedExpr& a, const WeightedExpr& b);
WeightedExpr ring_sub(const WeightedExpr& a, const WeightedExpr& b);
WeightedExpr ring_mul(const WeightedExpr& a, const WeightedExpr& b);
WeightedExpr ring_mul(const WeightedExpr& a, const TriPoly& b);
inline WeightedExpr ring_mul(const TriPoly& a, const WeightedExpr& b) { return ring_mul(b, a); }

WeightedExpr d_dz(const WeightedExpr& e);
WeightedExpr d_dzbar(const WeightedExpr& e);
WeightedExpr d_dz(const WeightedExpr& e, int times);
WeightedExpr d_dzbar(const WeightedExpr& e, int times);

/// Canonical bivariate form in Q[gamma][z, zbar] of the body after w := 1 - z*zbar.
/// By default the weight factor is dropped (callers align offsets first). With
/// gamma_is_zero_offset the expression must carry no gamma in its weight; a
/// nonnegative integer offset is then folded into the result.
TriPoly normalize(const WeightedExpr& e, bool gamma_is_zero_offset = false);

/// Align two expressions to a common offset (the smaller one).
std::pair<WeightedExpr, WeightedExpr> align(const WeightedExpr& a, const WeightedExpr& b);

/// True iff a and b denote the same element of Q[gamma][z, zbar] * w^(...).
bool exact_equal(const WeightedExpr& a, const WeightedExpr& b);

/// Exact complex number with rational parts.
struct ExactComplex {
  BigRational re;
  BigRational im;

  friend bool operator==(const ExactComplex&, const ExactComplex&) = default;
  ExactComplex conj() const { return {re, -im}; }
  ExactComplex operator+(const ExactComplex& o) const { return {re + o.re, im + o.im}; }
  ExactComplex operator-(const ExactComplex& o) const { return {re - o.re, im - o.im}; }
  ExactComplex operator*(const ExactComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  ExactComplex scaled(const BigRational& s) const { return {re * s, im * s}; }
  BigRational norm() const { return re * re + im * im; }
};

ExactComplex pow(const ExactComplex& x, int e);

/// Exact value of w^(a*gamma + t) * body at a rational gamma and rational-complex z.
/// The weight exponent must be an integer at that gamma.
ExactComplex eval_exact(const WeightedExpr& e, const BigRational& gamma, const ExactComplex& z);
ExactComplex eval_exact(const TriPoly& p, const BigRational& gamma, const ExactComplex& z);

std::ostream& operator<<(std::ostream& os, const GammaPoly& p);
std::ostream& operator<<(std::ostream& os, const TriPoly& p);
std::ostream& operator<<(std::ostream& os, const WeightedExpr& e);

// ---------------------------------------------------------------------------

template <class Real>
std::complex<Real> TriPoly::eval_numeric(const Real& g, const std::complex<Real>& zv) const {
  const std::complex<Real> zb = std::conj(zv);
  const Real wv = Real(1) - std::norm(zv);
  CompensatedComplexSum<Real> acc;
  for (const auto& [mono, c] : terms_) {
    std::complex<Real> t = ipow(zv, mono.z) * ipow(zb, mono.zbar) * ipow(wv, mono.w);
    acc.add(t * c.eval_as(g));
  }
  return acc.value();
}

}  // namespace diskpoly

#endif  // DISKPOLY_EXACT_RING_HPP
