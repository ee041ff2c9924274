/**
 * @file series.hpp
 * @brief Hypergeometric series and truncated-series checks of the generating
 *        functions and summation formulae.
 *
 * Every check sums the series on its own and compares against the closed form.
 * Checks run first in long double; when the largest term shows that cancellation
 * would swamp the tolerance, they are rerun in MPFR precision sized from that term
 * (see SeriesReport::digits).
 */
#ifndef DISKPOLY_SERIES_HPP
#define DISKPOLY_SERIES_HPP

#include <algorithm>
#include <deque>
#include <string>

#include "diskpoly/disk_poly.hpp"

namespace diskpoly {

struct TruncationPolicy {
  double tol = 1e-12;
  int consecutive_small = 3;
  int max_terms = 10000;

  /// Throws DomainError unless tol > 0, consecutive_small >= 1, max_terms >= 1.
  void validate() const;
  /// Defaults, with max_terms taken from DISKPOLY_MAX_TERMS when that is set.
  static TruncationPolicy from_env();
};

struct SeriesReport {
  ComplexValue partial_sum;
  ComplexValue closed_form;
  double residual = 0;  // |partial - closed| / (1 + |closed|)
  int terms_used = 0;   // terms of the outermost series (shells for double sums)
  bool converged = false;
  int digits = 0;  // decimal working precision of the run that produced the report
};

/// Stopping rule shared by all series: a term is small when |t| <= tol (1 + |sum|);
/// the series stops after consecutive_small small terms, provided the geometric
/// tail bound |t| rho / (1 - rho) (rho = largest recent term ratio) is also below
/// a tenth of that threshold, or the terms are a millionth of it. Leading zero
/// terms and tiny terms that are still growing never stop the series.
template <class Real>
class TailMonitor {
 public:
  explicit TailMonitor(const TruncationPolicy& p) : tol_(p.tol), need_(p.consecutive_small) {}

  /// Feed |t_k| and |partial sum including t_k|; true when the series may stop.
  bool push(const Real& term, const Real& sum) {
    using std::pow;
    const Real thr = Real(tol_) * (Real(1) + sum);
    if (term <= thr) {
      ++small_;
    } else {
      small_ = 0;
    }
    tiny_ = term <= thr * Real(1e-6) ? tiny_ + 1 : 0;
    ++gap_;
    if (term != Real(0)) {
      if (last_ > Real(0)) {
        Real r = term / last_;
        if (gap_ > 1) r = pow(r, Real(1) / Real(gap_));
        ratios_.push_back(r);
        if (static_cast<int>(ratios_.size()) > need_) ratios_.pop_front();
      }
      last_ = term;
      gap_ = 0;
    }
    if (small_ < need_) return false;
    // Nothing nonzero yet: leading zeros say nothing about the tail.
    if (ratios_.empty()) return last_ > Real(0) && tiny_ >= need_;
    const Real rho = *std::max_element(ratios_.begin(), ratios_.end());
    // Tiny but growing terms (a series that starts small) must not stop either.
    if (!(rho < Real(1))) return false;
    return tiny_ >= need_ || term * rho / (Real(1) - rho) <= Real(0.1) * thr;
  }

 private:
  double tol_;
  int need_;
  int small_ = 0;
  int tiny_ = 0;
  int gap_ = 0;
  Real last_{0};
  std::deque<Real> ratios_;
};

template <class T>
struct SeriesSum {
  T value;
  int terms = 0;
  bool converged = false;
};

namespace detail {

template <class Real>
bool is_nonpos_int(const Real& a) {
  using std::floor;
  return a <= Real(0) && floor(a) == a;
}

}  // namespace detail

/// 2F1(a, b; c | x) by the term ratio (a+k)(b+k) x / ((c+k)(k+1)), with the
/// summation outcome. Terminating series may have |x| >= 1.
template <class Real>
SeriesSum<std::complex<Real>> hyp2f1_series(const Real& a, const Real& b, const Real& c,
                                            const std::complex<Real>& x, const TruncationPolicy& p) {
  using std::abs;
  p.validate();
  const bool terminating = detail::is_nonpos_int(a) || detail::is_nonpos_int(b);
  if (!terminating && !(abs(x) < Real(1))) throw DomainError("hyp2f1: |x| must be below 1 for a nonterminating series");
  TailMonitor<Real> mon(p);
  CompensatedComplexSum<Real> acc;
  std::complex<Real> t(1);
  for (int k = 0; k < p.max_terms; ++k) {
    acc.add(t);
    const std::complex<Real> s = acc.value();
    const Real num = (a + Real(k)) * (b + Real(k));
    if (num == Real(0)) return {s, k + 1, true};
    if (mon.push(abs(t), abs(s))) return {s, k + 1, true};
    if (c + Real(k) == Real(0)) throw DomainError("hyp2f1: c is a nonpositive integer reached before termination");
    t *= x * (num / ((c + Real(k)) * Real(k + 1)));
  }
  return {acc.value(), p.max_terms, false};
}

template <class Real>
std::complex<Real> hyp2f1(const NoDeduce<Real>& a, const NoDeduce<Real>& b, const NoDeduce<Real>& c,
                          const std::complex<NoDeduce<Real>>& x, const TruncationPolicy& p = {}) {
  auto r = hyp2f1_series<Real>(a, b, c, x, p);
  if (!r.converged) throw NonConvergence("hyp2f1: no convergence within " + std::to_string(p.max_terms) + " terms");
  return r.value;
}

inline ComplexValue hyp2f1(double a, double b, double c, ComplexValue x, const TruncationPolicy& p = {}) {
  return hyp2f1<double>(a, b, c, x, p);
}

/// 1F1(a; c | x) by the term ratio (a+k) x / ((c+k)(k+1)).
template <class Real>
SeriesSum<Real> hyp1f1_series(const Real& a, const Real& c, const Real& x, const TruncationPolicy& p) {
  using std::abs;
  p.validate();
  TailMonitor<Real> mon(p);
  CompensatedSum<Real> acc;
  Real t(1);
  for (int k = 0; k < p.max_terms; ++k) {
    acc.add(t);
    const Real s = acc.value();
    const Real num = a + Real(k);
    if (num == Real(0)) return {s, k + 1, true};
    if (mon.push(abs(t), abs(s))) return {s, k + 1, true};
    if (c + Real(k) == Real(0)) throw DomainError("hyp1f1: c is a nonpositive integer reached before termination");
    t *= x * num / ((c + Real(k)) * Real(k + 1));
  }
  return {acc.value(), p.max_terms, false};
}

template <class Real>
Real hyp1f1(const NoDeduce<Real>& a, const NoDeduce<Real>& c, const NoDeduce<Real>& x, const TruncationPolicy& p = {}) {
  auto r = hyp1f1_series<Real>(a, c, x, p);
  if (!r.converged) throw NonConvergence("hyp1f1: no convergence within " + std::to_string(p.max_terms) + " terms");
  return r.value;
}

inline double hyp1f1(double a, double c, double x, const TruncationPolicy& p = {}) { return hyp1f1<double>(a, c, x, p); }

/// sum_n v^n / n! Z^gamma_{m,n}(z) against m! zbar^m (1-vz)^(-gamma-m-1) P^(gamma,0)_m(1 - 2v(1-|z|^2) / (zbar(1-vz))).
/// At z = 0 the closed form is taken in expanded form, where the 1/zbar cancels.
SeriesReport genfct_single(int m, RealParam gamma, ComplexValue v, ComplexValue z,
                           const TruncationPolicy& p = TruncationPolicy::from_env());

/// sum_{m,n} u^m v^n / (m! n!) Z^gamma_{m,n}(z), summed over diagonal shells m + n = s,
/// against (1-vz-u zbar)^(-gamma-1) 2F1((gamma+1)/2, (gamma+2)/2; gamma+1 | -4uv(1-|z|^2) / (1-vz-u zbar)^2).
SeriesReport genfct_double(RealParam gamma, ComplexValue u, ComplexValue v, ComplexValue z,
                           const TruncationPolicy& p = TruncationPolicy::from_env());

enum class SummationId { gz1, gz2, gz4, confluent, hermite_mixed, monomial, exponential };
std::string summation_name(SummationId id);
SummationId parse_summation(const std::string& s);

struct SummationParams {
  int m = 0;
  int n = 0;
  int r = 0;
  RealParam gamma = 0.0;
};

/// One summation formula at z. Indices a formula does not use are ignored.
///   gz1:           sum_n zbar^n/n! Z_{m,n}                     = (-1)^m m! zbar^m w^(-gamma-m-1)
///   gz2:           sum_{m,n} z^m zbar^n/(m! n!) Z_{m,n}        = w^(-gamma)
///   gz4:           sum_{m,n} w^m zbar^n/(m! n!) Z_{m,n}        = w^(-gamma-1) / (1 + zbar)
///   confluent:     sum_k (-zbar)^k/k! Z_{m,k} / (gamma+m+1)_k  = (gamma+1)_m zbar^m e^(-|z|^2) 1F1(-m; gamma+1 | |z|^2 - 1)
///   hermite_mixed: sum_k (-zbar)^k/k! Z_{m,n+r+k} / (gamma+m+n+1)_{r+k}
///                  = e^(-|z|^2) sum_j (-1)^j (-m)_j w^j / j! Z^(gamma+j)_{m-j,n} H_{r,j}
///   monomial:      m! e^(-|z|^2) sum_n sum_j zbar^(n+j) w^j / (j! (gamma+1)_{m+n}) Z^(gamma+j)_{m-j,n} / ((m-j)! n!) = zbar^m
///   exponential:   sum_{m,n,j} zbar^(n+j) w^j / (j! (gamma+1)_{m+n+j}) Z^(gamma+j)_{m,n} / (m! n!) = e^(zbar (1 + z))
/// gz2 and gz4 are iterated sums (inner over n); exponential is summed over shells m + n + j.
SeriesReport summation_check(SummationId which, const SummationParams& params, ComplexValue z,
                             const TruncationPolicy& p = TruncationPolicy::from_env());

/// (1-2xi)^(-2a) 2F1(a, a+1/2; a+b+1/2 | 4xi(xi-1)/(2xi-1)^2) (partial) against
/// 2F1(2a, 2b; a+b+1/2 | xi) (closed). Both arguments must lie inside the unit disk.
SeriesReport quadratic_transformation_check(double a, double b, double xi,
                                            const TruncationPolicy& p = TruncationPolicy::from_env());

/// 2F1(alpha, beta; alpha | x) (partial) against (1 - x)^(-beta) (closed).
SeriesReport hyp2f1_reduction_check(double alpha, double beta, ComplexValue x,
                                    const TruncationPolicy& p = TruncationPolicy::from_env());

}  // namespace diskpoly

#endif  // DISKPOLY_SERIES_HPP
