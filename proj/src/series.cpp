#include "diskpoly/series.hpp"

#include <cstdlib>
#include <cmath>
#include <optional>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

namespace diskpoly {

void TruncationPolicy::validate() const {
  if (!(tol > 0)) throw DomainError("TruncationPolicy: tol must be positive");
  if (consecutive_small < 1) throw DomainError("TruncationPolicy: consecutive_small must be at least 1");
  if (max_terms < 1) throw DomainError("TruncationPolicy: max_terms must be at least 1");
}

TruncationPolicy TruncationPolicy::from_env() {
  TruncationPolicy p;
  if (const char* s = std::getenv("DISKPOLY_MAX_TERMS"); s != nullptr && *s != '\0') {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (*end != '\0' || v < 1 || v > 100000000) {
      throw DomainError(std::string("DISKPOLY_MAX_TERMS must be a positive integer, got '") + s + "'");
    }
    p.max_terms = static_cast<int>(v);
  }
  return p;
}

std::string summation_name(SummationId id) {
  switch (id) {
    case SummationId::gz1: return "gz1";
    case SummationId::gz2: return "gz2";
    case SummationId::gz4: return "gz4";
    case SummationId::confluent: return "confluent";
    case SummationId::hermite_mixed: return "hermite_mixed";
    case SummationId::monomial: return "monomial";
    case SummationId::exponential: return "exponential";
  }
  return "unknown";
}

SummationId parse_summation(const std::string& s) {
  for (SummationId id : {SummationId::gz1, SummationId::gz2, SummationId::gz4, SummationId::confluent,
                         SummationId::hermite_mixed, SummationId::monomial, SummationId::exponential}) {
    if (summation_name(id) == s) return id;
  }
  throw DomainError("unknown summation formula '" + s + "'");
}

namespace {

using MpReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                             boost::multiprecision::et_off>;

// Rounding in a sum is bounded by eps * (largest term) times a modest factor.
constexpr double kSafety = 100.0;
constexpr int kMaxDigits = 4000;

// Thrown when the largest term seen so far makes the working precision inadequate.
struct Starved {
  double log10_max_term;
  double log10_budget;
};

// Magnitude in long double: enough range and accuracy for bookkeeping, and far
// cheaper than an MPFR square root in inner loops.
template <class Real>
long double mag(const std::complex<Real>& t) {
  return std::hypot(static_cast<long double>(t.real()), static_cast<long double>(t.imag()));
}

template <class Real>
struct Watch {
  long double eps;
  long double budget = 0;
  long double max_term = 0;

  void arm(const Real& closed_abs, double tol) {
    budget = static_cast<long double>(1e-2 * tol) * (1 + static_cast<long double>(closed_abs));
  }

  void see(const Real& a) { see_ld(static_cast<long double>(a)); }

  void see_ld(long double a) {
    if (a > max_term) {
      max_term = a;
      if (max_term * eps * kSafety > budget) {
        throw Starved{static_cast<double>(std::log10(max_term)), static_cast<double>(std::log10(budget))};
      }
    }
  }
};

template <class Real>
struct Raw {
  std::complex<Real> partial;
  std::complex<Real> closed;
  int terms = 0;
  bool tail_ok = false;
};

template <class Real>
SeriesReport finish(const Raw<Real>& r, double tol, int digits) {
  using std::abs;
  SeriesReport rep;
  rep.partial_sum = {static_cast<double>(r.partial.real()), static_cast<double>(r.partial.imag())};
  rep.closed_form = {static_cast<double>(r.closed.real()), static_cast<double>(r.closed.imag())};
  rep.residual = static_cast<double>(abs(r.partial - r.closed) / (Real(1) + abs(r.closed)));
  rep.terms_used = r.terms;
  rep.converged = r.tail_ok && rep.residual <= tol;
  rep.digits = digits;
  return rep;
}

// Runs `run` (a generic callable taking Watch<Real>&) in long double, then in
// MPFR. Precision grows when the largest term shows it is inadequate, and also
// when a run fails to converge while a rerun at twice the digits still moves the
// partial sum: recurrences can lose more than the term sizes reveal.
template <class F>
SeriesReport auto_precision(F&& run, const TruncationPolicy& p) {
  using std::numeric_limits;
  std::optional<Starved> st;
  std::optional<SeriesReport> prev;
  auto settled = [&](const SeriesReport& rep) {
    if (rep.converged) return true;
    if (!prev) return false;
    const double moved = std::abs(rep.partial_sum - prev->partial_sum) / (1.0 + std::abs(rep.closed_form));
    return moved <= 0.1 * p.tol;
  };
  try {
    Watch<long double> w{numeric_limits<long double>::epsilon()};
    SeriesReport rep = finish(run.template operator()<long double>(w), p.tol, numeric_limits<long double>::digits10);
    if (rep.converged) return rep;
    prev = rep;
  } catch (const Starved& s) {
    st = s;
  }
  struct Restore {
    unsigned d;
    ~Restore() { MpReal::default_precision(d); }
  } restore{MpReal::default_precision()};
  int digits = 0;
  for (;;) {
    int need = 0;
    if (st) need = static_cast<int>(std::ceil(st->log10_max_term - st->log10_budget + std::log10(kSafety))) + 15;
    digits = std::max({need, 2 * digits, 30});
    if (digits > kMaxDigits) {
      throw NonConvergence("series: cancellation needs more than " + std::to_string(kMaxDigits) + " digits");
    }
    MpReal::default_precision(static_cast<unsigned>(digits));
    st.reset();
    try {
      Watch<MpReal> w{std::pow(10.0L, static_cast<long double>(1 - digits))};
      SeriesReport rep = finish(run.template operator()<MpReal>(w), p.tol, digits);
      if (settled(rep)) return rep;
      prev = rep;
    } catch (const Starved& s) {
      st = s;
    }
  }
}

// Policy for closed forms that are themselves series: far tighter than the check.
TruncationPolicy closed_policy(const TruncationPolicy& p) {
  TruncationPolicy q;
  q.tol = p.tol * 1e-3;
  q.max_terms = 1000000;
  return q;
}

template <class Real>
std::complex<Real> to_c(ComplexValue z) {
  return {Real(z.real()), Real(z.imag())};
}

// S_{m,n} = Z^g_{m,n}(z) / (m! n!), rows filled on demand by the recurrence
//   S_{i+1,k} = (g+i+k+1) / ((g+i+1)(i+1)) [(g+i+k+1) zbar S_{i,k} - (g+i+k) S_{i,k-1}].
// Working with S keeps every entry of moderate size, so no (g+1)_{m+n} is formed.
template <class Real>
class ScaledTable {
 public:
  using C = std::complex<Real>;

  ScaledTable(const Real& g, const C& z) : g_(g), z_(z), zb_(std::conj(z)) {}

  const C& operator()(int m, int n) {
    if (static_cast<int>(rows_.size()) <= m) rows_.resize(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) extend(i, n);
    return rows_[m][n];
  }

 private:
  void extend(int i, int n) {
    auto& row = rows_[i];
    for (int k = static_cast<int>(row.size()); k <= n; ++k) {
      if (i == 0) {
        row.push_back(k == 0 ? C(1) : row[k - 1] * z_ * ((g_ + Real(k)) / Real(k)));
        continue;
      }
      const auto& prev = rows_[i - 1];
      const Real gi = g_ + Real(i - 1);
      C t = zb_ * prev[k] * (gi + Real(k + 1));
      if (k > 0) t -= prev[k - 1] * (gi + Real(k));
      row.push_back(t * ((gi + Real(k + 1)) / ((gi + Real(1)) * Real(i))));
    }
  }

  Real g_;
  C z_, zb_;
  std::vector<std::vector<C>> rows_;
};

// One row of S at a time, for sums whose outer index runs into the hundreds.
// Entry (i, k) needs only (i-1, k) and (i-1, k-1), so keeping the last column of
// every earlier row lets a row be lengthened without redoing the sweep. Real and
// imaginary parts are updated in place: with MPFR this avoids a heap allocation
// per temporary in the hottest loop.
template <class Real>
class RowSweep {
 public:
  using C = std::complex<Real>;

  RowSweep(const Real& g, const C& z, int len) : g_(g), zr_(z.real()), zi_(z.imag()) {
    re_.resize(1, Real(1));
    im_.resize(1, Real(0));
    extend(len);
  }

  int m() const { return m_; }
  int length() const { return static_cast<int>(re_.size()); }

  void advance() {
    const int len = length();
    edge_re_.push_back(re_[len - 1]);
    edge_im_.push_back(im_[len - 1]);
    prepare(m_);
    for (int k = len - 1; k >= 0; --k) {
      if (k > 0) {
        step(k, re_[k], im_[k], re_[k - 1], im_[k - 1]);
      } else {
        step0(re_[0], im_[0]);
      }
      std::swap(re_[k], tr_);
      std::swap(im_[k], ti_);
    }
    ++m_;
  }

  // Lengthen the current row to len entries.
  void extend(int len) {
    const int old = length();
    if (len <= old) return;
    const int add = len - old;
    // row 0: S_{0,k} = z^k (g+1)_k / k!
    std::vector<Real> cr(static_cast<std::size_t>(add) + 1), ci(cr.size());
    cr[0] = m_ > 0 ? edge_re_[0] : re_[old - 1];
    ci[0] = m_ > 0 ? edge_im_[0] : im_[old - 1];
    for (int j = 1; j <= add; ++j) {
      const int k = old - 1 + j;
      const C v = C(cr[j - 1], ci[j - 1]) * C(zr_, zi_) * ((g_ + Real(k)) / Real(k));
      cr[j] = v.real();
      ci[j] = v.imag();
    }
    // cr/ci hold row i at columns old-1 .. len-1; walk down to the current row.
    std::vector<Real> nr(cr.size()), ni(cr.size());
    for (int i = 1; i <= m_; ++i) {
      nr[0] = i < m_ ? edge_re_[i] : re_[old - 1];
      ni[0] = i < m_ ? edge_im_[i] : im_[old - 1];
      prepare(i - 1);
      for (int j = 1; j <= add; ++j) {
        step(old - 1 + j, cr[j], ci[j], cr[j - 1], ci[j - 1]);
        std::swap(nr[j], tr_);
        std::swap(ni[j], ti_);
      }
      edge_re_[i - 1] = cr[add];
      edge_im_[i - 1] = ci[add];
      std::swap(cr, nr);
      std::swap(ci, ni);
    }
    for (int j = 1; j <= add; ++j) {
      re_.push_back(cr[j]);
      im_.push_back(ci[j]);
    }
  }

  // sum_n x^n S_{m,n} over the stored row, stopping by the tail rule; empty when
  // the row is too short. `see` receives each term's magnitude.
  template <class See>
  std::optional<C> power_sum(const C& x, const TruncationPolicy& p, See&& see) const {
    TailMonitor<long double> mon(p);
    const Real xr = x.real(), xi = x.imag();
    Real pr(1), pi(0), tr, ti, u, sr(0), si(0);
    CompensatedSum<long double> lr, li;
    for (int n = 0; n < length(); ++n) {
      tr = pr;
      tr *= re_[n];
      u = pi;
      u *= im_[n];
      tr -= u;
      ti = pr;
      ti *= im_[n];
      u = pi;
      u *= re_[n];
      ti += u;
      const long double tm = std::hypot(static_cast<long double>(tr), static_cast<long double>(ti));
      see(tm);
      long double smag;
      if constexpr (std::is_floating_point_v<Real>) {
        lr.add(tr);
        li.add(ti);
        smag = std::hypot(lr.value(), li.value());
      } else {
        // MPFR runs carry spare digits, so plain accumulation suffices.
        sr += tr;
        si += ti;
        smag = std::hypot(static_cast<long double>(sr), static_cast<long double>(si));
      }
      if (mon.push(tm, smag)) {
        if constexpr (std::is_floating_point_v<Real>) {
          return C(lr.value(), li.value());
        } else {
          return C(sr, si);
        }
      }
      // (pr + i pi) *= x
      u = pr;
      u *= xi;
      pr *= xr;
      tr = pi;
      tr *= xi;
      pr -= tr;
      pi *= xr;
      pi += u;
    }
    return std::nullopt;
  }

 private:
  // Coefficients for going from row i to row i+1.
  void prepare(int i) {
    gi_ = g_;
    gi_ += i;
    inv_ = gi_;
    inv_ += 1;
    inv_ *= i + 1;
    inv_ = Real(1) / inv_;
  }

  // (tr_, ti_) = (gi+k+1)/((gi+1)(i+1)) [(gi+k+1) zbar a - (gi+k) b], zbar = zr - i zi.
  void step(int k, const Real& ar, const Real& ai, const Real& br, const Real& bi) {
    a_ = gi_;
    a_ += k + 1;
    tr_ = ar;
    tr_ *= zr_;
    x_ = ai;
    x_ *= zi_;
    tr_ += x_;
    ti_ = ai;
    ti_ *= zr_;
    x_ = ar;
    x_ *= zi_;
    ti_ -= x_;
    tr_ *= a_;
    ti_ *= a_;
    a_ -= 1;
    x_ = br;
    x_ *= a_;
    tr_ -= x_;
    x_ = bi;
    x_ *= a_;
    ti_ -= x_;
    a_ += 1;
    a_ *= inv_;
    tr_ *= a_;
    ti_ *= a_;
  }

  void step0(const Real& ar, const Real& ai) {
    const Real zero(0);
    step(0, ar, ai, zero, zero);
  }

  Real g_;
  Real zr_, zi_;
  std::vector<Real> re_, im_;
  std::vector<Real> edge_re_, edge_im_;  // last column of each earlier row
  Real gi_, inv_, a_, tr_, ti_, x_;
  int m_ = 0;
};

void check_disk(ComplexValue z, const char* what) {
  if (!(std::norm(z) < 1.0)) throw DomainError(std::string(what) + ": z must lie in the open unit disk");
}

void check_gamma(double g, const char* what) {
  if (!(g > -1.0)) throw DomainError(std::string(what) + ": gamma must exceed -1");
}

// Generic single series sum_n coef(n) * S_{m,n} with the shared bookkeeping.
template <class Real, class Coef>
Raw<Real> single_series(ScaledTable<Real>& S, int m, Coef&& coef, const std::complex<Real>& closed, Watch<Real>& w,
                        const TruncationPolicy& p) {
  using std::abs;
  w.arm(abs(closed), p.tol);
  TailMonitor<Real> mon(p);
  CompensatedComplexSum<Real> acc;
  for (int n = 0; n < p.max_terms; ++n) {
    const std::complex<Real> t = coef(n) * S(m, n);
    w.see(abs(t));
    acc.add(t);
    if (mon.push(abs(t), abs(acc.value()))) return {acc.value(), closed, n + 1, true};
  }
  return {acc.value(), closed, p.max_terms, false};
}

}  // namespace

// ---------------------------------------------------------------- generating functions

SeriesReport genfct_single(int m, RealParam gamma, ComplexValue v, ComplexValue z, const TruncationPolicy& p) {
  p.validate();
  if (m < 0) throw DomainError("genfct_single: m must be nonnegative");
  check_gamma(gamma, "genfct_single");
  check_disk(z, "genfct_single");
  if (!(std::abs(v) < 1.0)) throw DomainError("genfct_single: |v| must be below 1");
  auto run = [&]<class Real>(Watch<Real>& w) -> Raw<Real> {
    using C = std::complex<Real>;
    const Real g(gamma.value);
    const C zz = to_c<Real>(z), vv = to_c<Real>(v), zb = std::conj(zz);
    const Real W = Real(1) - std::norm(zz);
    const C q = C(1) - vv * zz;
    const C pre = std::pow(q, -(g + Real(m + 1))) * factorial<Real>(m);
    C closed;
    if (zz == C(0)) {
      // zbar^m P^(g,0)_m(1 - 2vW/(zbar q)) expanded in powers so the 1/zbar cancels
      const C y = -vv * W / q;
      C s(0);
      for (int k = 0; k <= m; ++k) {
        const Real c = pochhammer(g + Real(m + 1), k) * pochhammer(g + Real(k + 1), m - k) /
                       (factorial<Real>(k) * factorial<Real>(m - k));
        s += ipow(zb, m - k) * ipow(y, k) * c;
      }
      closed = pre * s;
    } else {
      const C x = C(1) - Real(2) * vv * W / (zb * q);
      closed = pre * ipow(zb, m) * jacobi_p<Real, C>(m, g, Real(0), x);
    }
    ScaledTable<Real> S(g, zz);
    C vn(1);
    const Real mf = factorial<Real>(m);
    return single_series<Real>(
        S, m,
        [&](int n) {
          if (n > 0) vn *= vv;
          return vn * mf;
        },
        closed, w, p);
  };
  return auto_precision(run, p);
}

SeriesReport genfct_double(RealParam gamma, ComplexValue u, ComplexValue v, ComplexValue z, const TruncationPolicy& p) {
  p.validate();
  check_gamma(gamma, "genfct_double");
  check_disk(z, "genfct_double");
  if (!(std::abs(u) + std::abs(v) < 1.0)) throw DomainError("genfct_double: need |u| + |v| < 1");
  {
    const ComplexValue d = 1.0 - v * z - u * std::conj(z);
    if (!(std::abs(-4.0 * u * v * (1.0 - std::norm(z)) / (d * d)) < 1.0)) {
      throw DomainError("genfct_double: the 2F1 argument has modulus >= 1");
    }
  }
  auto run = [&]<class Real>(Watch<Real>& w) -> Raw<Real> {
    using C = std::complex<Real>;
    using std::abs;
    const Real g(gamma.value);
    const C zz = to_c<Real>(z), uu = to_c<Real>(u), vv = to_c<Real>(v);
    const Real W = Real(1) - std::norm(zz);
    const C d = C(1) - vv * zz - uu * std::conj(zz);
    const C X = Real(-4) * uu * vv * W / (d * d);
    auto h = hyp2f1_series<Real>((g + Real(1)) / Real(2), (g + Real(2)) / Real(2), g + Real(1), X, closed_policy(p));
    if (!h.converged) throw NonConvergence("genfct_double: closed-form 2F1 did not converge");
    const C closed = std::pow(d, -(g + Real(1))) * h.value;
    w.arm(abs(closed), p.tol);

    ScaledTable<Real> S(g, zz);
    std::vector<C> up{C(1)}, vp{C(1)};
    TailMonitor<Real> mon(p);
    CompensatedComplexSum<Real> acc;
    for (int s = 0; s < p.max_terms; ++s) {
      if (s > 0) {
        up.push_back(up.back() * uu);
        vp.push_back(vp.back() * vv);
      }
      CompensatedComplexSum<Real> shell;
      for (int m = 0; m <= s; ++m) {
        const C t = up[m] * vp[s - m] * S(m, s - m);
        w.see(abs(t));
        shell.add(t);
      }
      const C sh = shell.value();
      acc.add(sh);
      if (mon.push(abs(sh), abs(acc.value()))) return {acc.value(), closed, s + 1, true};
    }
    return {acc.value(), closed, p.max_terms, false};
  };
  return auto_precision(run, p);
}

// ---------------------------------------------------------------- summation formulae

namespace {

template <class Real>
Raw<Real> iterated_gz(bool gz2, const Real& g, const std::complex<Real>& zz, Watch<Real>& w, const TruncationPolicy& p) {
  using C = std::complex<Real>;
  using std::abs;
  using std::pow;
  const C zb = std::conj(zz);
  const Real W = Real(1) - std::norm(zz);
  const C closed = gz2 ? C(pow(W, -g)) : C(pow(W, -g - Real(1))) / (C(1) + zb);
  w.arm(abs(closed), p.tol);

  RowSweep<Real> sweep(g, zz, std::min(64, p.max_terms));
  const C step = gz2 ? zz : C(W);
  C outer(1);
  TailMonitor<Real> mon(p);
  CompensatedComplexSum<Real> acc;
  for (int m = 0; m < p.max_terms; ++m) {
    if (m > 0) {
      sweep.advance();
      outer *= step;
    }
    C inner_sum;
    const long double outer_mag = mag(outer);
    // a vanishing outer factor (z = 0 for gz2) makes the term exactly zero
    while (outer != C(0)) {
      const auto r = sweep.power_sum(zb, p, [&](long double tm) { w.see_ld(outer_mag * tm); });
      if (r) {
        inner_sum = *r;
        break;
      }
      if (sweep.length() >= p.max_terms) return {acc.value(), closed, m, false};
      sweep.extend(std::min(sweep.length() + std::max(64, sweep.length() / 8), p.max_terms));
    }
    const C t = outer * inner_sum;
    acc.add(t);
    if (mon.push(abs(t), abs(acc.value()))) return {acc.value(), closed, m + 1, true};
  }
  return {acc.value(), closed, p.max_terms, false};
}

}  // namespace

SeriesReport summation_check(SummationId which, const SummationParams& prm, ComplexValue z, const TruncationPolicy& p) {
  p.validate();
  const std::string name = "summation_check(" + summation_name(which) + ")";
  check_gamma(prm.gamma, name.c_str());
  check_disk(z, name.c_str());
  if (prm.m < 0 || prm.n < 0 || prm.r < 0) throw DomainError(name + ": indices must be nonnegative");
  const int m = prm.m, n = prm.n, r = prm.r;

  auto run = [&]<class Real>(Watch<Real>& w) -> Raw<Real> {
    using C = std::complex<Real>;
    using std::abs;
    using std::exp;
    using std::pow;
    const Real g(prm.gamma.value);
    const C zz = to_c<Real>(z), zb = std::conj(zz);
    const Real W = Real(1) - std::norm(zz);
    const Real E = exp(-std::norm(zz));

    switch (which) {
      case SummationId::gz1: {
        C closed = ipow(zb, m) * pow(W, -(g + Real(m + 1))) * factorial<Real>(m);
        if (m % 2 != 0) closed = -closed;
        ScaledTable<Real> S(g, zz);
        C zbn(1);
        const Real mf = factorial<Real>(m);
        return single_series<Real>(
            S, m,
            [&](int k) {
              if (k > 0) zbn *= zb;
              return zbn * mf;
            },
            closed, w, p);
      }
      case SummationId::gz2:
      case SummationId::gz4:
        return iterated_gz<Real>(which == SummationId::gz2, g, zz, w, p);
      case SummationId::confluent: {
        const Real f = hyp1f1<Real>(Real(-m), g + Real(1), std::norm(zz) - Real(1), closed_policy(p));
        const C closed = ipow(zb, m) * (pochhammer(g + Real(1), m) * E * f);
        ScaledTable<Real> S(g, zz);
        C c(1);
        const Real mf = factorial<Real>(m);
        return single_series<Real>(
            S, m,
            [&](int k) {
              if (k > 0) c *= -zb / (g + Real(m + k));
              return c * mf;
            },
            closed, w, p);
      }
      case SummationId::hermite_mixed: {
        CompensatedComplexSum<Real> cs;
        for (int j = 0; j <= m; ++j) {
          // (-1)^j (-m)_j = m! / (m-j)!
          const Real c = factorial<Real>(m) / factorial<Real>(m - j) / factorial<Real>(j) * ipow(W, j);
          cs.add(zernike_explicit<Real>(DiskIndex(m - j, n), g + Real(j), zz).value *
                 hermite_complex<Real>(HermiteIndex(r, j), zz) * c);
        }
        const C closed = cs.value() * E;
        ScaledTable<Real> S(g, zz);
        C c = C(factorial<Real>(n + r) / pochhammer(g + Real(m + n + 1), r));
        const Real mf = factorial<Real>(m);
        // sum_k m! (n+r+k)!/k! (-zbar)^k S_{m,n+r+k} / (g+m+n+1)_{r+k}; the table index is n+r+k
        w.arm(abs(closed), p.tol);
        TailMonitor<Real> mon(p);
        CompensatedComplexSum<Real> acc;
        for (int k = 0; k < p.max_terms; ++k) {
          if (k > 0) c *= -zb * (Real(n + r + k) / (Real(k) * (g + Real(m + n + r + k))));
          const C t = c * mf * S(m, n + r + k);
          w.see(abs(t));
          acc.add(t);
          if (mon.push(abs(t), abs(acc.value()))) return {acc.value(), closed, k + 1, true};
        }
        return {acc.value(), closed, p.max_terms, false};
      }
      case SummationId::monomial: {
        const C closed = ipow(zb, m);
        w.arm(abs(closed), p.tol);
        std::vector<ScaledTable<Real>> T;
        std::vector<Real> wj;
        for (int j = 0; j <= m; ++j) {
          T.emplace_back(g + Real(j), zz);
          wj.push_back(ipow(W, j) / factorial<Real>(j));
        }
        const Real pre = factorial<Real>(m) * E;
        Real d = Real(1) / pochhammer(g + Real(1), m);
        C zbn(1);
        TailMonitor<Real> mon(p);
        CompensatedComplexSum<Real> acc;
        for (int k = 0; k < p.max_terms; ++k) {
          if (k > 0) {
            d /= g + Real(m + k);
            zbn *= zb;
          }
          CompensatedComplexSum<Real> inner;
          C zbj = zbn;
          for (int j = 0; j <= m; ++j) {
            const C t = zbj * T[j](m - j, k) * (pre * d * wj[j]);
            w.see(abs(t));
            inner.add(t);
            zbj *= zb;
          }
          const C t = inner.value();
          acc.add(t);
          if (mon.push(abs(t), abs(acc.value()))) return {acc.value(), closed, k + 1, true};
        }
        return {acc.value(), closed, p.max_terms, false};
      }
      case SummationId::exponential: {
        const C closed = std::exp(zb * (C(1) + zz));
        w.arm(abs(closed), p.tol);
        std::vector<ScaledTable<Real>> T;
        std::vector<Real> wj;
        std::vector<C> zbp{C(1)};
        Real c(1);
        TailMonitor<Real> mon(p);
        CompensatedComplexSum<Real> acc;
        for (int t = 0; t < p.max_terms; ++t) {
          if (t > 0) {
            c /= g + Real(t);
            zbp.push_back(zbp.back() * zb);
          }
          T.emplace_back(g + Real(t), zz);
          wj.push_back(ipow(W, t) / factorial<Real>(t));
          CompensatedComplexSum<Real> shell;
          for (int j = 0; j <= t; ++j) {
            for (int mm = 0; mm <= t - j; ++mm) {
              const int nn = t - j - mm;
              const C term = zbp[nn + j] * T[j](mm, nn) * (c * wj[j]);
              w.see(abs(term));
              shell.add(term);
            }
          }
          const C sh = shell.value();
          acc.add(sh);
          if (mon.push(abs(sh), abs(acc.value()))) return {acc.value(), closed, t + 1, true};
        }
        return {acc.value(), closed, p.max_terms, false};
      }
    }
    throw DomainError(name + ": unknown formula");
  };
  return auto_precision(run, p);
}

// ---------------------------------------------------------------- hypergeometric self-checks

SeriesReport quadratic_transformation_check(double a, double b, double xi, const TruncationPolicy& p) {
  p.validate();
  using LD = long double;
  using C = std::complex<LD>;
  if (!(std::abs(xi) < 1.0) || xi == 0.5) throw DomainError("quadratic_transformation_check: need |xi| < 1, xi != 1/2");
  const LD x = LD(4) * xi * (xi - 1) / ((LD(2) * xi - 1) * (LD(2) * xi - 1));
  if (!(std::abs(x) < 1)) {
    throw DomainError("quadratic_transformation_check: 4xi(xi-1)/(2xi-1)^2 lies outside the unit disk");
  }
  const LD al(a), be(b);
  const auto lhs = hyp2f1_series<LD>(al, al + LD(0.5), al + be + LD(0.5), C(x), p);
  const auto rhs = hyp2f1_series<LD>(LD(2) * al, LD(2) * be, al + be + LD(0.5), C(xi), closed_policy(p));
  if (!rhs.converged) throw NonConvergence("quadratic_transformation_check: closed side did not converge");
  Raw<LD> raw{lhs.value * std::pow(LD(1) - LD(2) * xi, LD(-2) * al), rhs.value, lhs.terms, lhs.converged};
  return finish(raw, p.tol, std::numeric_limits<LD>::digits10);
}

SeriesReport hyp2f1_reduction_check(double alpha, double beta, ComplexValue x, const TruncationPolicy& p) {
  p.validate();
  using LD = long double;
  using C = std::complex<LD>;
  if (detail::is_nonpos_int(alpha)) throw DomainError("hyp2f1_reduction_check: alpha must not be a nonpositive integer");
  const C xx = to_c<LD>(x);
  const auto s = hyp2f1_series<LD>(LD(alpha), LD(beta), LD(alpha), xx, p);
  Raw<LD> raw{s.value, std::pow(C(1) - xx, -LD(beta)), s.terms, s.converged};
  return finish(raw, p.tol, std::numeric_limits<LD>::digits10);
}

}  // namespace diskpoly
