#include "diskpoly/identities.hpp"

#include <cmath>

namespace diskpoly {

namespace {

BigRational fac(int n) { return BigRational(factorial_exact(n)); }

BigRational binom(int n, int k) {
  BigRational r(factorial_exact(n), factorial_exact(k) * factorial_exact(n - k));
  r.canonicalize();
  return r;
}

BigRational ratio(const BigRational& a, const BigRational& b) {
  BigRational r = a / b;
  r.canonicalize();
  return r;
}

TriPoly C(const BigRational& c) { return TriPoly(GammaPoly(c)); }

// (gamma + shift)_n
GammaPoly poch(long shift, int n) { return GammaPoly::pochhammer(GammaPoly::gamma(shift), n); }

// Z^(gamma+shift)_{a,b}, zero when an index is negative.
TriPoly Zs(int a, int b, long shift = 0) {
  if (a < 0 || b < 0) return {};
  TriPoly p = zernike_exact(DiskIndex(a, b));
  return shift == 0 ? p : p.gamma_shifted(shift);
}

TriPoly dz(TriPoly p, int j) {
  for (int i = 0; i < j; ++i) p = p.d_dz();
  return p;
}

TriPoly dzbar(TriPoly p, int k) {
  for (int i = 0; i < k; ++i) p = p.d_dzbar();
  return p;
}

TriPoly sign(int k) { return TriPoly(k % 2 == 0 ? 1 : -1); }

// Difference of two expressions carrying the same gamma-weight, as a polynomial.
// A nonnegative plain weight is folded in; any other weight is a unit inside the
// disk and is dropped.
TriPoly difference(const WeightedExpr& a, const WeightedExpr& b) {
  const WeightedExpr d = ring_sub(a, b);
  if (d.is_zero()) return {};
  if (d.gamma_mult() == 0 && d.offset() >= 0) return normalize(d, true);
  return normalize(d);
}

TriPoly as_poly(const WeightedExpr& e) { return difference(e, WeightedExpr::plain(TriPoly())); }

void require_nonneg(std::initializer_list<int> xs, const char* what) {
  for (int x : xs) {
    if (x < 0) throw DomainError(std::string(what) + ": indices must be nonnegative");
  }
}

}  // namespace

// ---------------------------------------------------------------- operators

WeightedExpr apply_A_m(int m, const WeightedExpr& f) {
  require_nonneg({m}, "apply_A_m");
  if (f.gamma_mult() != 0) throw UnsupportedExpression("apply_A_m: f must not carry a symbolic gamma weight");
  WeightedExpr e = d_dz(ring_mul(WeightedExpr::plain(TriPoly(1), m - 1), f), m);
  return ring_mul(WeightedExpr::plain(TriPoly(1), m + 1), e);
}

WeightedExpr apply_w2_dz_power(int m, const TriPoly& f) {
  require_nonneg({m}, "apply_w2_dz_power");
  WeightedExpr e = WeightedExpr::plain(f);
  for (int i = 0; i < m; ++i) e = ring_mul(WeightedExpr::plain(TriPoly(1), 2), d_dz(e));
  return e;
}

WeightedExpr apply_op_A(int m, int n, const WeightedExpr& f) {
  require_nonneg({m, n}, "apply_op_A");
  WeightedExpr e = ring_mul(WeightedExpr(1, m, TriPoly::monomial(n, 0, 0)), f);
  e = ring_mul(WeightedExpr(-1, 0, TriPoly(1)), d_dz(e, m));
  return e.scaled(poch(m + 1, n) * GammaPoly(m % 2 == 0 ? 1 : -1));
}

WeightedExpr apply_op_B(int m, int n, const WeightedExpr& f) {
  require_nonneg({m, n}, "apply_op_B");
  WeightedExpr e = ring_mul(WeightedExpr(1, m + n, TriPoly(1)), f);
  e = ring_mul(WeightedExpr(-1, 0, TriPoly(1)), d_dzbar(d_dz(e, m), n));
  return (m + n) % 2 == 0 ? e : -e;
}

WeightedExpr apply_op_nabla(int m, int n, const GammaPoly& gamma, const GammaPoly& gamma_prime,
                            const WeightedExpr& f) {
  require_nonneg({m, n}, "apply_op_nabla");
  if (f.gamma_mult() != 0 || f.offset() != 0) {
    throw UnsupportedExpression("apply_op_nabla: f must be a plain polynomial");
  }
  const TriPoly w = TriPoly::w();
  TriPoly p = f.body();
  for (int i = n; i >= 1; --i) {
    p = -(w * p.d_dzbar()) + TriPoly(gamma_prime - GammaPoly(i)) * TriPoly::z() * p;
  }
  for (int i = m; i >= 1; --i) {
    p = -(w * p.d_dz()) + TriPoly(gamma - GammaPoly(i)) * TriPoly::zbar() * p;
  }
  return WeightedExpr::plain(p.substitute_w());
}

WeightedExpr apply_op_nabla_closed(int m, int n, int delta, const TriPoly& f) {
  require_nonneg({m, n}, "apply_op_nabla_closed");
  WeightedExpr e = d_dzbar(WeightedExpr(1, delta - 1, f), n);
  e = d_dz(ring_mul(WeightedExpr::plain(TriPoly(1), n - delta), e), m);
  e = ring_mul(WeightedExpr(-1, m + 1, TriPoly(1)), e);
  return (m + n) % 2 == 0 ? e : -e;
}

// ---------------------------------------------------------------- Burchnall-type formulas

TriPoly burchnall_rhs(int formula, int m, int n, const TriPoly& f, const GammaPoly& gamma_prime, bool reversed) {
  require_nonneg({m, n}, "burchnall_rhs");
  if (formula < 1 || formula > 3) throw DomainError("burchnall_rhs: formula must be 1, 2 or 3");
  const TriPoly w = TriPoly::w();
  const int kmax = formula == 1 ? 0 : n;
  TriPoly r;
  for (int jj = 0; jj <= m; ++jj) {
    const int j = reversed ? m - jj : jj;
    const TriPoly fj = dz(f, j);
    for (int kk = 0; kk <= kmax; ++kk) {
      const int k = reversed ? kmax - kk : kk;
      TriPoly t = sign(j + k) * C(binom(m, j) * binom(kmax, k)) * w.pow(j + k) * dzbar(fj, k);
      if (formula == 3) {
        // multiplied through by (gamma)_n: (gamma)_n / (gamma+k)_{n-k} = (gamma)_k
        const GammaPoly c = poch(0, k) * GammaPoly::pochhammer(gamma_prime + GammaPoly(k - n), n - k);
        t = t * TriPoly(c) * Zs(m - j, n - k, -1 - m + k + j);
      } else {
        t = t * Zs(m - j, n - k, j + k);
      }
      r += t;
    }
  }
  return r.substitute_w();
}

TriPoly burchnall_residual(int formula, int m, int n, const TriPoly& f, const GammaPoly& gamma_prime) {
  const TriPoly rhs = burchnall_rhs(formula, m, n, f, gamma_prime);
  switch (formula) {
    case 1: return as_poly(apply_op_A(m, n, WeightedExpr::plain(f))) - rhs;
    case 2: return as_poly(apply_op_B(m, n, WeightedExpr::plain(f))) - rhs;
    default: {
      const TriPoly lhs = apply_op_nabla(m, n, GammaPoly::gamma(), gamma_prime, WeightedExpr::plain(f)).body();
      return (TriPoly(poch(0, n)) * lhs).substitute_w() - rhs;
    }
  }
}

TriPoly composition_residual(int m, int mprime, const TriPoly& f) {
  return difference(apply_A_m(m + mprime, f), apply_A_m(m, apply_A_m(mprime, f)));
}

TriPoly iterated_operator_residual(int m, const TriPoly& f) { return difference(apply_w2_dz_power(m, f), apply_A_m(m, f)); }

// ---------------------------------------------------------------- corollaries

TriPoly corollary32_residual(int m, int n) {
  require_nonneg({m, n}, "corollary32_residual");
  TriPoly lhs;
  for (int j = 0; j <= m; ++j) {
    const GammaPoly c = GammaPoly::pochhammer(GammaPoly(-m), j) * poch(m, j) * GammaPoly(ratio(1, fac(j)));
    lhs += TriPoly(c) * TriPoly::zbar().pow(j) * Zs(m - j, n, j);
  }
  TriPoly rhs;
  if (m <= n) {
    rhs = TriPoly(GammaPoly::pochhammer(GammaPoly(-n), m) * poch(m + 1, n)) * TriPoly::z().pow(n - m) *
          TriPoly::w().pow(m);
  }
  return (lhs - rhs).substitute_w();
}

TriPoly corollary32_operator_residual(int m, int n) {
  require_nonneg({m, n}, "corollary32_operator_residual");
  const WeightedExpr lhs = apply_op_A(m, n, WeightedExpr(-1, -m, TriPoly(1)));
  TriPoly body;
  if (n >= m) {
    const GammaPoly c = GammaPoly(ratio(fac(n), fac(n - m)) * (m % 2 == 0 ? 1 : -1)) * poch(m + 1, n);
    body = TriPoly(c) * TriPoly::z().pow(n - m);
  }
  return difference(lhs, WeightedExpr(-1, 0, body));
}

GammaPoly chu_vandermonde_residual(int m) {
  if (m < 1) throw DomainError("chu_vandermonde_residual: m must be at least 1");
  GammaPoly r;
  for (int j = 0; j <= m; ++j) {
    r += GammaPoly::pochhammer(GammaPoly(-m), j) * poch(m, j) * poch(j + 1, m - j) * GammaPoly(ratio(1, fac(j)));
  }
  return r;
}

TriPoly hermite_corollary_residual(int m, int n) {
  require_nonneg({m, n}, "hermite_corollary_residual");
  const TriPoly w = TriPoly::w();
  const TriPoly lhs = TriPoly(poch(m + 1, n)) * hermite_exact(HermiteIndex(n, m)) * w.pow(m);
  TriPoly rhs;
  for (int j = 0; j <= m; ++j) {
    TriPoly inner;
    for (int k = 0; k <= j; ++k) {
      inner += sign(k) * TriPoly(poch(m, k) * GammaPoly(ratio(1, fac(k) * fac(j - k)))) * w.pow(j - k);
    }
    rhs += C(ratio(fac(m), fac(m - j))) * TriPoly::zbar().pow(j) * inner * Zs(m - j, n, j);
  }
  return (lhs - rhs).substitute_w();
}

// ---------------------------------------------------------------- Nielsen-type formulas

std::string nielsen_name(NielsenId id) {
  switch (id) {
    case NielsenId::eq41: return "eq41";
    case NielsenId::eq42: return "eq42";
    case NielsenId::nielsen1: return "nielsen1";
    case NielsenId::nielsen2: return "nielsen2";
  }
  return "unknown";
}

NielsenId parse_nielsen(const std::string& s) {
  for (NielsenId id : {NielsenId::eq41, NielsenId::eq42, NielsenId::nielsen1, NielsenId::nielsen2}) {
    if (nielsen_name(id) == s) return id;
  }
  throw DomainError("unknown Nielsen formula '" + s + "'");
}

TriPoly nielsen_residual(NielsenId which, int m, int n, int r, int s) {
  require_nonneg({m, n, r, s}, "nielsen_residual");
  const TriPoly w = TriPoly::w();
  const TriPoly z = TriPoly::z(), zb = TriPoly::zbar();
  TriPoly lhs, rhs;
  switch (which) {
    case NielsenId::eq41:
      // Z_{m,n+s} = s! (g+m+n+1)_s sum_j (-1)^j z^(s-j) w^j / ((s-j)! j!) m!/(m-j)! Z^(g+j)_{m-j,n}
      lhs = Zs(m, n + s);
      for (int j = 0; j <= std::min(m, s); ++j) {
        rhs += sign(j) * C(ratio(fac(m), fac(s - j) * fac(j) * fac(m - j))) * z.pow(s - j) * w.pow(j) * Zs(m - j, n, j);
      }
      rhs = TriPoly(poch(m + n + 1, s) * GammaPoly(fac(s))) * rhs;
      break;
    case NielsenId::eq42:
      // multiplied through by C^g_{m,n}
      lhs = TriPoly(poch(m + 1, n)) * Zs(m, n, s);
      for (int j = 0; j <= std::min(m, s); ++j) {
        rhs += C(ratio(fac(m), fac(s - j) * fac(j) * fac(m - j))) * zb.pow(j) * Zs(m - j, n, j);
      }
      rhs = TriPoly(poch(m + s + 1, n) * GammaPoly(fac(s))) * rhs;
      break;
    case NielsenId::nielsen1:
      lhs = C(ratio(1, fac(m) * fac(n) * fac(r) * fac(s))) * Zs(m + r, n + s);
      for (int j = 0; j <= std::min(m, s); ++j) {
        for (int k = 0; k <= std::min(n, r); ++k) {
          const GammaPoly c = poch(m + n + r + 1, j) * poch(m + n + s + 1, k) *
                              GammaPoly(ratio(1, fac(j) * fac(k) * fac(m - j) * fac(n - k) * fac(s - j) * fac(r - k)));
          rhs += sign(j + k) * TriPoly(c) * w.pow(j + k) * Zs(m - j, n - k, j + k) * Zs(r - k, s - j, m + n + j + k);
        }
      }
      break;
    case NielsenId::nielsen2:
      lhs = C(ratio(1, fac(m) * fac(n))) * Zs(m + r, n);
      for (int j = 0; j <= std::min(m, n); ++j) {
        const GammaPoly c =
            poch(m + r + 1, j) * poch(j + 1, m - j) * GammaPoly(ratio(1, fac(m - j) * fac(j) * fac(n - j)));
        rhs += sign(j) * TriPoly(c) * zb.pow(m - j) * w.pow(j) * Zs(r, n - j, m + j);
      }
      break;
  }
  return (lhs - rhs).substitute_w();
}

TriPoly mixed_derivative_residual(int r, int s, int j, int k) {
  require_nonneg({r, s, j, k}, "mixed_derivative_residual");
  if (j > s || k > r) throw DomainError("mixed_derivative_residual: need j <= s and k <= r");
  const TriPoly lhs = dzbar(dz(Zs(r, s), j), k);
  const GammaPoly c = poch(r + 1, j) * poch(s + 1, k) * GammaPoly(ratio(fac(r) * fac(s), fac(r - k) * fac(s - j)));
  return (lhs - TriPoly(c) * Zs(r - k, s - j, j + k)).substitute_w();
}

// ---------------------------------------------------------------- addition formula

namespace {

void check_runge(int m, int n, int gamma) {
  require_nonneg({m, n}, "runge");
  if (gamma < 0) throw DomainError("runge: gamma must be a nonnegative integer");
  if (gamma + m < 1) throw DomainError("runge: gamma + m must be a positive integer");
}

// Visits every (s1, s2, s3, s4) with s1 + s2 + s3 + s4 = total.
template <class F>
void for_each_multi_index(int total, F&& f) {
  for (int s1 = 0; s1 <= total; ++s1) {
    for (int s2 = 0; s2 <= total - s1; ++s2) {
      for (int s3 = 0; s3 <= total - s1 - s2; ++s3) f(s1, s2, s3, total - s1 - s2 - s3);
    }
  }
}

}  // namespace

ComplexValue runge_lhs(int m, int n, int gamma, ComplexValue z, ComplexValue w) {
  check_runge(m, n, gamma);
  if (!(std::norm(z) < 1.0) || !(std::norm(w) < 1.0) || !(std::norm(z + w) < 2.0)) {
    throw DomainError("runge: need |z| < 1, |w| < 1 and |z + w| < sqrt(2)");
  }
  using LD = long double;
  const std::complex<LD> x = std::complex<LD>(z.real(), z.imag()) + std::complex<LD>(w.real(), w.imag());
  const std::complex<LD> xs = x / std::sqrt(LD(2));
  const std::complex<LD> v = ipow(LD(1) - std::norm(xs), gamma) * zernike_explicit<LD>(DiskIndex(m, n), LD(gamma), xs).value;
  return {double(v.real()), double(v.imag())};
}

ComplexValue runge_residual(int m, int n, int gamma, ComplexValue z, ComplexValue w) {
  using LD = long double;
  using CL = std::complex<LD>;
  const ComplexValue lhs = runge_lhs(m, n, gamma, z, w);
  const CL zl(z.real(), z.imag()), wl(w.real(), w.imag());
  const LD hz = LD(1) - std::norm(zl), hw = LD(1) - std::norm(wl);
  auto F = [](int k) { return factorial<LD>(k); };
  auto Zl = [](int a, int b, int g, CL u) { return zernike_explicit<LD>(DiskIndex(a, b), LD(g), u).value; };
  CompensatedComplexSum<LD> acc;
  for (int j = 0; j <= m; ++j) {
    for (int k = 0; k <= n; ++k) {
      for_each_multi_index(gamma + m, [&](int s1, int s2, int s3, int s4) {
        LD c = LD(1) / (F(s1) * F(s2) * F(s3) * F(s4) * F(j) * F(k) * F(m - j) * F(n - k) *
                        pochhammer(LD(s1 + 1), s3 + k) * pochhammer(LD(s2 + 1), s4 + n - k));
        if ((s3 + s4) % 2 != 0) c = -c;
        CL t = ipow(std::conj(zl), s4) * ipow(std::conj(wl), s3) * std::pow(hz, LD(s1 - j)) *
               std::pow(hw, LD(s2 - m + j)) * c;
        t *= Zl(j, s3 + k, s1 - j, zl) * Zl(m - j, s4 + n - k, s2 - m + j, wl);
        acc.add(t);
      });
    }
  }
  const LD scale = std::pow(LD(0.5), LD(gamma + m) + LD(m + n) / LD(2)) * F(m) * F(n) * F(gamma + m + n);
  const CL rhs = acc.value() * scale;
  return lhs - ComplexValue(double(rhs.real()), double(rhs.imag()));
}

ExactComplex runge_residual_exact(int m, int n, int gamma, const ExactComplex& z, const ExactComplex& w) {
  check_runge(m, n, gamma);
  const BigRational hz = 1 - z.norm(), hw = 1 - w.norm();
  const ExactComplex u = z + w;
  const BigRational two(2);
  if (hz <= 0 || hw <= 0 || u.norm() >= two) throw DomainError("runge: need |z| < 1, |w| < 1 and |z + w| < sqrt(2)");

  auto rpow = [](const BigRational& b, int e) {
    BigRational r = 1;
    for (int i = 0; i < std::abs(e); ++i) r *= b;
    return e < 0 ? BigRational(1 / r) : r;
  };

  // 2^((m+n)/2) (1-|x|^2)^gamma Z(x), x = u / sqrt(2): a monomial xbar^a x^b w_x^c has
  // a + b = m + n - 2c, so its scaled value is 2^c ubar^a u^b w_x^c with w_x = 1 - |u|^2/2.
  const BigRational wx = 1 - u.norm() / two;
  ExactComplex lhs{0, 0};
  const TriPoly zx = zernike_exact(DiskIndex(m, n));
  for (const auto& [mono, c] : zx.terms()) {
    lhs = lhs + (pow(u, mono.z) * pow(u.conj(), mono.zbar)).scaled(c.eval(BigRational(gamma)) * rpow(two * wx, mono.w));
  }
  lhs = lhs.scaled(rpow(wx, gamma));

  ExactComplex acc{0, 0};
  for (int j = 0; j <= m; ++j) {
    for (int k = 0; k <= n; ++k) {
      for_each_multi_index(gamma + m, [&](int s1, int s2, int s3, int s4) {
        BigRational c = 1 / (fac(s1) * fac(s2) * fac(s3) * fac(s4) * fac(j) * fac(k) * fac(m - j) * fac(n - k) *
                             GammaPoly::pochhammer(GammaPoly(s1 + 1), s3 + k).coeff(0) *
                             GammaPoly::pochhammer(GammaPoly(s2 + 1), s4 + n - k).coeff(0));
        if ((s3 + s4) % 2 != 0) c = -c;
        c *= rpow(hz, s1 - j) * rpow(hw, s2 - m + j);
        const ExactComplex a = eval_exact(zernike_exact(DiskIndex(j, s3 + k)), BigRational(s1 - j), z);
        const ExactComplex b = eval_exact(zernike_exact(DiskIndex(m - j, s4 + n - k)), BigRational(s2 - m + j), w);
        acc = acc + (pow(z.conj(), s4) * pow(w.conj(), s3) * a * b).scaled(c);
      });
    }
  }
  const BigRational scale = rpow(BigRational(1, 2), gamma + m) * fac(m) * fac(n) * fac(gamma + m + n);
  ExactComplex d = lhs - acc.scaled(scale);
  d.re.canonicalize();
  d.im.canonicalize();
  return d;
}

double runge_remark_value(int gamma, ComplexValue z) {
  if (gamma < 0) throw DomainError("runge_remark_value: gamma must be a nonnegative integer");
  const double r2 = std::norm(z);
  if (!(r2 <= 1.0)) throw DomainError("runge_remark_value: need |z| <= 1");
  CompensatedSum<double> acc;
  for_each_multi_index(gamma, [&](int s1, int s2, int s3, int s4) {
    acc.add(ipow(r2, s3 + s4) * ipow(1.0 - r2, s1 + s2) /
            (factorial<double>(s1) * factorial<double>(s2) * factorial<double>(s3) * factorial<double>(s4)));
  });
  return acc.value();
}

BigRational runge_remark_value_exact(int gamma, const ExactComplex& z) {
  if (gamma < 0) throw DomainError("runge_remark_value: gamma must be a nonnegative integer");
  const BigRational r2 = z.norm();
  if (r2 > 1) throw DomainError("runge_remark_value: need |z| <= 1");
  BigRational acc = 0;
  for_each_multi_index(gamma, [&](int s1, int s2, int s3, int s4) {
    BigRational t = 1 / (fac(s1) * fac(s2) * fac(s3) * fac(s4));
    for (int i = 0; i < s3 + s4; ++i) t *= r2;
    for (int i = 0; i < s1 + s2; ++i) t *= 1 - r2;
    acc += t;
  });
  acc.canonicalize();
  return acc;
}

}  // namespace diskpoly
