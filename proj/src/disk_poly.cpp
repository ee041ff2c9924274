#include "diskpoly/disk_poly.hpp"

#include <cmath>

namespace diskpoly {

std::string engine_name(Engine e) {
  switch (e) {
    case Engine::explicit_sum: return "explicit";
    case Engine::jacobi: return "jacobi";
    case Engine::hyp2f1: return "hyp2f1";
    case Engine::recurrence: return "recurrence";
  }
  return "unknown";
}

Engine parse_engine(const std::string& s) {
  if (s == "explicit") return Engine::explicit_sum;
  if (s == "jacobi") return Engine::jacobi;
  if (s == "hyp2f1") return Engine::hyp2f1;
  if (s == "recurrence") return Engine::recurrence;
  throw DomainError("unknown engine '" + s + "'");
}

TriPoly zernike_exact(DiskIndex idx) {
  const int m = idx.m, n = idx.n;
  TriPoly r;
  const mpz_class mf = factorial_exact(m), nf = factorial_exact(n);
  for (int j = 0; j <= std::min(m, n); ++j) {
    BigRational c(mf * nf, factorial_exact(j) * factorial_exact(m - j) * factorial_exact(n - j));
    c.canonicalize();
    if (j % 2 != 0) c = -c;
    GammaPoly coef = GammaPoly::pochhammer(GammaPoly::gamma(j + 1), m + n - j) * GammaPoly(c);
    r.add_term({n - j, m - j, j}, coef);
  }
  return r;
}

TriPoly hermite_exact(HermiteIndex idx) {
  TriPoly r;
  for (int k = 0; k <= std::min(idx.p, idx.q); ++k) {
    mpz_class c = factorial_exact(idx.p) * factorial_exact(idx.q) /
                  (factorial_exact(k) * factorial_exact(idx.p - k) * factorial_exact(idx.q - k));
    if (k % 2 != 0) c = -c;
    r.add_term({idx.p - k, idx.q - k, 0}, GammaPoly(BigRational(c)));
  }
  return r;
}

ComplexValue to_dunkl(DiskIndex idx, RealParam gamma, ComplexValue z) {
  if (gamma.value <= -1) throw DomainError("to_dunkl: gamma must exceed -1");
  const double norm = pochhammer(gamma.value + 1.0, idx.m + idx.n);
  return std::conj(zernike_explicit(idx, gamma.value, z).value) / norm;
}

ComplexValue to_wunsche(DiskIndex idx, RealParam gamma, ComplexValue z) { return to_dunkl(idx, gamma, z); }

double real_zernike_radial(int k, int nu, double rho) {
  if (nu < 0 || k < nu) throw DomainError("real_zernike_radial: need k >= nu >= 0");
  if ((k - nu) % 2 != 0) throw DomainError("real_zernike_radial: k - nu must be even");
  if (!(rho >= 0.0 && rho <= 1.0)) throw DomainError("real_zernike_radial: rho must lie in [0, 1]");
  const int m = (k - nu) / 2, n = (k + nu) / 2;
  return zernike_explicit(DiskIndex(m, n), 0.0, ComplexValue(rho, 0.0)).value.real() / factorial<double>(k);
}

ComplexValue psi_eigenfunction(DiskIndex idx, RealParam nu, ComplexValue z) {
  if (!(nu.value > 0.5)) throw DomainError("psi_eigenfunction: nu must exceed 1/2");
  if (!(idx.m < nu.value - 0.5)) throw DomainError("psi_eigenfunction: need m < nu - 1/2");
  if (!(std::norm(z) < 1.0)) throw DomainError("psi_eigenfunction: z must lie in the open unit disk");
  const double gamma = 2.0 * (nu.value - idx.m) - 1.0;
  const double w = 1.0 - std::norm(z);
  const ComplexValue v = zernike_explicit(idx, gamma, z).value;
  return std::pow(w, (gamma + 1.0) / 2.0) * v / c_coeff(idx.m, idx.n, gamma);
}

}  // namespace diskpoly
