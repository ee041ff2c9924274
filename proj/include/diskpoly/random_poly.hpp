#ifndef DISKPOLY_RANDOM_POLY_HPP
#define DISKPOLY_RANDOM_POLY_HPP

#include <complex>
#include <random>

#include "diskpoly/exact_ring.hpp"

namespace diskpoly {

// Random polynomial in z, zbar of total degree <= deg with small integer coefficients.
inline TriPoly random_poly(std::mt19937& rng, int deg) {
  std::uniform_int_distribution<int> coef(-3, 3);
  TriPoly p;
  for (int a = 0; a <= deg; ++a) {
    for (int b = 0; a + b <= deg; ++b) {
      const int c = coef(rng);
      if (c != 0) p += TriPoly::monomial(a, b, 0, GammaPoly(c));
    }
  }
  return p.is_zero() ? TriPoly(1) : p;
}

// Uniformly distributed point of the disk |z| <= rmax.
inline std::complex<double> random_disk_point(std::mt19937& rng, double rmax) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = rmax * std::sqrt(u(rng));
  return std::polar(r, 6.283185307179586 * u(rng));
}

}  // namespace diskpoly

#endif
