/**
 * @file recurrences.hpp
 * @brief Three-term recurrences: the recurrence engine and exact residuals of
 *        every relation (and its conjugate counterpart).
 */
#ifndef DISKPOLY_RECURRENCES_HPP
#define DISKPOLY_RECURRENCES_HPP

#include <array>
#include <string>
#include <type_traits>
#include <vector>

#include "diskpoly/disk_poly.hpp"

namespace diskpoly {

enum class RecurrenceId { basic, ttr11, ttr21, ttr41, ttr51, ttr31, ttr61 };

inline constexpr std::array<RecurrenceId, 7> kAllRecurrences = {
    RecurrenceId::basic, RecurrenceId::ttr11, RecurrenceId::ttr21, RecurrenceId::ttr41,
    RecurrenceId::ttr51, RecurrenceId::ttr31, RecurrenceId::ttr61};

std::string recurrence_name(RecurrenceId id);
RecurrenceId parse_recurrence(const std::string& s);

/// Z^gamma_{m,n} by raising m from the seed row Z_{0,k} = (gamma+1)_k z^k.
///
/// The sweep works on S_{m,n} = Z_{m,n} / (m! n!), for which the basic relation reads
///   S_{m+1,n} = (g+m+n+1) / ((g+m+1)(m+1)) * [(g+m+n+1) zbar S_{m,n} - (g+m+n) S_{m,n-1}].
/// Division by g+m+1 makes gamma <= -1 unsafe, so that range is refused.
template <class Real = double>
BasicDiskPolyValue<Real> eval_by_recurrence(DiskIndex idx, const NoDeduce<Real>& gamma,
                                            const std::complex<NoDeduce<Real>>& z) {
  using std::abs;
  // The sweep loses a few digits more than the direct sums near |z| -> 1, so the
  // double instantiation runs it in long double.
  using Wide = std::conditional_t<std::is_same_v<Real, double>, long double, Real>;
  detail::check_finite(gamma, "gamma");
  if (!(gamma > Real(-1))) {
    throw DomainError("eval_by_recurrence: gamma must exceed -1; use the explicit engine");
  }
  const int m = idx.m, n = idx.n;
  const Wide g(gamma);
  const std::complex<Wide> zw(Wide(z.real()), Wide(z.imag()));
  const std::complex<Wide> zb = std::conj(zw);
  std::vector<std::complex<Wide>> row(static_cast<std::size_t>(n) + 1);
  row[0] = Wide(1);
  for (int k = 1; k <= n; ++k) row[k] = row[k - 1] * zw * ((g + Wide(k)) / Wide(k));
  for (int i = 0; i < m; ++i) {
    const Wide gi = g + Wide(i);
    for (int k = n; k >= 0; --k) {
      std::complex<Wide> t = zb * row[k] * (gi + Wide(k + 1));
      if (k > 0) t -= row[k - 1] * (gi + Wide(k));
      row[k] = t * ((gi + Wide(k + 1)) / ((gi + Wide(1)) * Wide(i + 1)));
    }
  }
  const std::complex<Wide> vw = row[n] * (factorial<Wide>(m) * factorial<Wide>(n));
  const std::complex<Real> v(Real(vw.real()), Real(vw.imag()));
  return {v, Engine::recurrence,
          detail::condition_ratio(detail::explicit_max_term(m, n, gamma, z), Real(abs(v)))};
}

/// Exact residual LHS - RHS of a relation at indices (m, n), gamma symbolic,
/// after w := 1 - z zbar. Denominators are cleared by (gamma + m + n + 1).
/// Zero means the relation holds identically in gamma.
TriPoly recurrence_residual(RecurrenceId rid, DiskIndex idx);

/// Same relation with every Z_{a,b} replaced by Z_{b,a} and z, d/dz swapped for zbar, d/dzbar.
TriPoly conjugate_counterpart(RecurrenceId rid, DiskIndex idx);

}  // namespace diskpoly

#endif  // DISKPOLY_RECURRENCES_HPP
