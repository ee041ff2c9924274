#include "diskpoly/recurrences.hpp"

namespace diskpoly {

std::string recurrence_name(RecurrenceId id) {
  switch (id) {
    case RecurrenceId::basic: return "basic";
    case RecurrenceId::ttr11: return "ttr11";
    case RecurrenceId::ttr21: return "ttr21";
    case RecurrenceId::ttr41: return "ttr41";
    case RecurrenceId::ttr51: return "ttr51";
    case RecurrenceId::ttr31: return "ttr31";
    case RecurrenceId::ttr61: return "ttr61";
  }
  return "unknown";
}

RecurrenceId parse_recurrence(const std::string& s) {
  for (RecurrenceId id : kAllRecurrences) {
    if (recurrence_name(id) == s) return id;
  }
  throw DomainError("unknown recurrence '" + s + "'");
}

namespace {

// Building blocks for one orientation of a relation. In the conjugate
// orientation Z_{a,b} becomes Z_{b,a}, z becomes zbar and d/dz becomes d/dzbar.
struct Blocks {
  bool conj = false;

  TriPoly Z(int a, int b, int shift = 0) const {
    if (a < 0 || b < 0) return {};
    TriPoly p = conj ? zernike_exact(DiskIndex(b, a)) : zernike_exact(DiskIndex(a, b));
    return shift == 0 ? p : p.gamma_shifted(shift);
  }
  TriPoly z() const { return conj ? TriPoly::zbar() : TriPoly::z(); }
  TriPoly zbar() const { return conj ? TriPoly::z() : TriPoly::zbar(); }
  TriPoly dz(const TriPoly& p) const { return conj ? p.d_dzbar() : p.d_dz(); }
};

TriPoly G(long shift) { return TriPoly(GammaPoly::gamma(shift)); }

TriPoly residual(RecurrenceId rid, DiskIndex idx, const Blocks& B) {
  const int m = idx.m, n = idx.n;
  const TriPoly w = TriPoly::w();
  const TriPoly s = G(m + n + 1);  // gamma + m + n + 1
  TriPoly r;
  switch (rid) {
    case RecurrenceId::basic:
      // (g+m+1)/(g+m+n+1) Z_{m+1,n} = (g+m+n+1) zbar Z_{m,n} - n (g+m+n) Z_{m,n-1}
      r = G(m + 1) * B.Z(m + 1, n) -
          s * (s * B.zbar() * B.Z(m, n) - TriPoly(n) * G(m + n) * B.Z(m, n - 1));
      break;
    case RecurrenceId::ttr11:
      // Z_{m,n+1} = (g+m+n+1) { z Z_{m,n} - m w Z^{g+1}_{m-1,n} }
      r = B.Z(m, n + 1) - s * (B.z() * B.Z(m, n) - TriPoly(m) * w * B.Z(m - 1, n, 1));
      break;
    case RecurrenceId::ttr21:
      // Z_{m,n} = (g+m+1)/(g+m+n+1) Z^{g+1}_{m,n} - m zbar Z^{g+1}_{m-1,n}
      r = s * B.Z(m, n) - G(m + 1) * B.Z(m, n, 1) + s * TriPoly(m) * B.zbar() * B.Z(m - 1, n, 1);
      break;
    case RecurrenceId::ttr41:
      // (g+m+n+1) Z_{m,n} = zbar Z_{m,n+1} + (g+m+1) w Z^{g+1}_{m,n}
      r = s * B.Z(m, n) - B.zbar() * B.Z(m, n + 1) - G(m + 1) * w * B.Z(m, n, 1);
      break;
    case RecurrenceId::ttr51:
      // Z_{m+1,n} = (g+1) zbar Z^{g+1}_{m,n} - n (g+m+2) w Z^{g+2}_{m,n-1}
      r = B.Z(m + 1, n) - G(1) * B.zbar() * B.Z(m, n, 1) + TriPoly(n) * G(m + 2) * w * B.Z(m, n - 1, 2);
      break;
    case RecurrenceId::ttr31:
      // w dZ^{g+1}_{m,n}/dz = (g+1) zbar Z^{g+1}_{m,n} - Z_{m+1,n}
      r = w * B.dz(B.Z(m, n, 1)) - G(1) * B.zbar() * B.Z(m, n, 1) + B.Z(m + 1, n);
      break;
    case RecurrenceId::ttr61:
      // {(g+m+1) zbar - w d/dz} Z_{m,n} = (g+m+1)/(g+m+n+1) Z_{m+1,n}
      r = s * (G(m + 1) * B.zbar() * B.Z(m, n) - w * B.dz(B.Z(m, n))) - G(m + 1) * B.Z(m + 1, n);
      break;
  }
  return r.substitute_w();
}

}  // namespace

TriPoly recurrence_residual(RecurrenceId rid, DiskIndex idx) { return residual(rid, idx, Blocks{false}); }

TriPoly conjugate_counterpart(RecurrenceId rid, DiskIndex idx) { return residual(rid, idx, Blocks{true}); }

}  // namespace diskpoly
