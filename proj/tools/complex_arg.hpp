#ifndef DISKPOLY_COMPLEX_ARG_HPP
#define DISKPOLY_COMPLEX_ARG_HPP

#include <cerrno>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <optional>
#include <string>

namespace diskpoly::cli {

namespace detail {

inline std::optional<double> parse_real(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace detail

// Parses `re`, `imi`, `re+imi` or `re-imi` (e.g. 0.3-0.4i, -2i, i, 1e-3+2e-2i).
inline std::optional<std::complex<double>> parse_complex(std::string s) {
  std::string t;
  for (char c : s) {
    if (c != ' ') t += c;
  }
  if (t.empty()) return std::nullopt;
  if (t.back() != 'i') {
    const auto re = detail::parse_real(t);
    if (!re) return std::nullopt;
    return std::complex<double>(*re, 0.0);
  }
  t.pop_back();
  // split at the last sign that is not the sign of an exponent
  std::size_t cut = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  const std::string re_part = cut == std::string::npos ? "" : t.substr(0, cut);
  std::string im_part = cut == std::string::npos ? t : t.substr(cut);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  if (im_part.size() > 1 && im_part[0] == '+') im_part.erase(0, 1);
  const auto im = detail::parse_real(im_part);
  if (!im) return std::nullopt;
  double re = 0.0;
  if (!re_part.empty()) {
    const auto r = detail::parse_real(re_part);
    if (!r) return std::nullopt;
    re = *r;
  }
  return std::complex<double>(re, *im);
}

}  // namespace diskpoly::cli

#endif
