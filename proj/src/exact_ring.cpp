#include "diskpoly/exact_ring.hpp"

#include <algorithm>
#include <sstream>

namespace diskpoly {

// ---------------------------------------------------------------- GammaPoly

GammaPoly::GammaPoly(const BigRational& c) {
  if (c != 0) c_.push_back(c);
}

GammaPoly::GammaPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

GammaPoly GammaPoly::gamma(const BigRational& shift) {
  return GammaPoly(std::vector<BigRational>{shift, BigRational(1)});
}

GammaPoly GammaPoly::pochhammer(const GammaPoly& base, int n) {
  if (n < 0) throw DomainError("GammaPoly::pochhammer: negative length");
  GammaPoly r(1);
  for (int i = 0; i < n; ++i) r *= base + GammaPoly(i);
  return r;
}

BigRational GammaPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

void GammaPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

GammaPoly& GammaPoly::operator+=(const GammaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

GammaPoly& GammaPoly::operator-=(const GammaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

GammaPoly& GammaPoly::operator*=(const GammaPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<BigRational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

GammaPoly GammaPoly::operator-() const {
  GammaPoly r(*this);
  for (auto& q : r.c_) q = -q;
  return r;
}

GammaPoly GammaPoly::shifted(const BigRational& s) const { return composed(gamma(s)); }

GammaPoly GammaPoly::composed(const GammaPoly& q) const {
  GammaPoly acc;
  for (std::size_t k = c_.size(); k-- > 0;) {
    acc *= q;
    acc += GammaPoly(c_[k]);
  }
  return acc;
}

GammaPoly GammaPoly::divided_exactly(const GammaPoly& d) const {
  if (d.is_zero()) throw DomainError("GammaPoly: division by zero polynomial");
  std::vector<BigRational> rem = c_;
  const int dd = d.degree();
  if (degree() < dd) {
    if (is_zero()) return {};
    throw UnsupportedExpression("GammaPoly: inexact division");
  }
  std::vector<BigRational> quo(static_cast<std::size_t>(degree() - dd + 1));
  const BigRational& lead = d.c_.back();
  for (int k = degree() - dd; k >= 0; --k) {
    BigRational q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quo[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k + i)] -= q * d.c_[static_cast<std::size_t>(i)];
  }
  for (const auto& r : rem) {
    if (r != 0) throw UnsupportedExpression("GammaPoly: inexact division");
  }
  return GammaPoly(std::move(quo));
}

BigRational GammaPoly::eval(const BigRational& g) const {
  BigRational acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * g + c_[k];
  return acc;
}

double GammaPoly::eval(double g) const { return eval_as<double>(g); }

std::string GammaPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    BigRational q = c_[k];
    if (q == 0) continue;
    if (first) {
      if (q < 0) os << "-";
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    q = abs(q);
    if (k == 0) {
      os << q.get_str();
    } else {
      if (q != 1) os << q.get_str() << "*";
      os << "g";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- TriPoly

TriPoly::TriPoly(const GammaPoly& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

TriPoly TriPoly::monomial(int z_exp, int zbar_exp, int w_exp, const GammaPoly& c) {
  if (z_exp < 0 || zbar_exp < 0 || w_exp < 0) throw DomainError("TriPoly: negative exponent");
  TriPoly p;
  p.add_term({z_exp, zbar_exp, w_exp}, c);
  return p;
}

int TriPoly::max_w_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.w);
  return d;
}

void TriPoly::add_term(const Monomial& m, const GammaPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  TriPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term({ma.z + mb.z, ma.zbar + mb.zbar, ma.w + mb.w}, ca * cb);
    }
  }
  return r;
}

TriPoly& TriPoly::operator*=(const TriPoly& o) { return *this = *this * o; }

TriPoly TriPoly::operator-() const {
  TriPoly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

TriPoly TriPoly::pow(int e) const {
  if (e < 0) throw DomainError("TriPoly::pow: negative exponent");
  TriPoly r(1), b(*this);
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

TriPoly TriPoly::d_dz() const {
  TriPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.z > 0) r.add_term({m.z - 1, m.zbar, m.w}, c * GammaPoly(m.z));
    if (m.w > 0) r.add_term({m.z, m.zbar + 1, m.w - 1}, c * GammaPoly(-m.w));
  }
  return r;
}

TriPoly TriPoly::d_dzbar() const {
  TriPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.zbar > 0) r.add_term({m.z, m.zbar - 1, m.w}, c * GammaPoly(m.zbar));
    if (m.w > 0) r.add_term({m.z + 1, m.zbar, m.w - 1}, c * GammaPoly(-m.w));
  }
  return r;
}

TriPoly TriPoly::gamma_shifted(const BigRational& s) const {
  TriPoly r;
  for (const auto& [m, c] : terms_) r.add_term(m, c.shifted(s));
  return r;
}

TriPoly TriPoly::gamma_composed(const GammaPoly& q) const {
  TriPoly r;
  for (const auto& [m, c] : terms_) r.add_term(m, c.composed(q));
  return r;
}

TriPoly TriPoly::conjugated() const {
  TriPoly r;
  for (const auto& [m, c] : terms_) r.add_term({m.zbar, m.z, m.w}, c);
  return r;
}

TriPoly TriPoly::substitute_w() const {
  TriPoly r;
  for (const auto& [m, c] : terms_) {
    // (1 - z zbar)^k = sum_i binom(k, i) (-1)^i (z zbar)^i
    mpz_class binom = 1;
    for (int i = 0; i <= m.w; ++i) {
      BigRational coef(i % 2 == 0 ? binom : mpz_class(-binom));
      r.add_term({m.z + i, m.zbar + i, 0}, c * GammaPoly(coef));
      binom = binom * (m.w - i) / (i + 1);
    }
  }
  return r;
}

std::string TriPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ") * z^" << m.z << " zbar^" << m.zbar << " w^" << m.w;
  }
  return os.str();
}

// ---------------------------------------------------------------- WeightedExpr

WeightedExpr::WeightedExpr(int gamma_mult, int offset, TriPoly body)
    : gamma_mult_(gamma_mult), offset_(offset), body_(std::move(body)) {
  if (gamma_mult < -1 || gamma_mult > 1) {
    throw UnsupportedExpression("WeightedExpr: weight w^(" + std::to_string(gamma_mult) +
                                "*gamma) is outside the supported class");
  }
}

WeightedExpr WeightedExpr::with_offset(int new_offset) const {
  if (new_offset > offset_) throw DomainError("WeightedExpr::with_offset: can only lower the offset");
  return {gamma_mult_, new_offset, body_ * TriPoly::w().pow(offset_ - new_offset)};
}

std::pair<WeightedExpr, WeightedExpr> align(const WeightedExpr& a, const WeightedExpr& b) {
  if (a.gamma_mult() != b.gamma_mult()) {
    throw UnsupportedExpression("align: weights w^(" + std::to_string(a.gamma_mult()) + "*gamma) and w^(" +
                                std::to_string(b.gamma_mult()) + "*gamma) differ by a symbolic power");
  }
  const int t = std::min(a.offset(), b.offset());
  return {a.with_offset(t), b.with_offset(t)};
}

WeightedExpr ring_add(const WeightedExpr& a, const WeightedExpr& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  auto [x, y] = align(a, b);
  return {x.gamma_mult_, x.offset_, x.body_ + y.body_};
}

WeightedExpr ring_sub(const WeightedExpr& a, const WeightedExpr& b) { return ring_add(a, -b); }

WeightedExpr ring_mul(const WeightedExpr& a, const WeightedExpr& b) {
  const int gm = a.gamma_mult_ + b.gamma_mult_;
  if (gm < -1 || gm > 1) {
    throw UnsupportedExpression("ring_mul: product would carry w^(" + std::to_string(gm) + "*gamma)");
  }
  return {gm, a.offset_ + b.offset_, a.body_ * b.body_};
}

WeightedExpr ring_mul(const WeightedExpr& a, const TriPoly& b) {
  return {a.gamma_mult_, a.offset_, a.body_ * b};
}

WeightedExpr d_dz(const WeightedExpr& e) {
  if (e.gamma_mult() == 0 && e.offset() == 0) return WeightedExpr::plain(e.body().d_dz());
  // d/dz (w^(a g + t) p) = w^(a g + t - 1) (-(a g + t) zbar p + w dp/dz)
  GammaPoly expo(std::vector<BigRational>{BigRational(e.offset()), BigRational(e.gamma_mult())});
  TriPoly body = TriPoly::monomial(0, 1, 0, -expo) * e.body() + TriPoly::w() * e.body().d_dz();
  return {e.gamma_mult(), e.offset() - 1, std::move(body)};
}

WeightedExpr d_dzbar(const WeightedExpr& e) {
  if (e.gamma_mult() == 0 && e.offset() == 0) return WeightedExpr::plain(e.body().d_dzbar());
  GammaPoly expo(std::vector<BigRational>{BigRational(e.offset()), BigRational(e.gamma_mult())});
  TriPoly body = TriPoly::monomial(1, 0, 0, -expo) * e.body() + TriPoly::w() * e.body().d_dzbar();
  return {e.gamma_mult(), e.offset() - 1, std::move(body)};
}

WeightedExpr d_dz(const WeightedExpr& e, int times) {
  WeightedExpr r = e;
  for (int i = 0; i < times; ++i) r = d_dz(r);
  return r;
}

WeightedExpr d_dzbar(const WeightedExpr& e, int times) {
  WeightedExpr r = e;
  for (int i = 0; i < times; ++i) r = d_dzbar(r);
  return r;
}

TriPoly normalize(const WeightedExpr& e, bool gamma_is_zero_offset) {
  if (!gamma_is_zero_offset) return e.body().substitute_w();
  if (e.gamma_mult() != 0) throw UnsupportedExpression("normalize: weight carries a symbolic gamma power");
  if (e.offset() < 0) throw UnsupportedExpression("normalize: negative power of w is not a polynomial");
  return (e.body() * TriPoly::w().pow(e.offset())).substitute_w();
}

bool exact_equal(const WeightedExpr& a, const WeightedExpr& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  auto [x, y] = align(a, b);
  return (x.body() - y.body()).substitute_w().is_zero();
}

std::string WeightedExpr::to_string() const {
  std::ostringstream os;
  os << "w^(";
  if (gamma_mult_ == 1) os << "g";
  if (gamma_mult_ == -1) os << "-g";
  if (gamma_mult_ == 0) {
    os << offset_;
  } else if (offset_ != 0) {
    os << (offset_ > 0 ? " + " : " - ") << std::abs(offset_);
  }
  os << ") * [" << body_.to_string() << "]";
  return os.str();
}

// ---------------------------------------------------------------- exact evaluation

ExactComplex pow(const ExactComplex& x, int e) {
  if (e < 0) throw DomainError("ExactComplex pow: negative exponent");
  ExactComplex r{1, 0}, b = x;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

ExactComplex eval_exact(const TriPoly& p, const BigRational& gamma, const ExactComplex& z) {
  const ExactComplex zb = z.conj();
  const BigRational w = 1 - z.norm();
  ExactComplex acc{0, 0};
  for (const auto& [m, c] : p.terms()) {
    BigRational scale = c.eval(gamma);
    BigRational wk = 1;
    for (int i = 0; i < m.w; ++i) wk *= w;
    acc = acc + (pow(z, m.z) * pow(zb, m.zbar)).scaled(scale * wk);
  }
  return acc;
}

ExactComplex eval_exact(const WeightedExpr& e, const BigRational& gamma, const ExactComplex& z) {
  BigRational expo = BigRational(e.gamma_mult()) * gamma + e.offset();
  expo.canonicalize();
  if (expo.get_den() != 1) {
    throw UnsupportedExpression("eval_exact: weight exponent " + expo.get_str() + " is not an integer");
  }
  if (!expo.get_num().fits_slong_p()) throw UnsupportedExpression("eval_exact: weight exponent too large");
  const long k = expo.get_num().get_si();
  const BigRational w = 1 - z.norm();
  if (k < 0 && w == 0) throw DomainError("eval_exact: negative power of w at |z| = 1");
  BigRational wk = 1;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) wk *= w;
  if (k < 0) wk = 1 / wk;
  return eval_exact(e.body(), gamma, z).scaled(wk);
}

std::ostream& operator<<(std::ostream& os, const GammaPoly& p) { return os << p.to_string(); }
std::ostream& operator<<(std::ostream& os, const TriPoly& p) { return os << p.to_string(); }
std::ostream& operator<<(std::ostream& os, const WeightedExpr& e) { return os << e.to_string(); }

}  // namespace diskpoly
