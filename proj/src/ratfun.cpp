#include "extnum/ratfun.hpp"

#include <algorithm>
#include <sstream>

namespace extnum {

std::string DegIndex::to_string() const {
  return is_neg_inf() ? std::string("-inf") : std::to_string(value_);
}

// --- Poly ---------------------------------------------------------------

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly Poly::monomial(const Rational& c, std::size_t exponent) {
  Poly p;
  if (c == 0) return p;
  p.coeffs_.assign(exponent + 1, Rational(0));
  p.coeffs_.back() = c;
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DegIndex Poly::degree() const {
  if (coeffs_.empty()) return DegIndex::neg_inf();
  return static_cast<std::int64_t>(coeffs_.size() - 1);
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

std::size_t Poly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return 0;
}

bool Poly::is_monomial() const { return !coeffs_.empty() && valuation() + 1 == coeffs_.size(); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  const Rational inv = 1 / leading();
  return r *= inv;
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  Poly r;
  r.coeffs_.assign(k, Rational(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const auto db = static_cast<std::size_t>(b.degree().value());
  Poly rem = a;
  if (rem.is_zero() || rem.degree() < b.degree()) return {Poly(), rem};
  std::vector<Rational> quot(static_cast<std::size_t>(rem.degree().value()) - db + 1, Rational(0));
  const Rational inv_lead = 1 / b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree().value()) - db;
    const Rational c = rem.leading() * inv_lead;
    quot[shift] = c;
    rem -= (b * c).shifted(shift);
  }
  return {Poly(std::move(quot)), rem};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Poly pow(const Poly& p, std::size_t k) {
  Poly result(1);
  Poly base = p;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

// --- RatFun -------------------------------------------------------------

RatFun RatFun::normalize(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.is_zero()) return RatFun();
  if (den.degree() > DegIndex(0)) {
    // Strip common powers of x first; cheap and common for Laurent inputs.
    const std::size_t common = std::min(num.valuation(), den.valuation());
    if (common > 0) {
      num = Poly(std::vector<Rational>(num.coefficients().begin() + static_cast<std::ptrdiff_t>(common),
                                       num.coefficients().end()));
      den = Poly(std::vector<Rational>(den.coefficients().begin() + static_cast<std::ptrdiff_t>(common),
                                       den.coefficients().end()));
    }
    if (!den.is_monomial() && !(num.degree() == DegIndex(0))) {
      const Poly g = gcd(num, den);
      if (g.degree() > DegIndex(0)) {
        num = divmod(num, g).first;
        den = divmod(den, g).first;
      }
    }
  }
  const Rational inv = 1 / den.leading();
  num *= inv;
  den *= inv;
  return RatFun(std::move(num), std::move(den), 0);
}

RatFun RatFun::x_pow(std::int64_t k) {
  if (k >= 0) return RatFun(Poly::monomial(1, static_cast<std::size_t>(k)));
  return RatFun(Poly(1), Poly::monomial(1, static_cast<std::size_t>(-k)), 0);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, 0); }

RatFun operator+(const RatFun& f, const RatFun& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.den_ == g.den_) return RatFun::normalize(f.num_ + g.num_, f.den_);
  return RatFun::normalize(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RatFun operator-(const RatFun& f, const RatFun& g) { return f + (-g); }

RatFun operator*(const RatFun& f, const RatFun& g) {
  if (f.is_zero() || g.is_zero()) return RatFun();
  if (f.den_ == Poly(1) && g.den_ == Poly(1)) return RatFun(f.num_ * g.num_, Poly(1), 0);
  return RatFun::normalize(f.num_ * g.num_, f.den_ * g.den_);
}

RatFun operator/(const RatFun& f, const RatFun& g) {
  if (g.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFun::normalize(f.num_ * g.den_, f.den_ * g.num_);
}

RatFun inverse(const RatFun& f) { return RatFun(1) / f; }

RatFun pow(const RatFun& f, std::int64_t k) {
  if (k < 0) return pow(inverse(f), -k);
  RatFun result(1);
  RatFun base = f;
  auto e = static_cast<std::uint64_t>(k);
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

DegIndex degree(const RatFun& f) {
  if (f.is_zero()) return DegIndex::neg_inf();
  return f.num().degree().value() - f.den().degree().value();
}

int sign(const RatFun& f) {
  if (f.is_zero()) return 0;
  return sgn(f.num().leading());
}

std::strong_ordering operator<=>(const RatFun& f, const RatFun& g) {
  const int s = sign(f - g);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

RatFun truncate_above(const RatFun& f, DegIndex n) {
  if (n.is_neg_inf() || f.is_zero()) return f;
  if (degree(f) <= n) return RatFun();
  const std::int64_t lowest = n.value() + 1;  // lowest exponent kept
  // Multiply through by x^s so the kept exponents are all >= 0, then the
  // polynomial part of the division holds exactly the terms we need.
  const std::int64_t s = std::max<std::int64_t>(0, -lowest);
  auto [quot, rem] = divmod(f.num().shifted(static_cast<std::size_t>(s)), f.den());
  const auto floor_exp = static_cast<std::size_t>(lowest + s);
  std::vector<Rational> kept(quot.coefficients().begin(), quot.coefficients().end());
  for (std::size_t i = 0; i < kept.size() && i < floor_exp; ++i) kept[i] = 0;
  return RatFun::normalize(Poly(std::move(kept)), Poly::monomial(1, static_cast<std::size_t>(s)));
}

std::vector<std::pair<std::int64_t, Rational>> laurent_terms(const RatFun& f) {
  if (!f.is_laurent()) throw std::invalid_argument("laurent_terms: denominator is not a power of x");
  const auto shift = f.den().degree().value();
  std::vector<std::pair<std::int64_t, Rational>> terms;
  const auto coeffs = f.num().coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (coeffs[i] != 0) terms.emplace_back(static_cast<std::int64_t>(i) - shift, coeffs[i]);
  return terms;
}

namespace {

std::string power_of_x(std::int64_t m) { return m == 1 ? std::string("x") : "x^" + std::to_string(m); }

// |c| * x^k, without sign.
std::string term_body(const Rational& abs_c, std::int64_t k) {
  const std::string p = abs_c.get_num().get_str();
  const std::string q = abs_c.get_den().get_str();
  const bool integral = abs_c.get_den() == 1;
  if (k == 0) return integral ? p : p + "/" + q;
  if (k > 0) {
    if (abs_c == 1) return power_of_x(k);
    return (integral ? p : p + "/" + q) + "*" + power_of_x(k);
  }
  if (integral) return p + "/" + power_of_x(-k);
  return p + "/(" + q + "*" + power_of_x(-k) + ")";
}

std::string join_terms(const std::vector<std::pair<std::int64_t, Rational>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += term_body(abs(c), k);
    first = false;
  }
  return out;
}

std::vector<std::pair<std::int64_t, Rational>> poly_terms(const Poly& p) {
  std::vector<std::pair<std::int64_t, Rational>> terms;
  const auto coeffs = p.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (coeffs[i] != 0) terms.emplace_back(static_cast<std::int64_t>(i), coeffs[i]);
  return terms;
}

}  // namespace

std::string to_string(const Poly& p) { return join_terms(poly_terms(p)); }

std::string to_string(const RatFun& f) {
  if (f.is_laurent()) return join_terms(laurent_terms(f));
  const auto num_terms = poly_terms(f.num());
  std::string num = join_terms(num_terms);
  if (num_terms.size() > 1) num = "(" + num + ")";
  return num + "/(" + to_string(f.den()) + ")";
}

}  // namespace extnum
