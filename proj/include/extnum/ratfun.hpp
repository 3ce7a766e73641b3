#ifndef EXTNUM_RATFUN_HPP
#define EXTNUM_RATFUN_HPP

// Exact rational functions over Q, ordered by their behaviour as x -> +oo.
//
// This is the concrete non-archimedean field every other part of the library
// is built on: x is larger than every rational, 1/x is a positive
// infinitesimal, and the degree valuation deg(p/q) = deg p - deg q decides
// the order of magnitude of an element.

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace extnum {

using Integer = mpz_class;
using Rational = mpq_class;

/// Degree of a rational function: an integer, or -oo for the zero function.
class DegIndex {
 public:
  constexpr DegIndex(std::int64_t value) : value_(value) {}  // NOLINT(implicit)

  static constexpr DegIndex neg_inf() { return DegIndex(kNegInf, 0); }

  constexpr bool is_neg_inf() const { return value_ == kNegInf; }

  std::int64_t value() const {
    if (is_neg_inf()) throw std::domain_error("degree of zero is -infinity");
    return value_;
  }

  // -oo absorbs.
  friend constexpr DegIndex operator+(DegIndex a, DegIndex b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return DegIndex(a.value_ + b.value_);
  }
  friend constexpr DegIndex operator-(DegIndex a, std::int64_t b) {
    if (a.is_neg_inf()) return neg_inf();
    return DegIndex(a.value_ - b);
  }

  friend constexpr auto operator<=>(DegIndex, DegIndex) = default;
  friend constexpr bool operator==(DegIndex, DegIndex) = default;

  std::string to_string() const;

 private:
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
  constexpr DegIndex(std::int64_t raw, int) : value_(raw) {}
  std::int64_t value_;
};

/// Dense univariate polynomial over Q; coefficient i multiplies x^i.
/// The highest stored coefficient is never zero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(const Rational& c);  // NOLINT(implicit)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(implicit)

  static Poly monomial(const Rational& c, std::size_t exponent);
  static Poly x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  DegIndex degree() const;
  /// Coefficient of x^i (zero beyond the degree).
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;
  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Exponent of the lowest nonzero term; 0 for the zero polynomial.
  std::size_t valuation() const;
  bool is_monomial() const;

  Poly monic() const;
  Poly shifted(std::size_t k) const;  // multiply by x^k

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);
Poly pow(const Poly& p, std::size_t k);

/// Reduced fraction num/den with monic den. Zero is 0/1. Because the form is
/// canonical, structural equality is field equality.
class RatFun {
 public:
  RatFun() : num_(), den_(1) {}
  RatFun(const Rational& c) : num_(c), den_(1) {}  // NOLINT(implicit)
  RatFun(long c) : RatFun(Rational(c)) {}          // NOLINT(implicit)
  RatFun(const Poly& p) : num_(p), den_(1) {}      // NOLINT(implicit)

  /// Reduces num/den to canonical form. Throws std::domain_error on den = 0.
  static RatFun normalize(Poly num, Poly den);
  static RatFun x() { return RatFun(Poly::x()); }
  /// x^k for any integer k.
  static RatFun x_pow(std::int64_t k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Denominator is a power of x, i.e. finitely many Laurent terms.
  bool is_laurent() const { return den_.is_monomial(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& f, const RatFun& g);
  friend RatFun operator-(const RatFun& f, const RatFun& g);
  friend RatFun operator*(const RatFun& f, const RatFun& g);
  /// Throws std::domain_error when g = 0.
  friend RatFun operator/(const RatFun& f, const RatFun& g);
  RatFun& operator+=(const RatFun& g) { return *this = *this + g; }
  RatFun& operator-=(const RatFun& g) { return *this = *this - g; }
  RatFun& operator*=(const RatFun& g) { return *this = *this * g; }

  friend bool operator==(const RatFun& f, const RatFun& g) = default;

 private:
  RatFun(Poly num, Poly den, int) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

RatFun inverse(const RatFun& f);
RatFun pow(const RatFun& f, std::int64_t k);

DegIndex degree(const RatFun& f);
/// Eventual sign of f(x) as x -> +oo.
int sign(const RatFun& f);
std::strong_ordering operator<=>(const RatFun& f, const RatFun& g);
inline RatFun abs(const RatFun& f) { return sign(f) < 0 ? -f : f; }

/// The terms of the expansion of f at +oo with exponent > n, as a Laurent
/// polynomial. deg(f - truncate_above(f, n)) <= n. n = -oo returns f.
RatFun truncate_above(const RatFun& f, DegIndex n);

/// Laurent terms (exponent, coefficient) in descending exponent order.
/// Precondition: f.is_laurent().
std::vector<std::pair<std::int64_t, Rational>> laurent_terms(const RatFun& f);

/// Text form accepted by the expression parser, e.g. "x^2 - 1/2*x + 3/x",
/// or "(x + 1)/(x^2 + 3)" when the denominator is not a power of x.
std::string to_string(const Poly& p);
std::string to_string(const RatFun& f);

}  // namespace extnum

#endif  // EXTNUM_RATFUN_HPP
