#ifndef EXTNUM_TESTS_SUPPORT_HPP
#define EXTNUM_TESTS_SUPPORT_HPP

// Test-side oracles. None of these call the library routine they are used to
// check: truncation is cross-checked against a power series expansion in 1/x,
// magnitude membership against the bounded-ratio definition.

#include <cstdint>
#include <vector>

#include "extnum/external.hpp"
#include "extnum/generate.hpp"

namespace extnum::testing {

inline RatFun make(std::initializer_list<long> num, std::initializer_list<long> den = {1}) {
  std::vector<Rational> n(num.begin(), num.end());
  std::vector<Rational> d(den.begin(), den.end());
  return RatFun::normalize(Poly(n), Poly(d));
}

/// Coefficients s_0, s_1, ... of f = x^(p-q) * sum s_k x^-k, the expansion at
/// infinity, computed by long division of the reversed polynomials.
inline std::vector<Rational> series_at_infinity(const RatFun& f, std::size_t terms) {
  const auto num = f.num().coefficients();
  const auto den = f.den().coefficients();
  std::vector<Rational> nr(num.rbegin(), num.rend());
  std::vector<Rational> dr(den.rbegin(), den.rend());
  std::vector<Rational> s(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    Rational acc = k < nr.size() ? nr[k] : Rational(0);
    for (std::size_t j = 1; j <= k && j < dr.size(); ++j) acc -= dr[j] * s[k - j];
    s[k] = acc / dr[0];
  }
  return s;
}

/// The part of f made of expansion terms with exponent > n.
inline RatFun series_truncate(const RatFun& f, std::int64_t n) {
  if (f.is_zero()) return {};
  const std::int64_t top =
      static_cast<std::int64_t>(f.num().degree().value()) - static_cast<std::int64_t>(f.den().degree().value());
  if (top <= n) return {};
  const auto s = series_at_infinity(f, static_cast<std::size_t>(top - n));
  RatFun out;
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s[k] != 0) out += RatFun(s[k]) * RatFun::x_pow(top - static_cast<std::int64_t>(k));
  return out;
}

/// f in O(x^n) by definition: |f| <= c x^n for the constant c = |lc f| + 1.
inline bool bounded_by(const RatFun& f, std::int64_t n) {
  if (f.is_zero()) return true;
  const Rational c = abs(f.num().leading()) + 1;
  return abs(f) <= RatFun(c) * RatFun::x_pow(n);
}

/// Set membership with the bounded-ratio oracle standing in for Ox.
inline bool oracle_member(Magnitude a, const RatFun& f) {
  if (a.is_zero()) return f.is_zero();
  if (a.is_all()) return true;
  return bounded_by(f, a.index());
}

/// A random element of A. Ox members are scaled to a degree at or below the
/// index, so both boundary and interior elements come up.
inline RatFun sample_member(Rng& rng, Magnitude a) {
  GenParams params;
  if (a.is_zero()) return {};
  const RatFun base = gen_nonzero_ratfun(rng, params);
  if (a.is_all()) return base * RatFun::x_pow(static_cast<std::int64_t>(rng() % 9) - 4);
  const std::int64_t shift = a.index() - degree(base).value() - static_cast<std::int64_t>(rng() % 3);
  return base * RatFun::x_pow(shift);
}

inline RatFun sample_member(Rng& rng, const ExternalNumber& alpha) {
  return alpha.rep() + sample_member(rng, alpha.magnitude());
}

}  // namespace extnum::testing

#endif  // EXTNUM_TESTS_SUPPORT_HPP
