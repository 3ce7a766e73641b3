#include "extnum/generate.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace extnum {

namespace {

long uniform_long(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

Poly gen_poly(Rng& rng, const GenParams& params, long degree) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  for (auto& c : coeffs) c = uniform_long(rng, -params.coeff_bound, params.coeff_bound);
  while (coeffs.back() == 0) coeffs.back() = uniform_long(rng, -params.coeff_bound, params.coeff_bound);
  return Poly(std::move(coeffs));
}

}  // namespace

void GenParams::validate() const {
  if (max_degree < 0) throw std::invalid_argument("GenParams: max_degree must be >= 0");
  if (coeff_bound < 1) throw std::invalid_argument("GenParams: coeff_bound must be >= 1");
  if (min_index > max_index) throw std::invalid_argument("GenParams: empty magnitude index range");
  for (double p : {p_zero, p_ox, p_all})
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("GenParams: probabilities must lie in [0, 1]");
  if (std::abs(p_zero + p_ox + p_all - 1.0) > 1e-9)
    throw std::invalid_argument("GenParams: tag probabilities must sum to 1");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  // splitmix64 finaliser applied to each word in turn.
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
  };
  return mix(mix(mix(seed) ^ a) ^ b);
}

RatFun gen_ratfun(Rng& rng, const GenParams& params) {
  if (coin(rng, 0.1)) return RatFun();
  return gen_nonzero_ratfun(rng, params);
}

RatFun gen_nonzero_ratfun(Rng& rng, const GenParams& params) {
  const Poly num = gen_poly(rng, params, uniform_long(rng, 0, params.max_degree));
  // Mix of polynomial, Laurent and general denominators.
  const long shape = uniform_long(rng, 0, 9);
  if (shape < 4) return RatFun::normalize(num, Poly(1));
  if (shape < 7) {
    return RatFun::normalize(num, Poly::monomial(1, static_cast<std::size_t>(uniform_long(rng, 0, params.max_degree))));
  }
  return RatFun::normalize(num, gen_poly(rng, params, uniform_long(rng, 0, params.max_degree)));
}

Magnitude gen_magnitude(Rng& rng, const GenParams& params) {
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  if (u < params.p_zero) return Magnitude::zero();
  if (u < params.p_zero + params.p_ox) {
    return Magnitude::ox(std::uniform_int_distribution<std::int64_t>(params.min_index, params.max_index)(rng));
  }
  return Magnitude::all();
}

RatFun gen_member(Rng& rng, const GenParams& params, Magnitude mag) {
  if (mag.is_zero()) return RatFun();
  const RatFun g = gen_ratfun(rng, params);
  if (mag.is_all() || g.is_zero()) return g;
  // Rescale so the degree lands at or just below the bound.
  const std::int64_t target = mag.index() - uniform_long(rng, 0, 2);
  return g * RatFun::x_pow(target - degree(g).value());
}

RatFun gen_member(Rng& rng, const GenParams& params, const ExternalNumber& alpha) {
  return alpha.rep() + gen_member(rng, params, alpha.magnitude());
}

ExternalNumber gen_external(Rng& rng, const GenParams& params) {
  const Magnitude mag = gen_magnitude(rng, params);
  return ExternalNumber::make(gen_ratfun(rng, params), mag);
}

ExternalNumber gen_zeroless(Rng& rng, const GenParams& params) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    ExternalNumber v = gen_external(rng, params);
    if (v.is_zeroless()) return v;
  }
  return gen_nonzero_ratfun(rng, params);
}

ExternalNumber gen_precise(Rng& rng, const GenParams& params) { return gen_ratfun(rng, params); }

ExternalNumber gen_magnitude_coset(Rng& rng, const GenParams& params) {
  return ExternalNumber(gen_magnitude(rng, params));
}

}  // namespace extnum
