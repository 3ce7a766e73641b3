#ifndef EXTNUM_GENERATE_HPP
#define EXTNUM_GENERATE_HPP

// Random instances for property checks and the axiom audit. Everything is
// driven by an explicit std::mt19937_64, so a seed fixes every value.

#include <cstdint>
#include <random>

#include "extnum/external.hpp"

namespace extnum {

using Rng = std::mt19937_64;

struct GenParams {
  int max_degree = 4;             // numerator and denominator degree bound
  long coeff_bound = 10;          // |integer coefficients| <= bound
  std::int64_t min_index = -6;    // O(x^n) index range
  std::int64_t max_index = 6;
  double p_zero = 0.2;            // magnitude tag weights, summing to 1
  double p_ox = 0.7;
  double p_all = 0.1;

  /// Throws std::invalid_argument when the parameters are unusable.
  void validate() const;
};

/// Deterministic 64-bit mixer used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

RatFun gen_ratfun(Rng& rng, const GenParams& params);
/// A nonzero rational function.
RatFun gen_nonzero_ratfun(Rng& rng, const GenParams& params);
Magnitude gen_magnitude(Rng& rng, const GenParams& params);
/// A random element of the magnitude (0 for {0}).
RatFun gen_member(Rng& rng, const GenParams& params, Magnitude mag);
/// A random element of the coset.
RatFun gen_member(Rng& rng, const GenParams& params, const ExternalNumber& alpha);

ExternalNumber gen_external(Rng& rng, const GenParams& params);
ExternalNumber gen_zeroless(Rng& rng, const GenParams& params);
ExternalNumber gen_precise(Rng& rng, const GenParams& params);
/// A magnitude, as a coset.
ExternalNumber gen_magnitude_coset(Rng& rng, const GenParams& params);

}  // namespace extnum

#endif  // EXTNUM_GENERATE_HPP
