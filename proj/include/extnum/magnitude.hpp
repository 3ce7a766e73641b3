#ifndef EXTNUM_MAGNITUDE_HPP
#define EXTNUM_MAGNITUDE_HPP

// Magnitudes: the convex additive subgroups of the rational-function field.
// In this field every such subgroup is {0}, O(x^n) = {f : deg f <= n} for
// some integer n, or the whole field F, so a magnitude is just a tag and an
// index. Magnitudes are totally ordered by inclusion.

#include <compare>
#include <cstdint>
#include <string>

#include "extnum/ratfun.hpp"

namespace extnum {

class Magnitude {
 public:
  // Declaration order is the inclusion order.
  enum class Kind : std::uint8_t { zero, ox, all };

  constexpr Magnitude() = default;  // {0}

  static constexpr Magnitude zero() { return Magnitude(); }
  static constexpr Magnitude ox(std::int64_t n) { return Magnitude(Kind::ox, n); }
  static constexpr Magnitude all() { return Magnitude(Kind::all, 0); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_zero() const { return kind_ == Kind::zero; }
  constexpr bool is_ox() const { return kind_ == Kind::ox; }
  constexpr bool is_all() const { return kind_ == Kind::all; }
  /// n for O(x^n); meaningless for {0} and F.
  constexpr std::int64_t index() const { return index_; }

  friend constexpr auto operator<=>(const Magnitude&, const Magnitude&) = default;
  friend constexpr bool operator==(const Magnitude&, const Magnitude&) = default;

 private:
  constexpr Magnitude(Kind k, std::int64_t n) : kind_(k), index_(n) {}
  Kind kind_ = Kind::zero;
  std::int64_t index_ = 0;
};

/// The infinitesimals, O(x^-1).
inline constexpr Magnitude kInfinitesimal = Magnitude::ox(-1);
/// The bounded elements, O(1).
inline constexpr Magnitude kBounded = Magnitude::ox(0);

/// Minkowski sum A + B; by convexity it is the larger of the two.
constexpr Magnitude operator+(Magnitude a, Magnitude b) { return a < b ? b : a; }

/// f in A.
bool contains(Magnitude a, const RatFun& f);

/// The set {f g : g in A}, which is again a magnitude.
Magnitude operator*(const RatFun& f, Magnitude a);
inline Magnitude operator*(Magnitude a, const RatFun& f) { return f * a; }

/// Minkowski product AB. {0} annihilates everything, including F.
constexpr Magnitude operator*(Magnitude a, Magnitude b) {
  if (a.is_zero() || b.is_zero()) return Magnitude::zero();
  if (a.is_all() || b.is_all()) return Magnitude::all();
  return Magnitude::ox(a.index() + b.index());
}

/// "{0}", "O(1)", "O(x^n)" or "F".
std::string to_string(Magnitude a);

}  // namespace extnum

#endif  // EXTNUM_MAGNITUDE_HPP
