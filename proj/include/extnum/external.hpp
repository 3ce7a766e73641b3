#ifndef EXTNUM_EXTERNAL_HPP
#define EXTNUM_EXTERNAL_HPP

// External numbers: cosets a + A of the rational-function field with respect
// to a magnitude A, under Minkowski addition and the coset product
//
//   (a + A) + (b + B) = (a + b) + (A + B)
//   (a + A) (b + B)   = ab + aB + bA + AB.
//
// Values are kept canonical so that structural equality is coset equality:
// a coset that contains 0 is stored as its magnitude (rep 0), and for
// A = O(x^n) the representative keeps only the Laurent terms of exponent > n.

#include <stdexcept>
#include <string>

#include "extnum/magnitude.hpp"
#include "extnum/ratfun.hpp"

namespace extnum {

class ArithmeticError : public std::domain_error {
 public:
  enum class Kind { division_by_magnitude, unity_of_magnitude, inverse_of_magnitude };
  ArithmeticError(Kind kind, const std::string& what) : std::domain_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class ExternalNumber {
 public:
  /// The magnitude {0}.
  ExternalNumber() = default;
  /// The precise element f + {0}.
  ExternalNumber(const RatFun& f) : rep_(f) {}  // NOLINT(implicit)
  ExternalNumber(long c) : rep_(c) {}           // NOLINT(implicit)
  /// The magnitude A viewed as a coset.
  explicit ExternalNumber(Magnitude a) : mag_(a) {}

  /// a + A in canonical form.
  static ExternalNumber make(const RatFun& a, Magnitude mag);

  const RatFun& rep() const { return rep_; }
  Magnitude magnitude() const { return mag_; }

  bool is_magnitude() const { return rep_.is_zero(); }
  bool is_zeroless() const { return !rep_.is_zero(); }
  bool is_precise() const { return mag_.is_zero(); }

  /// f in this coset.
  bool contains(const RatFun& f) const { return extnum::contains(mag_, f - rep_); }

  friend bool operator==(const ExternalNumber&, const ExternalNumber&) = default;

 private:
  RatFun rep_;
  Magnitude mag_;
};

inline const ExternalNumber kOne = ExternalNumber(1);

ExternalNumber operator+(const ExternalNumber& a, const ExternalNumber& b);
ExternalNumber operator-(const ExternalNumber& a);
/// a + (-b). Note a - a = e(a), which is {0} only for precise a.
inline ExternalNumber operator-(const ExternalNumber& a, const ExternalNumber& b) { return a + (-b); }
ExternalNumber operator*(const ExternalNumber& a, const ExternalNumber& b);
/// a d(b); b must be zeroless.
ExternalNumber operator/(const ExternalNumber& a, const ExternalNumber& b);

/// e(a): the magnitude of a.
inline Magnitude magnitude_of(const ExternalNumber& a) { return a.magnitude(); }
/// e(a) as an element of Q.
inline ExternalNumber neutral(const ExternalNumber& a) { return ExternalNumber(a.magnitude()); }

/// A / alpha for zeroless alpha, i.e. A scaled by 1/a for any representative a.
Magnitude operator/(Magnitude mag, const ExternalNumber& alpha);

/// u(alpha) = 1 + A/alpha, the individual multiplicative neutral element.
ExternalNumber unity(const ExternalNumber& alpha);
/// d(alpha) = 1/a + A/a^2, the inverse of alpha in its unity group.
ExternalNumber inverse(const ExternalNumber& alpha);

/// Integer power by repeated product. k < 0 uses d(alpha); k = 0 gives u(alpha).
ExternalNumber pow(const ExternalNumber& alpha, std::int64_t k);

// --- Order ------------------------------------------------------------

/// Two cosets are either disjoint or nested.
enum class RelationClass {
  less_separated,     // disjoint, every member of the left is below the right
  greater_separated,  // disjoint, the other way round
  equal,
  proper_subset,      // left strictly inside right
  proper_superset,
};

RelationClass classify(const ExternalNumber& a, const ExternalNumber& b);

/// a <= b: every x in a is below some y in b.
bool leq(const ExternalNumber& a, const ExternalNumber& b);
/// a <= b and a, b disjoint.
bool lt_separated(const ExternalNumber& a, const ExternalNumber& b);
/// a <= b and a != b. Nested cosets can be strictly ordered in this sense.
inline bool lt(const ExternalNumber& a, const ExternalNumber& b) { return a != b && leq(a, b); }

/// The magnitude e(a) b + e(a) c that restores distributivity:
/// ab + ac = a(b + c) + e(a) b + e(a) c.
Magnitude distributivity_defect(const ExternalNumber& a, const ExternalNumber& b,
                                const ExternalNumber& c);

/// "x + 1 + O(x^-1)", "O(1)", "x", "{0}". Accepted back by the parser.
std::string to_string(const ExternalNumber& a);
std::string to_string(RelationClass r);

}  // namespace extnum

#endif  // EXTNUM_EXTERNAL_HPP
