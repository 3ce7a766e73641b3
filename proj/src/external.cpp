#include "extnum/external.hpp"

namespace extnum {

ExternalNumber ExternalNumber::make(const RatFun& a, Magnitude mag) {
  ExternalNumber out(mag);
  if (extnum::contains(mag, a)) return out;
  out.rep_ = mag.is_ox() ? truncate_above(a, mag.index()) : a;
  return out;
}

ExternalNumber operator+(const ExternalNumber& a, const ExternalNumber& b) {
  return ExternalNumber::make(a.rep() + b.rep(), a.magnitude() + b.magnitude());
}

ExternalNumber operator-(const ExternalNumber& a) { return ExternalNumber::make(-a.rep(), a.magnitude()); }

ExternalNumber operator*(const ExternalNumber& a, const ExternalNumber& b) {
  const Magnitude mag = a.rep() * b.magnitude() + b.rep() * a.magnitude() + a.magnitude() * b.magnitude();
  return ExternalNumber::make(a.rep() * b.rep(), mag);
}

ExternalNumber operator/(const ExternalNumber& a, const ExternalNumber& b) {
  if (b.is_magnitude())
    throw ArithmeticError(ArithmeticError::Kind::division_by_magnitude, "division by non-zeroless element");
  return a * inverse(b);
}

Magnitude operator/(Magnitude mag, const ExternalNumber& alpha) {
  if (alpha.is_magnitude())
    throw ArithmeticError(ArithmeticError::Kind::division_by_magnitude, "division by non-zeroless element");
  return inverse(alpha.rep()) * mag;
}

ExternalNumber unity(const ExternalNumber& alpha) {
  if (alpha.is_magnitude())
    throw ArithmeticError(ArithmeticError::Kind::unity_of_magnitude, "unity undefined for magnitudes");
  return ExternalNumber::make(1, alpha.magnitude() / alpha);
}

ExternalNumber inverse(const ExternalNumber& alpha) {
  if (alpha.is_magnitude())
    throw ArithmeticError(ArithmeticError::Kind::inverse_of_magnitude, "inverse undefined for magnitudes");
  const RatFun inv = inverse(alpha.rep());
  return ExternalNumber::make(inv, inv * inv * alpha.magnitude());
}

ExternalNumber pow(const ExternalNumber& alpha, std::int64_t k) {
  if (k == 0) return unity(alpha);
  if (k < 0) return pow(inverse(alpha), -k);
  ExternalNumber result = alpha;
  ExternalNumber base = alpha;
  auto e = static_cast<std::uint64_t>(k) - 1;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

RelationClass classify(const ExternalNumber& a, const ExternalNumber& b) {
  const Magnitude joint = a.magnitude() + b.magnitude();
  const RatFun gap = b.rep() - a.rep();
  if (contains(joint, gap)) {
    if (a.magnitude() == b.magnitude()) return RelationClass::equal;
    return a.magnitude() < b.magnitude() ? RelationClass::proper_subset : RelationClass::proper_superset;
  }
  return sign(gap) > 0 ? RelationClass::less_separated : RelationClass::greater_separated;
}

bool leq(const ExternalNumber& a, const ExternalNumber& b) {
  switch (classify(a, b)) {
    case RelationClass::equal:
    case RelationClass::less_separated:
    case RelationClass::proper_subset:
      return true;
    default:
      return false;
  }
}

bool lt_separated(const ExternalNumber& a, const ExternalNumber& b) {
  return classify(a, b) == RelationClass::less_separated;
}

Magnitude distributivity_defect(const ExternalNumber& a, const ExternalNumber& b, const ExternalNumber& c) {
  const ExternalNumber defect = neutral(a) * b + neutral(a) * c;
  return defect.magnitude();
}

std::string to_string(const ExternalNumber& a) {
  if (a.is_magnitude()) return to_string(a.magnitude());
  if (a.is_precise()) return to_string(a.rep());
  return to_string(a.rep()) + " + " + to_string(a.magnitude());
}

std::string to_string(RelationClass r) {
  switch (r) {
    case RelationClass::less_separated:
      return "<";
    case RelationClass::greater_separated:
      return ">";
    case RelationClass::equal:
      return "=";
    case RelationClass::proper_subset:
      return "⊂";
    case RelationClass::proper_superset:
      return "⊃";
  }
  return {};
}

}  // namespace extnum
