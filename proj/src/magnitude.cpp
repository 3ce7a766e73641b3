#include "extnum/magnitude.hpp"

namespace extnum {

bool contains(Magnitude a, const RatFun& f) {
  switch (a.kind()) {
    case Magnitude::Kind::zero:
      return f.is_zero();
    case Magnitude::Kind::ox:
      return degree(f) <= DegIndex(a.index());
    case Magnitude::Kind::all:
      return true;
  }
  return false;
}

Magnitude operator*(const RatFun& f, Magnitude a) {
  if (f.is_zero() || a.is_zero()) return Magnitude::zero();
  if (a.is_all()) return a;
  return Magnitude::ox(a.index() + degree(f).value());
}

std::string to_string(Magnitude a) {
  switch (a.kind()) {
    case Magnitude::Kind::zero:
      return "{0}";
    case Magnitude::Kind::ox:
      return a.index() == 0 ? std::string("O(1)") : "O(x^" + std::to_string(a.index()) + ")";
    case Magnitude::Kind::all:
      return "F";
  }
  return {};
}

}  // namespace extnum
