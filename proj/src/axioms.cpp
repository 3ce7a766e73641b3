#include "extnum/axioms.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <optional>
#include <tuple>
#include <stdexcept>
#include <thread>

namespace extnum {

namespace {

constexpr std::array<AxiomInfo, 37> kCatalogue{{
    {AxiomId::A1, "A1", "add_associativity", 3, "x+(y+z)=(x+y)+z"},
    {AxiomId::A2, "A2", "add_commutativity", 2, "x+y=y+x"},
    {AxiomId::A3, "A3", "add_neutral", 1, "Ee(x+e=x & Af(x+f=x -> e+f=e))"},
    {AxiomId::A4, "A4", "add_symmetric", 1, "Es(x+s=e(x) & e(s)=e(x))"},
    {AxiomId::A5, "A5", "magnitude_of_sum", 2, "e(x+y)=e(x) | e(x+y)=e(y)"},
    {AxiomId::A6, "A6", "mul_associativity", 3, "x(yz)=(xy)z"},
    {AxiomId::A7, "A7", "mul_commutativity", 2, "xy=yx"},
    {AxiomId::A8, "A8", "mul_unity", 1, "x!=e(x) -> Eu(xu=x & Av(xv=x -> uv=u))"},
    {AxiomId::A9, "A9", "mul_inverse", 1, "x!=e(x) -> Ed(xd=u(x) & u(d)=u(x))"},
    {AxiomId::A10, "A10", "unity_of_product", 2, "x!=e(x) & y!=e(y) -> u(xy)=u(x) | u(xy)=u(y)"},
    {AxiomId::A11, "A11", "reflexivity", 1, "x<=x"},
    {AxiomId::A12, "A12", "antisymmetry", 2, "x<=y & y<=x -> x=y"},
    {AxiomId::A13, "A13", "transitivity", 3, "x<=y & y<=z -> x<=z"},
    {AxiomId::A14, "A14", "totality", 2, "x<=y | y<=x"},
    {AxiomId::A15, "A15", "add_compatibility", 3, "x<=y -> x+z<=y+z"},
    {AxiomId::A16, "A16", "magnitude_bounds", 2, "y+e(x)=e(x) -> y<=e(x) & -y<=e(x)"},
    {AxiomId::A17, "A17", "mul_compatibility", 3, "e(x)<x & y<=z -> xy<=xz"},
    {AxiomId::A18, "A18", "amplification", 3, "e(y)<=y<=z -> e(x)y<=e(x)z"},
    {AxiomId::A19, "A19", "scale", 2, "Ez(e(x)y=e(z))"},
    {AxiomId::A20, "A20", "magnitude_of_product", 2, "e(xy)=e(x)y+e(y)x"},
    {AxiomId::A21, "A21", "magnitude_of_unity", 1, "x!=e(x) -> e(u(x))=e(x)/x"},
    {AxiomId::A22, "A22", "distributivity", 3, "xy+xz=x(y+z)+e(x)y+e(x)z"},
    {AxiomId::A23, "A23", "symmetric_of_product", 2, "-(xy)=(-x)y"},
    {AxiomId::A24, "A24", "minimal_neutral", 1, "Em Ax(m+x=x)"},
    {AxiomId::A25, "A25", "minimal_unity", 1, "Eu Ax(ux=x)"},
    {AxiomId::A26, "A26", "maximal_magnitude", 1, "EM Ax(e(x)+M=M)"},
    {AxiomId::A27, "A27", "nontrivial_magnitude", 0, "Ex(e(x)!=0 & e(x)!=M)"},
    {AxiomId::A28, "A28", "decomposition", 1, "Ea(x=a+e(x) & e(a)=0)"},
    {AxiomId::A29, "A29", "magnitude_separation", 2,
     "x=e(x) & y=e(y) & x<y -> Ez(z!=e(z) & x<z<y)"},
    {AxiomId::T1, "T1", "representative_independence", 2, "operations do not depend on representatives"},
    {AxiomId::T2, "T2", "trichotomy", 2, "x,y disjoint or nested"},
    {AxiomId::T3, "T3", "order_compat_add", 3, "x<=y -> x+z<=y+z"},
    {AxiomId::T4, "T4", "order_compat_zeroless", 3, "e(x)<x (disjoint) & y<=z -> xy<=xz"},
    {AxiomId::T5, "T5", "order_compat_magnitude", 3, "e(y)<=y<=z -> e(x)y<=e(x)z"},
    {AxiomId::T6, "T6", "product_magnitude_and_sign", 2, "e(xy)=xe(y)+ye(x) & -(xy)=x(-y)"},
    {AxiomId::T7, "T7", "defect_is_magnitude", 3, "xy+xz=x(y+z)+D with D a magnitude"},
    {AxiomId::T8, "T8", "precise_subfield", 3, "{0}-cosets form a field"},
}};

constexpr std::size_t kAppendixCount = 29;

// The arithmetic under test, optionally mutated.
struct Algebra {
  Faults faults;

  ExternalNumber add(const ExternalNumber& a, const ExternalNumber& b) const {
    if (faults.add_ignores_magnitude_sum) return ExternalNumber::make(a.rep() + b.rep(), a.magnitude());
    return a + b;
  }
  ExternalNumber mul(const ExternalNumber& a, const ExternalNumber& b) const {
    if (faults.drop_product_ab) {
      return ExternalNumber::make(a.rep() * b.rep(), a.rep() * b.magnitude() + b.rep() * a.magnitude());
    }
    return a * b;
  }
};

struct Verdict {
  bool pass = true;
  bool vacuous = false;
  std::string detail;
};

Verdict ok(std::string detail = {}) { return {true, false, std::move(detail)}; }
Verdict vacuous(std::string why) { return {true, true, std::move(why)}; }
Verdict fail(std::string why) { return {false, false, std::move(why)}; }

Verdict expect_equal(const ExternalNumber& lhs, const ExternalNumber& rhs, std::string_view what) {
  if (lhs == rhs) return ok();
  return fail(std::string(what) + ": " + to_string(lhs) + " != " + to_string(rhs));
}

std::string show(const ExternalNumber& v) { return to_string(v); }

// FNV-1a over the rendered binding, so challengers are a pure function of it.
std::uint64_t binding_hash(AxiomId id, std::span<const ExternalNumber> binding) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    h ^= 0xff;
    h *= 0x100000001b3ULL;
  };
  feed(info(id).code);
  for (const auto& v : binding) feed(to_string(v));
  return h;
}

// A magnitude no larger than `mag`.
Magnitude gen_magnitude_below(Rng& rng, const GenParams& params, Magnitude mag) {
  if (mag.is_zero()) return mag;
  if (mag.is_all()) return gen_magnitude(rng, params);
  const long step = std::uniform_int_distribution<long>(0, 4)(rng);
  return step == 4 ? Magnitude::zero() : Magnitude::ox(mag.index() - step);
}

constexpr int kChallengers = 8;

// Elements f with x + f = x, plus a couple that (almost surely) are not.
std::vector<ExternalNumber> additive_challengers(const ExternalNumber& x, Rng& rng, const GenParams& params) {
  const Magnitude mag = x.magnitude();
  std::vector<ExternalNumber> out{ExternalNumber(mag), ExternalNumber()};
  for (int i = 0; i < kChallengers; ++i)
    out.push_back(ExternalNumber::make(gen_member(rng, params, mag), gen_magnitude_below(rng, params, mag)));
  out.push_back(gen_external(rng, params));
  out.push_back(gen_external(rng, params));
  return out;
}

// Elements v with x v = x for zeroless x, plus unrelated ones.
std::vector<ExternalNumber> multiplicative_challengers(const ExternalNumber& x, Rng& rng, const GenParams& params) {
  const ExternalNumber u = unity(x);
  const Magnitude mag = u.magnitude();
  std::vector<ExternalNumber> out{kOne, u};
  for (int i = 0; i < kChallengers; ++i) {
    out.push_back(ExternalNumber::make(RatFun(1) + gen_member(rng, params, mag), gen_magnitude_below(rng, params, mag)));
  }
  out.push_back(gen_external(rng, params));
  out.push_back(gen_zeroless(rng, params));
  return out;
}

// A precise element strictly between the magnitudes lo < hi.
ExternalNumber separating_witness(Magnitude lo, Magnitude hi) {
  if (lo.is_ox()) return RatFun::x_pow(lo.index() + 1);
  if (hi.is_ox()) return RatFun::x_pow(hi.index());
  return kOne;
}

Verdict evaluate(AxiomId id, const Algebra& alg, std::span<const ExternalNumber> v, Rng& rng) {
  const GenParams params;
  auto e = [](const ExternalNumber& a) { return neutral(a); };

  switch (id) {
    case AxiomId::A1:
      return expect_equal(alg.add(v[0], alg.add(v[1], v[2])), alg.add(alg.add(v[0], v[1]), v[2]), "x+(y+z) vs (x+y)+z");
    case AxiomId::A2:
      return expect_equal(alg.add(v[0], v[1]), alg.add(v[1], v[0]), "x+y vs y+x");
    case AxiomId::A3: {
      const ExternalNumber& x = v[0];
      const ExternalNumber neut = e(x);
      if (alg.add(x, neut) != x) return fail("x+e(x) = " + show(alg.add(x, neut)) + " != x");
      for (const auto& f : additive_challengers(x, rng, params)) {
        if (alg.add(x, f) == x && alg.add(neut, f) != neut)
          return fail("x+f=x but e+f != e for f = " + show(f));
      }
      return ok();
    }
    case AxiomId::A4: {
      const ExternalNumber s = -v[0];
      if (s.magnitude() != v[0].magnitude()) return fail("e(-x) != e(x)");
      return expect_equal(alg.add(v[0], s), e(v[0]), "x+(-x) vs e(x)");
    }
    case AxiomId::A5: {
      const Magnitude m = alg.add(v[0], v[1]).magnitude();
      if (m == v[0].magnitude() || m == v[1].magnitude()) return ok();
      return fail("e(x+y) = " + to_string(m) + " is neither e(x) nor e(y)");
    }
    case AxiomId::A6:
      return expect_equal(alg.mul(v[0], alg.mul(v[1], v[2])), alg.mul(alg.mul(v[0], v[1]), v[2]), "x(yz) vs (xy)z");
    case AxiomId::A7:
      return expect_equal(alg.mul(v[0], v[1]), alg.mul(v[1], v[0]), "xy vs yx");
    case AxiomId::A8: {
      const ExternalNumber& x = v[0];
      if (x == e(x)) return vacuous("x is a magnitude");
      const ExternalNumber u = unity(x);
      if (alg.mul(x, u) != x) return fail("x u(x) = " + show(alg.mul(x, u)) + " != x");
      for (const auto& w : multiplicative_challengers(x, rng, params)) {
        if (alg.mul(x, w) == x && alg.mul(u, w) != u) return fail("xv=x but uv != u for v = " + show(w));
      }
      return ok();
    }
    case AxiomId::A9: {
      const ExternalNumber& x = v[0];
      if (x == e(x)) return vacuous("x is a magnitude");
      const ExternalNumber d = inverse(x);
      if (unity(d) != unity(x)) return fail("u(d(x)) = " + show(unity(d)) + " != u(x) = " + show(unity(x)));
      return expect_equal(alg.mul(x, d), unity(x), "x d(x) vs u(x)");
    }
    case AxiomId::A10: {
      if (v[0] == e(v[0]) || v[1] == e(v[1])) return vacuous("x or y is a magnitude");
      const ExternalNumber u = unity(alg.mul(v[0], v[1]));
      if (u == unity(v[0]) || u == unity(v[1])) return ok();
      return fail("u(xy) = " + show(u) + " is neither u(x) nor u(y)");
    }
    case AxiomId::A11:
      return leq(v[0], v[0]) ? ok() : fail("x <= x fails");
    case AxiomId::A12:
      if (!(leq(v[0], v[1]) && leq(v[1], v[0]))) return vacuous("not mutually <=");
      return expect_equal(v[0], v[1], "x<=y<=x but");
    case AxiomId::A13:
      if (!(leq(v[0], v[1]) && leq(v[1], v[2]))) return vacuous("not a chain");
      return leq(v[0], v[2]) ? ok() : fail("x<=y<=z but not x<=z");
    case AxiomId::A14:
      return leq(v[0], v[1]) || leq(v[1], v[0]) ? ok() : fail("incomparable");
    case AxiomId::A15:
    case AxiomId::T3: {
      if (!leq(v[0], v[1])) return vacuous("x > y");
      const ExternalNumber l = alg.add(v[0], v[2]);
      const ExternalNumber r = alg.add(v[1], v[2]);
      return leq(l, r) ? ok() : fail("x+z = " + show(l) + " > y+z = " + show(r));
    }
    case AxiomId::A16: {
      const ExternalNumber ex = e(v[0]);
      const ExternalNumber& y = v[1];
      if (alg.add(y, ex) != ex) return vacuous("y+e(x) != e(x)");
      if (!leq(y, ex)) return fail("y > e(x)");
      if (!leq(-y, ex)) return fail("-y > e(x)");
      return ok();
    }
    case AxiomId::A17: {
      if (!(lt(e(v[0]), v[0]) && leq(v[1], v[2]))) return vacuous("hypothesis false");
      const ExternalNumber l = alg.mul(v[0], v[1]);
      const ExternalNumber r = alg.mul(v[0], v[2]);
      return leq(l, r) ? ok() : fail("xy = " + show(l) + " > xz = " + show(r));
    }
    case AxiomId::A18:
    case AxiomId::T5: {
      if (!(leq(e(v[1]), v[1]) && leq(v[1], v[2]))) return vacuous("hypothesis false");
      const ExternalNumber l = alg.mul(e(v[0]), v[1]);
      const ExternalNumber r = alg.mul(e(v[0]), v[2]);
      return leq(l, r) ? ok() : fail("e(x)y = " + show(l) + " > e(x)z = " + show(r));
    }
    case AxiomId::A19: {
      // Witness z = bA + AB for x = a + A, y = b + B.
      const Magnitude a_mag = v[0].magnitude();
      const ExternalNumber z(v[1].rep() * a_mag + a_mag * v[1].magnitude());
      return expect_equal(alg.mul(e(v[0]), v[1]), e(z), "e(x)y vs e(bA+AB)");
    }
    case AxiomId::A20:
      return expect_equal(e(alg.mul(v[0], v[1])), alg.add(alg.mul(e(v[0]), v[1]), alg.mul(e(v[1]), v[0])),
                          "e(xy) vs e(x)y+e(y)x");
    case AxiomId::A21: {
      const ExternalNumber& x = v[0];
      if (x == e(x)) return vacuous("x is a magnitude");
      return expect_equal(e(unity(x)), alg.mul(e(x), inverse(x)), "e(u(x)) vs e(x)/x");
    }
    case AxiomId::A22: {
      const auto& [x, y, z] = std::tie(v[0], v[1], v[2]);
      const ExternalNumber lhs = alg.add(alg.mul(x, y), alg.mul(x, z));
      ExternalNumber rhs = alg.mul(x, alg.add(y, z));
      if (!alg.faults.omit_distributivity_defect) rhs = alg.add(alg.add(rhs, alg.mul(e(x), y)), alg.mul(e(x), z));
      return expect_equal(lhs, rhs, "xy+xz vs x(y+z)+e(x)y+e(x)z");
    }
    case AxiomId::A23:
      return expect_equal(-alg.mul(v[0], v[1]), alg.mul(-v[0], v[1]), "-(xy) vs (-x)y");
    case AxiomId::A24: {
      const ExternalNumber m = solid_witnesses().minimal_neutral;
      return expect_equal(alg.add(m, v[0]), v[0], "m+x vs x");
    }
    case AxiomId::A25: {
      const ExternalNumber u = solid_witnesses().minimal_unity;
      return expect_equal(alg.mul(u, v[0]), v[0], "ux vs x");
    }
    case AxiomId::A26: {
      const ExternalNumber big(solid_witnesses().maximal);
      return expect_equal(alg.add(e(v[0]), big), big, "e(x)+M vs M");
    }
    case AxiomId::A27: {
      const auto w = solid_witnesses();
      const ExternalNumber x(w.nontrivial);
      if (e(x) == ExternalNumber() || e(x) == ExternalNumber(w.maximal)) return fail("witness is trivial");
      return ok();
    }
    case AxiomId::A28: {
      const ExternalNumber a(v[0].rep());
      if (!a.is_precise()) return fail("e(a) != 0");
      return expect_equal(alg.add(a, e(v[0])), v[0], "a+e(x) vs x");
    }
    case AxiomId::A29: {
      const auto& [x, y] = std::tie(v[0], v[1]);
      if (!(x == e(x) && y == e(y) && lt(x, y))) return vacuous("not two ordered magnitudes");
      const ExternalNumber z = separating_witness(x.magnitude(), y.magnitude());
      if (z == e(z)) return fail("witness " + show(z) + " is a magnitude");
      if (!lt(x, z) || !lt(z, y)) return fail("witness " + show(z) + " does not separate");
      return ok();
    }
    case AxiomId::T1: {
      const auto& [x, y] = std::tie(v[0], v[1]);
      for (int i = 0; i < 3; ++i) {
        const RatFun a = gen_member(rng, params, x);
        const RatFun b = gen_member(rng, params, y);
        const Magnitude am = x.magnitude();
        const Magnitude bm = y.magnitude();
        const ExternalNumber sum = ExternalNumber::make(a + b, am + bm);
        const ExternalNumber prod = ExternalNumber::make(a * b, a * bm + b * am + am * bm);
        if (sum != alg.add(x, y)) return fail("sum changes with representatives " + to_string(a) + ", " + to_string(b));
        if (prod != alg.mul(x, y))
          return fail("product changes with representatives " + to_string(a) + ", " + to_string(b));
      }
      return ok();
    }
    case AxiomId::T2: {
      const auto& [x, y] = std::tie(v[0], v[1]);
      const RelationClass rel = classify(x, y);
      if (classify(y, x) != [rel] {
            switch (rel) {
              case RelationClass::less_separated: return RelationClass::greater_separated;
              case RelationClass::greater_separated: return RelationClass::less_separated;
              case RelationClass::proper_subset: return RelationClass::proper_superset;
              case RelationClass::proper_superset: return RelationClass::proper_subset;
              default: return rel;
            }
          }())
        return fail("classify is not antisymmetric");
      for (int i = 0; i < 6; ++i) {
        const RatFun p = gen_member(rng, params, x);
        const RatFun q = gen_member(rng, params, y);
        switch (rel) {
          case RelationClass::less_separated:
            if (!(p < q)) return fail("members not separated: " + to_string(p) + " >= " + to_string(q));
            break;
          case RelationClass::greater_separated:
            if (!(p > q)) return fail("members not separated: " + to_string(p) + " <= " + to_string(q));
            break;
          case RelationClass::equal:
            if (!y.contains(p) || !x.contains(q)) return fail("equal cosets with distinct members");
            break;
          case RelationClass::proper_subset:
            if (!y.contains(p)) return fail("member " + to_string(p) + " of x outside y");
            break;
          case RelationClass::proper_superset:
            if (!x.contains(q)) return fail("member " + to_string(q) + " of y outside x");
            break;
        }
      }
      return ok(to_string(rel));
    }
    case AxiomId::T4: {
      if (!(lt_separated(e(v[0]), v[0]) && leq(v[1], v[2]))) return vacuous("hypothesis false");
      const ExternalNumber l = alg.mul(v[0], v[1]);
      const ExternalNumber r = alg.mul(v[0], v[2]);
      return leq(l, r) ? ok() : fail("xy = " + show(l) + " > xz = " + show(r));
    }
    case AxiomId::T6: {
      const auto& [x, y] = std::tie(v[0], v[1]);
      const ExternalNumber xy = alg.mul(x, y);
      const Verdict first = expect_equal(e(xy), alg.add(alg.mul(x, e(y)), alg.mul(y, e(x))), "e(xy) vs xe(y)+ye(x)");
      if (!first.pass) return first;
      return expect_equal(-xy, alg.mul(x, -y), "-(xy) vs x(-y)");
    }
    case AxiomId::T7: {
      const auto& [x, y, z] = std::tie(v[0], v[1], v[2]);
      const ExternalNumber raw = alg.add(alg.mul(e(x), y), alg.mul(e(x), z));
      if (!raw.is_magnitude()) return fail("e(x)y+e(x)z = " + show(raw) + " is not a magnitude");
      const Magnitude defect = distributivity_defect(x, y, z);
      return expect_equal(alg.add(alg.mul(x, y), alg.mul(x, z)),
                          alg.add(alg.mul(x, alg.add(y, z)), ExternalNumber(defect)), "xy+xz vs x(y+z)+D");
    }
    case AxiomId::T8: {
      const auto& [x, y, z] = std::tie(v[0], v[1], v[2]);
      if (!x.is_precise() || !y.is_precise() || !z.is_precise()) return vacuous("not all precise");
      const RatFun& a = x.rep();
      const RatFun& b = y.rep();
      if (alg.add(x, y) != ExternalNumber(a + b)) return fail("sum differs from field sum");
      if (alg.mul(x, y) != ExternalNumber(a * b)) return fail("product differs from field product");
      if (-x != ExternalNumber(-a)) return fail("negation differs");
      if (!b.is_zero() && inverse(y) != ExternalNumber(inverse(b))) return fail("inverse differs from field inverse");
      return expect_equal(alg.mul(x, alg.add(y, z)), alg.add(alg.mul(x, y), alg.mul(x, z)), "x(y+z) vs xy+xz");
    }
  }
  throw std::invalid_argument("unknown axiom id");
}

// --- shrinking ----------------------------------------------------------

struct Size {
  std::int64_t degree = 0;
  Integer height = 0;
  std::int64_t magnitude = 0;
};

Size size_of(const ExternalNumber& v) {
  Size s;
  const RatFun& r = v.rep();
  if (!r.is_zero()) {
    s.degree = r.num().degree().value() + r.den().degree().value();
    for (const Poly* p : {&r.num(), &r.den()}) {
      for (const auto& c : p->coefficients()) s.height += abs(c.get_num()) + abs(c.get_den());
    }
  }
  const Magnitude m = v.magnitude();
  s.magnitude = m.is_zero() ? 0 : m.is_all() ? (std::int64_t{1} << 20) : 1 + std::abs(m.index());
  return s;
}

bool no_larger(const Size& a, const Size& b) {
  return a.degree <= b.degree && a.height <= b.height && a.magnitude <= b.magnitude;
}

bool strictly_smaller(const Size& a, const Size& b) {
  return no_larger(a, b) && (a.degree < b.degree || a.height < b.height || a.magnitude < b.magnitude);
}

using RepMove = std::optional<RatFun> (*)(const RatFun&);

// Simplifications of a nonzero representative. Applied to one variable at a
// time, and also to all variables at once so that coupled values (y and -y,
// say) can shrink together.
constexpr RepMove kRepMoves[] = {
    // halve every coefficient, rounding toward zero
    [](const RatFun& r) -> std::optional<RatFun> {
      std::vector<Rational> halved(r.num().coefficients().begin(), r.num().coefficients().end());
      for (auto& c : halved) c = Rational(Integer(c.get_num() / 2), c.get_den());
      if (Poly(halved).is_zero()) return std::nullopt;
      return RatFun::normalize(Poly(std::move(halved)), r.den());
    },
    // exponents one step toward 0
    [](const RatFun& r) -> std::optional<RatFun> {
      const DegIndex d = degree(r);
      if (d == DegIndex(0)) return std::nullopt;
      return d > DegIndex(0) ? r / RatFun::x() : r * RatFun::x();
    },
    // drop the leading numerator term
    [](const RatFun& r) -> std::optional<RatFun> {
      const auto top = static_cast<std::size_t>(r.num().degree().value());
      return RatFun::normalize(r.num() - Poly::monomial(r.num().leading(), top), r.den());
    },
    // polynomial part of the numerator only
    [](const RatFun& r) -> std::optional<RatFun> {
      if (r.den() == Poly(1)) return std::nullopt;
      return RatFun(r.num());
    },
    // denominator reduced to its leading power of x
    [](const RatFun& r) -> std::optional<RatFun> {
      if (r.is_laurent()) return std::nullopt;
      return RatFun::normalize(r.num(), Poly::monomial(1, static_cast<std::size_t>(r.den().degree().value())));
    },
    [](const RatFun& r) -> std::optional<RatFun> { return truncate_above(r, degree(r) - 1); },
};

std::vector<ExternalNumber> shrink_candidates(const ExternalNumber& v) {
  std::vector<ExternalNumber> out;
  const RatFun& r = v.rep();
  const Magnitude m = v.magnitude();

  std::vector<Magnitude> mags{Magnitude::zero(), Magnitude::ox(0)};
  if (m.is_ox() && m.index() != 0) mags.push_back(Magnitude::ox(m.index() + (m.index() > 0 ? -1 : 1)));
  if (m.is_all()) mags.push_back(Magnitude::ox(-1));
  for (Magnitude cand : mags) out.push_back(ExternalNumber::make(r, cand));

  std::vector<RatFun> reps{RatFun(), RatFun(1), RatFun(-1), RatFun::x()};
  if (!r.is_zero()) {
    const auto coeffs = r.num().coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      reps.push_back(RatFun::normalize(r.num() - Poly::monomial(coeffs[i], i), r.den()));
    }
    for (RepMove move : kRepMoves)
      if (auto next = move(r)) reps.push_back(std::move(*next));
  }
  for (const auto& rep : reps) out.push_back(ExternalNumber::make(rep, m));
  return out;
}

// Every move applied to all variables simultaneously.
std::vector<std::vector<ExternalNumber>> joint_candidates(const std::vector<ExternalNumber>& binding) {
  std::vector<std::vector<ExternalNumber>> out;
  for (RepMove move : kRepMoves) {
    std::vector<ExternalNumber> next = binding;
    bool changed = false;
    for (auto& v : next) {
      if (v.rep().is_zero()) continue;
      if (auto r = move(v.rep())) {
        v = ExternalNumber::make(*r, v.magnitude());
        changed = true;
      }
    }
    if (changed) out.push_back(std::move(next));
  }
  return out;
}

bool binding_smaller(const std::vector<ExternalNumber>& cand, const std::vector<ExternalNumber>& base) {
  bool strict = false;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const Size a = size_of(cand[i]);
    const Size b = size_of(base[i]);
    if (!no_larger(a, b)) return false;
    strict = strict || strictly_smaller(a, b);
  }
  return strict;
}

Rng challenger_rng(AxiomId id, std::span<const ExternalNumber> binding) { return Rng(binding_hash(id, binding)); }

}  // namespace

std::span<const AxiomInfo> catalogue() { return kCatalogue; }

std::span<const AxiomInfo> appendix_axioms() { return std::span<const AxiomInfo>(kCatalogue).first(kAppendixCount); }

const AxiomInfo& info(AxiomId id) { return kCatalogue.at(static_cast<std::size_t>(id)); }

std::optional<AxiomId> parse_axiom_id(std::string_view code) {
  for (const auto& entry : kCatalogue)
    if (entry.code == code || entry.name == code) return entry.id;
  return std::nullopt;
}

CheckResult check_axiom(AxiomId id, std::span<const ExternalNumber> binding, const Faults& faults) {
  const AxiomInfo& meta = info(id);
  if (binding.size() != meta.arity) {
    throw std::invalid_argument(std::string(meta.code) + " expects " + std::to_string(meta.arity) + " variables, got " +
                                std::to_string(binding.size()));
  }
  CheckResult result{id, true, false, std::vector<ExternalNumber>(binding.begin(), binding.end()), {}};
  Rng rng = challenger_rng(id, binding);
  Verdict verdict;
  try {
    verdict = evaluate(id, Algebra{faults}, binding, rng);
  } catch (const std::domain_error& err) {
    verdict = fail(std::string("raised: ") + err.what());
  }
  result.pass = verdict.pass;
  result.vacuous = verdict.vacuous;
  result.detail = std::move(verdict.detail);
  return result;
}

std::vector<ExternalNumber> gen_binding(AxiomId id, Rng& rng, const GenParams& params) {
  auto any = [&] { return gen_external(rng, params); };
  auto positive_zeroless = [&] {
    ExternalNumber x = gen_zeroless(rng, params);
    return sign(x.rep()) < 0 ? -x : x;
  };
  auto ordered_pair = [&] {
    ExternalNumber y = any();
    ExternalNumber z = any();
    if (!leq(y, z)) std::swap(y, z);
    return std::pair{y, z};
  };
  auto coin = [&](double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; };

  switch (id) {
    case AxiomId::A8:
    case AxiomId::A9:
    case AxiomId::A21:
      return {gen_zeroless(rng, params)};
    case AxiomId::A10:
      return {gen_zeroless(rng, params), gen_zeroless(rng, params)};
    case AxiomId::A12: {
      ExternalNumber x = any();
      // Half the time, the same coset through another representative.
      if (coin(0.5)) return {x, ExternalNumber::make(gen_member(rng, params, x), x.magnitude())};
      return {x, any()};
    }
    case AxiomId::A13: {
      std::vector<ExternalNumber> v{any(), any(), any()};
      if (coin(0.75)) {
        for (int pass = 0; pass < 2; ++pass)
          for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (!leq(v[i], v[i + 1])) std::swap(v[i], v[i + 1]);
      }
      return v;
    }
    case AxiomId::A15:
    case AxiomId::T3: {
      auto [x, y] = ordered_pair();
      return {x, y, any()};
    }
    case AxiomId::A16: {
      ExternalNumber x = any();
      if (coin(0.6)) {
        const Magnitude below = gen_magnitude_below(rng, params, x.magnitude());
        return {x, ExternalNumber::make(gen_member(rng, params, x.magnitude()), below)};
      }
      return {x, any()};
    }
    case AxiomId::A17:
    case AxiomId::T4: {
      auto [y, z] = ordered_pair();
      return {positive_zeroless(), y, z};
    }
    case AxiomId::A18:
    case AxiomId::T5: {
      ExternalNumber y = coin(0.3) ? gen_magnitude_coset(rng, params) : positive_zeroless();
      ExternalNumber z = any();
      for (int attempt = 0; attempt < 32 && !leq(y, z); ++attempt) z = any();
      if (!leq(y, z)) z = y + abs(gen_ratfun(rng, params));
      return {any(), y, z};
    }
    case AxiomId::A22: {
      ExternalNumber x = any();
      ExternalNumber y = any();
      // Cancelling y and z are where the defect term matters.
      ExternalNumber z = coin(0.4) ? -y + gen_external(rng, params) : any();
      return {x, y, z};
    }
    case AxiomId::A27:
      return {};
    case AxiomId::A29: {
      ExternalNumber x = gen_magnitude_coset(rng, params);
      ExternalNumber y = gen_magnitude_coset(rng, params);
      for (int attempt = 0; attempt < 16 && x == y; ++attempt) y = gen_magnitude_coset(rng, params);
      if (!leq(x, y)) std::swap(x, y);
      return {x, y};
    }
    case AxiomId::T8:
      return {gen_precise(rng, params), gen_precise(rng, params), gen_precise(rng, params)};
    default: {
      std::vector<ExternalNumber> v;
      for (std::size_t i = 0; i < info(id).arity; ++i) v.push_back(any());
      return v;
    }
  }
}

CheckResult shrink(const CheckResult& failing, const Faults& faults) {
  if (failing.pass) throw std::invalid_argument("shrink: the check result passes");
  CheckResult best = check_axiom(failing.axiom, failing.binding, faults);
  if (best.pass) throw std::invalid_argument("shrink: the binding no longer fails");

  auto try_binding = [&](std::vector<ExternalNumber> trial) {
    if (!binding_smaller(trial, best.binding)) return false;
    CheckResult r = check_axiom(failing.axiom, trial, faults);
    if (r.pass) return false;
    best = std::move(r);
    return true;
  };

  bool improved = true;
  for (int round = 0; improved && round < 500; ++round) {
    improved = false;
    for (std::size_t i = 0; i < best.binding.size() && !improved; ++i) {
      for (const auto& cand : shrink_candidates(best.binding[i])) {
        std::vector<ExternalNumber> trial = best.binding;
        trial[i] = cand;
        if (try_binding(std::move(trial))) {
          improved = true;
          break;
        }
      }
    }
    if (improved) continue;
    for (auto& trial : joint_candidates(best.binding)) {
      if (try_binding(std::move(trial))) {
        improved = true;
        break;
      }
    }
  }
  return best;
}

bool AuditReport::all_passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const AxiomOutcome& o) { return o.failed == 0; });
}

AuditReport audit(const AuditConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("audit: trials must be >= 1");
  config.params.validate();

  std::vector<AxiomId> ids = config.axioms;
  if (ids.empty())
    for (const auto& entry : appendix_axioms()) ids.push_back(entry.id);

  AuditReport report;
  report.seed = config.seed;
  report.trials = config.trials;
  report.outcomes.resize(ids.size());

  auto run_one = [&](std::size_t slot) {
    const AxiomId id = ids[slot];
    AxiomOutcome outcome{id, 0, 0, std::nullopt};
    std::optional<CheckResult> first_failure;
    for (std::size_t t = 0; t < config.trials; ++t) {
      Rng rng(mix_seed(config.seed, static_cast<std::uint64_t>(id), t));
      const auto binding = gen_binding(id, rng, config.params);
      CheckResult r = check_axiom(id, binding, config.faults);
      if (r.pass) {
        ++outcome.passed;
      } else {
        ++outcome.failed;
        if (!first_failure) first_failure = std::move(r);
      }
    }
    if (first_failure) outcome.counterexample = shrink(*first_failure, config.faults);
    report.outcomes[slot] = std::move(outcome);
  };

  unsigned workers = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(ids.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < ids.size(); ++i) run_one(i);
    return report;
  }
  // Each slot is written by exactly one worker; order is fixed by `ids`.
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < ids.size(); i = next++) run_one(i);
    });
  }
  pool.clear();
  return report;
}

SolidWitnesses solid_witnesses() {
  return {ExternalNumber(), kOne, Magnitude::all(), kInfinitesimal};
}

}  // namespace extnum
