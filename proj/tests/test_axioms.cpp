#include <doctest.h>

#include <set>

#include "extnum/axioms.hpp"
#include "extnum/json_io.hpp"

using namespace extnum;

namespace {

const ExternalNumber kOmicron(kInfinitesimal);

ExternalNumber coset(const RatFun& a, Magnitude m) { return ExternalNumber::make(a, m); }

// Sum over the binding of numerator/denominator degrees, coefficient sizes and
// magnitude indices; shrinking may never raise any of them per element.
struct Measure {
  std::int64_t degree = 0;
  Rational height = 0;
  std::int64_t index = 0;
};

Measure measure(const ExternalNumber& v) {
  Measure m;
  const RatFun& r = v.rep();
  if (!r.is_zero()) m.degree = r.num().degree().value() + r.den().degree().value();
  for (const auto& c : r.num().coefficients()) m.height += abs(c);
  for (const auto& c : r.den().coefficients()) m.height += abs(c);
  const Magnitude mag = v.magnitude();
  m.index = mag.is_zero() ? 0 : mag.is_all() ? 1 << 20 : 1 + std::abs(mag.index());
  return m;
}

}  // namespace

TEST_CASE("catalogue") {
  CHECK(catalogue().size() == 37);
  REQUIRE(appendix_axioms().size() == 29);
  std::set<std::string_view> codes;
  for (const auto& a : catalogue()) codes.insert(a.code);
  CHECK(codes.size() == 37);
  CHECK(info(AxiomId::A22).name == "distributivity");
  CHECK(info(AxiomId::A22).arity == 3);
  CHECK(parse_axiom_id("A22") == AxiomId::A22);
  CHECK(parse_axiom_id("distributivity") == AxiomId::A22);
  CHECK(parse_axiom_id("T8") == AxiomId::T8);
  CHECK_FALSE(parse_axiom_id("A30").has_value());
  CHECK_FALSE(parse_axiom_id("").has_value());
}

TEST_CASE("check_axiom examples") {
  const std::vector<ExternalNumber> a5{coset(1, kInfinitesimal), coset(-1, kBounded)};
  CHECK(check_axiom(AxiomId::A5, a5).pass);
  CHECK((a5[0] + a5[1]).magnitude() == kBounded);

  const std::vector<ExternalNumber> a19{kOmicron, ExternalNumber(RatFun::x())};
  CHECK(check_axiom(AxiomId::A19, a19).pass);
  CHECK(kOmicron * a19[1] == ExternalNumber(kBounded));

  const std::vector<ExternalNumber> a22{kOmicron, 1, -1};
  CHECK(check_axiom(AxiomId::A22, a22).pass);
  // the same binding fails once the defect is dropped
  Faults faults;
  faults.omit_distributivity_defect = true;
  const CheckResult broken = check_axiom(AxiomId::A22, a22, faults);
  CHECK_FALSE(broken.pass);
  CHECK(broken.binding == a22);
}

TEST_CASE("check_axiom rejects a binding of the wrong size") {
  const std::vector<ExternalNumber> two{1, 2};
  CHECK_THROWS_AS(check_axiom(AxiomId::A22, two), std::invalid_argument);
  CHECK_THROWS_AS(check_axiom(AxiomId::A27, two), std::invalid_argument);
}

TEST_CASE("check_axiom reports vacuous passes") {
  const std::vector<ExternalNumber> b{kOmicron};
  const CheckResult r = check_axiom(AxiomId::A21, b);
  CHECK(r.pass);
  CHECK(r.vacuous);
}

TEST_CASE("generation is deterministic") {
  const GenParams params;
  Rng a(99);
  Rng b(99);
  for (int i = 0; i < 50; ++i) CHECK(gen_external(a, params) == gen_external(b, params));
  CHECK(mix_seed(7, 1, 2) == mix_seed(7, 1, 2));
  CHECK(mix_seed(7, 1, 2) != mix_seed(7, 2, 1));
}

TEST_CASE("generation honours the tag weights") {
  GenParams all;
  all.p_zero = 0;
  all.p_ox = 0;
  all.p_all = 1;
  GenParams zero;
  zero.p_zero = 1;
  zero.p_ox = 0;
  zero.p_all = 0;
  zero.max_degree = 0;
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    CHECK(gen_external(rng, all) == ExternalNumber(Magnitude::all()));
    const ExternalNumber p = gen_external(rng, zero);
    CHECK(p.is_precise());
    CHECK(degree(p.rep()) <= DegIndex(0));
    CHECK(p.rep().den() == Poly(1));
  }
}

TEST_CASE("generation parameters are validated") {
  GenParams bad;
  bad.p_zero = 0.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  GenParams negative;
  negative.max_degree = -1;
  CHECK_THROWS_AS(negative.validate(), std::invalid_argument);
  GenParams range;
  range.min_index = 3;
  range.max_index = 2;
  CHECK_THROWS_AS(range.validate(), std::invalid_argument);
}

TEST_CASE("guarded generation meets the guards") {
  const GenParams params;
  Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    for (const auto& v : gen_binding(AxiomId::A10, rng, params)) CHECK(v.is_zeroless());
    CHECK(gen_binding(AxiomId::A27, rng, params).empty());
    const auto sep = gen_binding(AxiomId::A29, rng, params);
    REQUIRE(sep.size() == 2);
    CHECK(sep[0].is_magnitude());
    CHECK(sep[1].is_magnitude());
  }
}

TEST_CASE("audit passes every axiom and every derived fact") {
  AuditConfig config;
  config.seed = 3;
  config.trials = 200;
  const AuditReport report = audit(config);
  CHECK(report.outcomes.size() == 29);
  CHECK(report.all_passed());
  for (const auto& o : report.outcomes) CHECK(o.passed == 200);

  for (const auto& a : catalogue()) config.axioms.push_back(a.id);
  const AuditReport full = audit(config);
  CHECK(full.outcomes.size() == 37);
  for (const auto& o : full.outcomes) {
    INFO(info(o.id).code);
    CHECK(o.failed == 0);
  }
}

TEST_CASE("audit is deterministic and independent of the thread count") {
  AuditConfig config;
  config.seed = 17;
  config.trials = 50;
  config.threads = 1;
  const std::string one = to_json(audit(config)).dump();
  config.threads = 4;
  const std::string four = to_json(audit(config)).dump();
  CHECK(one == four);
  CHECK(one == to_json(audit(config)).dump());
}

TEST_CASE("audit rejects zero trials") {
  AuditConfig config;
  config.trials = 0;
  CHECK_THROWS_AS(audit(config), std::invalid_argument);
}

TEST_CASE("existence axioms and the solid witnesses") {
  AuditConfig config;
  config.seed = 7;
  config.trials = 100;
  config.axioms = {AxiomId::A24, AxiomId::A25, AxiomId::A26};
  const AuditReport report = audit(config);
  REQUIRE(report.outcomes.size() == 3);
  CHECK(report.outcomes[0].id == AxiomId::A24);
  CHECK(report.all_passed());

  const SolidWitnesses w = solid_witnesses();
  CHECK(w.minimal_neutral == ExternalNumber());
  CHECK(w.minimal_unity == ExternalNumber(1));
  CHECK(w.maximal == Magnitude::all());
  CHECK(w.nontrivial == kInfinitesimal);
  Rng rng(8);
  const GenParams params;
  for (int i = 0; i < 100; ++i) {
    const ExternalNumber a = gen_external(rng, params);
    CHECK(w.minimal_neutral + a == a);
    CHECK(a.magnitude() + w.maximal == w.maximal);
  }
}

TEST_CASE("every injected fault is caught with a shrunk counterexample") {
  struct Case {
    Faults faults;
    AxiomId expected;
  };
  std::vector<Case> cases(3);
  cases[0].faults.drop_product_ab = true;
  cases[0].expected = AxiomId::A19;
  cases[1].faults.add_ignores_magnitude_sum = true;
  cases[1].expected = AxiomId::A2;
  cases[2].faults.omit_distributivity_defect = true;
  cases[2].expected = AxiomId::A22;

  for (const auto& c : cases) {
    AuditConfig config;
    config.seed = 7;
    config.trials = 1000;
    config.faults = c.faults;
    config.axioms = {c.expected};
    const AuditReport report = audit(config);
    REQUIRE(report.outcomes.size() == 1);
    CHECK(report.outcomes[0].failed > 0);
    REQUIRE(report.outcomes[0].counterexample.has_value());
    const CheckResult& cx = *report.outcomes[0].counterexample;
    CHECK_FALSE(cx.pass);
    CHECK_FALSE(check_axiom(cx.axiom, cx.binding, c.faults).pass);
    CHECK(check_axiom(cx.axiom, cx.binding).pass);
  }
}

TEST_CASE("omitting the defect shrinks to a magnitude times cancelling constants") {
  Faults faults;
  faults.omit_distributivity_defect = true;
  const std::vector<ExternalNumber> big{coset(RatFun::x(), Magnitude::ox(3)),
                                        coset(RatFun::x_pow(4) * RatFun(7), Magnitude::zero()),
                                        coset(RatFun::x_pow(4) * RatFun(-7), Magnitude::zero())};
  const CheckResult failing = check_axiom(AxiomId::A22, big, faults);
  REQUIRE_FALSE(failing.pass);
  const CheckResult small = shrink(failing, faults);
  REQUIRE(small.binding.size() == 3);
  CHECK(small.binding[0].is_magnitude());
  CHECK(small.binding[1].is_precise());
  CHECK(small.binding[2] == -small.binding[1]);
  CHECK(degree(small.binding[1].rep()) == DegIndex(0));
}

TEST_CASE("shrinking never grows an element") {
  Faults faults;
  faults.add_ignores_magnitude_sum = true;
  const GenParams params;
  Rng rng(41);
  int shrunk = 0;
  for (int i = 0; i < 300 && shrunk < 30; ++i) {
    const auto binding = gen_binding(AxiomId::A22, rng, params);
    const CheckResult r = check_axiom(AxiomId::A22, binding, faults);
    if (r.pass) continue;
    ++shrunk;
    const CheckResult s = shrink(r, faults);
    CHECK_FALSE(s.pass);
    for (std::size_t k = 0; k < binding.size(); ++k) {
      const Measure before = measure(binding[k]);
      const Measure after = measure(s.binding[k]);
      CHECK(after.degree <= before.degree);
      CHECK(after.height <= before.height);
      CHECK(after.index <= before.index);
    }
  }
  CHECK(shrunk > 0);
}

TEST_CASE("shrinking a passing result is an error") {
  const std::vector<ExternalNumber> b{kOmicron, 1, -1};
  const CheckResult ok = check_axiom(AxiomId::A22, b);
  CHECK_THROWS_AS(shrink(ok), std::invalid_argument);
  CheckResult lying = ok;
  lying.pass = false;
  CHECK_THROWS_AS(shrink(lying), std::invalid_argument);
}

TEST_CASE("report JSON layout") {
  AuditConfig config;
  config.seed = 7;
  config.trials = 10;
  config.axioms = {AxiomId::A22};
  const Json j = to_json(audit(config));
  CHECK(j["seed"] == 7);
  CHECK(j["trials"] == 10);
  REQUIRE(j["axioms"].size() == 1);
  CHECK(j["axioms"][0]["id"] == "A22");
  CHECK(j["axioms"][0]["name"] == "distributivity");
  CHECK(j["axioms"][0]["pass"] == 10);
  CHECK(j["axioms"][0]["fail"] == 0);
  CHECK(j["axioms"][0]["counterexample"].is_null());

  const Json v = to_json(coset(RatFun::x(), kBounded));
  CHECK(v.dump() == R"({"rep":"x","mag":{"kind":"ox","n":0}})");
  CHECK(to_json(ExternalNumber()).dump() == R"({"rep":"0","mag":{"kind":"zero"}})");
}
