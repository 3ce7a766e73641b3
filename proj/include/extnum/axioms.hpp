#ifndef EXTNUM_AXIOMS_HPP
#define EXTNUM_AXIOMS_HPP

// Executable catalogue of the axioms of a solid, checked on random external
// numbers.
//
// A1-A5    additive assembly        A6-A10   multiplicative assembly
// A11-A18  order                    A19-A23  addition/multiplication
// A24-A29  existence of special elements
//
// T1-T8 are derived facts (representative independence, trichotomy, the
// order compatibility theorem, the product magnitude, the distributivity
// defect, the precise subfield). They are selectable by id but not part of
// the default audit.
//
// Universal quantifiers inside an axiom body range over an infinite domain;
// they are exercised with a handful of challengers derived deterministically
// from the binding. Existential claims are discharged by constructing the
// witness.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "extnum/external.hpp"
#include "extnum/generate.hpp"

namespace extnum {

enum class AxiomId : std::uint8_t {
  A1, A2, A3, A4, A5, A6, A7, A8, A9, A10,
  A11, A12, A13, A14, A15, A16, A17, A18, A19, A20,
  A21, A22, A23, A24, A25, A26, A27, A28, A29,
  T1, T2, T3, T4, T5, T6, T7, T8,
};

struct AxiomInfo {
  AxiomId id;
  std::string_view code;       // "A22"
  std::string_view name;       // "distributivity"
  std::size_t arity;           // number of universally bound variables
  std::string_view statement;  // first-order statement
};

/// All 37 entries, A1..A29 then T1..T8.
std::span<const AxiomInfo> catalogue();
/// A1..A29 only.
std::span<const AxiomInfo> appendix_axioms();
const AxiomInfo& info(AxiomId id);
std::optional<AxiomId> parse_axiom_id(std::string_view code);

/// Seeded mutations of the arithmetic, used to check that the audit has
/// teeth.
struct Faults {
  bool drop_product_ab = false;          // coset product without the AB term
  bool add_ignores_magnitude_sum = false;  // sum keeps only the left magnitude
  bool omit_distributivity_defect = false;

  bool any() const { return drop_product_ab || add_ignores_magnitude_sum || omit_distributivity_defect; }
};

struct CheckResult {
  AxiomId axiom;
  bool pass = true;
  bool vacuous = false;  // a guard or hypothesis was not met
  std::vector<ExternalNumber> binding;
  std::string detail;
};

/// Evaluates one axiom on a binding. Throws std::invalid_argument when the
/// binding size differs from the arity.
CheckResult check_axiom(AxiomId id, std::span<const ExternalNumber> binding, const Faults& faults = {});

/// A binding for the axiom, drawn so that its guards and hypotheses hold
/// often enough to matter.
std::vector<ExternalNumber> gen_binding(AxiomId id, Rng& rng, const GenParams& params);

/// Greedily simplifies a failing binding: lower degrees, smaller
/// coefficients, magnitude indices nearer 0. No component ever grows.
/// Throws std::invalid_argument if the input does not fail.
CheckResult shrink(const CheckResult& failing, const Faults& faults = {});

struct AuditConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  GenParams params;
  std::vector<AxiomId> axioms;  // empty: A1..A29
  Faults faults;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct AxiomOutcome {
  AxiomId id;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<CheckResult> counterexample;  // shrunk first failure
};

struct AuditReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<AxiomOutcome> outcomes;  // in the order requested

  bool all_passed() const;
};

/// Throws std::invalid_argument for trials == 0 or bad parameters.
AuditReport audit(const AuditConfig& config);

struct SolidWitnesses {
  ExternalNumber minimal_neutral;  // m = {0}
  ExternalNumber minimal_unity;    // u = {1}
  Magnitude maximal;               // M = F
  Magnitude nontrivial;            // neither {0} nor F
};

SolidWitnesses solid_witnesses();

}  // namespace extnum

#endif  // EXTNUM_AXIOMS_HPP
