#include "extnum/json_io.hpp"

namespace extnum {

Json to_json(Magnitude mag) {
  Json out;
  switch (mag.kind()) {
    case Magnitude::Kind::zero:
      out["kind"] = "zero";
      break;
    case Magnitude::Kind::ox:
      out["kind"] = "ox";
      out["n"] = mag.index();
      break;
    case Magnitude::Kind::all:
      out["kind"] = "all";
      break;
  }
  return out;
}

Json to_json(const ExternalNumber& value) {
  Json out;
  out["rep"] = to_string(value.rep());
  out["mag"] = to_json(value.magnitude());
  return out;
}

Json to_json(const CheckResult& result) {
  Json out;
  Json binding = Json::array();
  for (const auto& v : result.binding) binding.push_back(to_json(v));
  out["binding"] = std::move(binding);
  out["detail"] = result.detail;
  return out;
}

Json to_json(const AuditReport& report) {
  Json out;
  out["seed"] = report.seed;
  out["trials"] = report.trials;
  Json axioms = Json::array();
  for (const auto& outcome : report.outcomes) {
    const AxiomInfo& meta = info(outcome.id);
    Json entry;
    entry["id"] = std::string(meta.code);
    entry["name"] = std::string(meta.name);
    entry["pass"] = outcome.passed;
    entry["fail"] = outcome.failed;
    entry["counterexample"] = outcome.counterexample ? to_json(*outcome.counterexample) : Json(nullptr);
    axioms.push_back(std::move(entry));
  }
  out["axioms"] = std::move(axioms);
  return out;
}

}  // namespace extnum
