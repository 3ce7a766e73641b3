#ifndef EXTNUM_JSON_IO_HPP
#define EXTNUM_JSON_IO_HPP

// JSON forms of values and audit reports. Keys are emitted in a fixed order
// so that equal inputs give byte-identical output.

#include <json.hpp>

#include "extnum/axioms.hpp"
#include "extnum/external.hpp"

namespace extnum {

using Json = nlohmann::ordered_json;

/// {"kind": "zero"|"ox"|"all", "n": int}; "n" only for "ox".
Json to_json(Magnitude mag);
/// {"rep": "<expression>", "mag": {...}}.
Json to_json(const ExternalNumber& value);
/// {"binding": [...], "detail": "..."}.
Json to_json(const CheckResult& result);
/// {"seed": u64, "trials": n, "axioms": [{"id", "name", "pass", "fail", "counterexample"}]}.
Json to_json(const AuditReport& report);

}  // namespace extnum

#endif  // EXTNUM_JSON_IO_HPP
