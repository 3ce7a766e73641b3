#include "extnum/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>

#include "extnum/axioms.hpp"
#include "extnum/json_io.hpp"
#include "extnum/parser.hpp"

namespace extnum {

namespace {

void report_error(std::ostream& err, std::string_view input, const EvalError& e) {
  err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
  if (!input.empty()) {
    const Span span = e.span();
    err << "  " << input << "\n  " << std::string(span.begin, ' ')
        << std::string(std::max<std::size_t>(1, span.end - span.begin), '^') << "\n";
  }
}

// Parses and evaluates, reporting any failure on `err`.
std::optional<ExternalNumber> evaluate_reported(std::string_view text, std::ostream& err, bool repl = false,
                                                const ExternalNumber* last = nullptr) {
  try {
    return eval(*parse(text, ParseOptions{repl}), last);
  } catch (const EvalError& e) {
    report_error(err, text, e);
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return std::nullopt;
}

int cmd_eval(const std::string& text, bool json, std::ostream& out, std::ostream& err) {
  const auto value = evaluate_reported(text, err);
  if (!value) return kExitEvalError;
  if (json) {
    out << to_json(*value).dump() << "\n";
  } else {
    out << to_string(*value) << "\n";
  }
  return kExitOk;
}

int cmd_cmp(const std::string& lhs_text, const std::string& rhs_text, bool json, std::ostream& out,
            std::ostream& err) {
  const auto lhs = evaluate_reported(lhs_text, err);
  if (!lhs) return kExitEvalError;
  const auto rhs = evaluate_reported(rhs_text, err);
  if (!rhs) return kExitEvalError;
  const RelationClass rel = classify(*lhs, *rhs);
  const bool forward = leq(*lhs, *rhs);
  const bool backward = leq(*rhs, *lhs);
  if (json) {
    Json j;
    j["relation"] = to_string(rel);
    j["left_leq_right"] = forward;
    j["right_leq_left"] = backward;
    out << j.dump() << "\n";
  } else {
    out << to_string(rel) << " (left <= right: " << (forward ? "true" : "false")
        << ", right <= left: " << (backward ? "true" : "false") << ")\n";
  }
  return kExitOk;
}

int cmd_audit(const AuditConfig& config, bool json, std::ostream& out) {
  const AuditReport report = audit(config);
  if (json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    std::size_t clean = 0;
    for (const auto& outcome : report.outcomes) {
      const AxiomInfo& meta = info(outcome.id);
      out << meta.code << std::string(4 - std::min<std::size_t>(3, meta.code.size()), ' ') << meta.name
          << std::string(30 - std::min<std::size_t>(29, meta.name.size()), ' ') << "pass " << outcome.passed
          << "  fail " << outcome.failed << "\n";
      if (outcome.counterexample) {
        out << "    counterexample:";
        for (const auto& v : outcome.counterexample->binding) out << " [" << to_string(v) << "]";
        out << "\n    " << outcome.counterexample->detail << "\n";
      } else {
        ++clean;
      }
    }
    out << clean << "/" << report.outcomes.size() << " axioms passed (seed " << report.seed << ", "
        << report.trials << " trials)\n";
  }
  return report.all_passed() ? kExitOk : kExitAuditFailure;
}

int cmd_repl(std::istream& in, std::ostream& out, std::ostream& err) {
  std::optional<ExternalNumber> last;
  std::string line;
  err << "extnum> " << std::flush;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos) {
      const std::string_view text = std::string_view(line).substr(first);
      if (text == "quit" || text == "exit" || text == ":q") break;
      const auto value = evaluate_reported(text, err, true, last ? &*last : nullptr);
      if (value) {
        out << to_string(*value) << "\n";
        last = value;
      }
    }
    err << "extnum> " << std::flush;
  }
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic on external numbers (cosets of magnitudes in Q(x))", "extnum"};
  app.require_subcommand(1);

  bool json = false;
  std::string expr_text;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression");
  eval_cmd->add_option("expr", expr_text, "Expression, e.g. \"1/(x+O(1))\"")->required();
  eval_cmd->add_flag("--json", json, "Emit the JSON value form");

  std::string lhs_text;
  std::string rhs_text;
  auto* cmp_cmd = app.add_subcommand("cmp", "Compare two expressions");
  cmp_cmd->add_option("left", lhs_text)->required();
  cmp_cmd->add_option("right", rhs_text)->required();
  cmp_cmd->add_flag("--json", json, "Emit JSON");

  AuditConfig config;
  config.trials = 1000;
  std::vector<std::string> axiom_codes;
  std::vector<std::string> faults;
  auto* audit_cmd = app.add_subcommand("audit", "Check the axioms on random instances");
  audit_cmd->add_option("--seed", config.seed, "Master seed")->capture_default_str();
  audit_cmd->add_option("--trials", config.trials, "Trials per axiom")->capture_default_str();
  audit_cmd->add_option("--axiom", axiom_codes, "Axiom ids, e.g. A22 or A1,A2 (default A1..A29)")->delimiter(',');
  audit_cmd->add_option("--threads", config.threads, "Worker threads (0: all cores)");
  audit_cmd->add_option("--fault", faults, "Mutate the arithmetic: drop-ab, add-ignores-sum, omit-defect")
      ->check(CLI::IsMember({"drop-ab", "add-ignores-sum", "omit-defect"}))
      ->delimiter(',');
  audit_cmd->add_flag("--json", json, "Emit the JSON report");

  auto* repl_cmd = app.add_subcommand("repl", "Interactive evaluator; _ is the previous value");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (eval_cmd->parsed()) return cmd_eval(expr_text, json, out, err);
  if (cmp_cmd->parsed()) return cmd_cmp(lhs_text, rhs_text, json, out, err);
  if (repl_cmd->parsed()) return cmd_repl(in, out, err);

  for (const auto& code : axiom_codes) {
    const auto id = parse_axiom_id(code);
    if (!id) {
      err << "error: unknown axiom id '" << code << "'\n" << audit_cmd->help();
      return kExitUsage;
    }
    config.axioms.push_back(*id);
  }
  for (const auto& f : faults) {
    if (f == "drop-ab") config.faults.drop_product_ab = true;
    if (f == "add-ignores-sum") config.faults.add_ignores_magnitude_sum = true;
    if (f == "omit-defect") config.faults.omit_distributivity_defect = true;
  }
  if (config.trials == 0) {
    err << "error: --trials must be at least 1\n";
    return kExitUsage;
  }
  return cmd_audit(config, json, out);
}

}  // namespace extnum
