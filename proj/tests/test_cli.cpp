#include <doctest.h>

#include <sstream>

#include "extnum/cli.hpp"

using namespace extnum;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval") {
  CHECK(run({"eval", "u(x+O(1))"}).out == "1 + O(x^-1)\n");
  CHECK(run({"eval", "1/(x+O(1))"}).out == "1/x + O(x^-2)\n");
  CHECK(run({"eval", "O(x^-1)*(1-1)"}).out == "{0}\n");
  CHECK(run({"eval", "x", "--json"}).out == "{\"rep\":\"x\",\"mag\":{\"kind\":\"zero\"}}\n");

  const Run bad = run({"eval", "1/O(1)"});
  CHECK(bad.code == kExitEvalError);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("DivisionByMagnitude") != std::string::npos);

  const Run syntax = run({"eval", "x^"});
  CHECK(syntax.code == kExitEvalError);
  CHECK(syntax.err.find("ParseError") != std::string::npos);
  CHECK(syntax.err.find("offset 2") != std::string::npos);
}

TEST_CASE("cmp") {
  CHECK(run({"cmp", "1+O(x^-1)", "2+O(x^-1)"}).out == "< (left <= right: true, right <= left: false)\n");
  CHECK(run({"cmp", "1+O(x^-1)", "O(1)"}).out == "⊂ (left <= right: true, right <= left: false)\n");
  CHECK(run({"cmp", "O(1)", "1+O(x^-1)"}).out == "⊃ (left <= right: false, right <= left: true)\n");
  CHECK(run({"cmp", "x", "1000000"}).out.rfind(">", 0) == 0);
  CHECK(run({"cmp", "x+1", "1+x"}).out == "= (left <= right: true, right <= left: true)\n");
  CHECK(run({"cmp", "1", "2", "--json"}).out ==
        "{\"relation\":\"<\",\"left_leq_right\":true,\"right_leq_left\":false}\n");
  CHECK(run({"cmp", "1", "u(O(1))"}).code == kExitEvalError);
}

TEST_CASE("audit") {
  const Run text = run({"audit", "--seed", "7", "--trials", "50", "--threads", "2"});
  CHECK(text.code == kExitOk);
  CHECK(text.out.find("29/29 axioms passed (seed 7, 50 trials)") != std::string::npos);

  const Run j1 = run({"audit", "--seed", "7", "--trials", "50", "--json"});
  const Run j2 = run({"audit", "--seed", "7", "--trials", "50", "--json", "--threads", "1"});
  CHECK(j1.code == kExitOk);
  CHECK(j1.out == j2.out);
  CHECK(j1.out.rfind("{\n  \"seed\": 7,", 0) == 0);

  const Run filtered = run({"audit", "--trials", "20", "--axiom", "A24,A25", "--axiom", "A26"});
  CHECK(filtered.out.find("3/3 axioms passed") != std::string::npos);

  const Run faulty = run({"audit", "--seed", "7", "--trials", "1000", "--axiom", "A22", "--fault", "omit-defect"});
  CHECK(faulty.code == kExitAuditFailure);
  CHECK(faulty.out.find("counterexample:") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"eval", "x", "--bogus"}).code == kExitUsage);
  CHECK(run({"eval"}).code == kExitUsage);
  CHECK(run({"audit", "--trials", "0"}).code == kExitUsage);
  CHECK(run({"audit", "--axiom", "A99"}).code == kExitUsage);
  CHECK(run({"audit", "--fault", "nonsense"}).code == kExitUsage);
  const Run help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("audit") != std::string::npos);
}

TEST_CASE("repl") {
  const Run r = run({"repl"}, "x+O(1)\n_*_\n\n1/O(1)\n_\nquit\nx\n");
  CHECK(r.code == kExitOk);
  CHECK(r.out == "x + O(1)\nx^2 + O(x^1)\nx^2 + O(x^1)\n");
  CHECK(r.err.find("DivisionByMagnitude") != std::string::npos);

  const Run fresh = run({"repl"}, "_\n");
  CHECK(fresh.out.empty());
  CHECK(fresh.err.find("no previous value") != std::string::npos);
}
