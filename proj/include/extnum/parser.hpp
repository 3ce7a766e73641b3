#ifndef EXTNUM_PARSER_HPP
#define EXTNUM_PARSER_HPP

// Surface syntax for external numbers.
//
//   expr   := term (("+" | "-") term)*
//   term   := factor (("*" | "/") factor)*
//   factor := "-"* atom ("^" int)?
//   atom   := integer | "x" | "O(" ("1" | "x" ("^" int)?) ")" | "all" | "F" | "{0}"
//           | "e(" expr ")" | "u(" expr ")" | "inv(" expr ")" | "(" expr ")" | "_"
//
// "/" is always coset division; on precise operands it is field division, so
// 1/2 and (x+1)/(x-1) read as expected. "_" (the previous REPL value) is only
// accepted when the caller enables it.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "extnum/external.hpp"

namespace extnum {

/// Half-open character range [begin, end) of the input.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class EvalError : public std::runtime_error {
 public:
  enum class Kind { parse_error, division_by_magnitude, unity_of_magnitude, zero_denominator };

  EvalError(Kind kind, Span span, const std::string& message)
      : std::runtime_error(message), kind_(kind), span_(span) {}

  Kind kind() const { return kind_; }
  Span span() const { return span_; }

 private:
  Kind kind_;
  Span span_;
};

std::string_view to_string(EvalError::Kind kind);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct IntegerLit {
  Integer value;
};
struct VarX {};
struct MagLit {
  Magnitude mag;
};
struct LastValue {};
struct Pow {
  ExprPtr base;
  std::int64_t exponent;
};
struct Neg {
  ExprPtr operand;
};
enum class BinaryOp { add, sub, mul, div };
struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
enum class Operator { unity, inverse, magnitude };
struct Apply {
  Operator fn;
  ExprPtr arg;
};

struct Expr {
  std::variant<IntegerLit, VarX, MagLit, LastValue, Pow, Neg, Binary, Apply> node;
  Span span;
};

struct ParseOptions {
  bool allow_last_value = false;
};

/// Throws EvalError{parse_error} with the offending location.
ExprPtr parse(std::string_view text, ParseOptions options = {});

/// Throws EvalError for division by a magnitude, u of a magnitude, or
/// division by {0}. `last` backs the "_" atom.
ExternalNumber eval(const Expr& expr, const ExternalNumber* last = nullptr);

/// parse then eval.
ExternalNumber evaluate(std::string_view text);

/// Prefix form for debugging and tests, e.g. "(* O(x^-1) (- 1 1))".
std::string to_sexpr(const Expr& expr);

}  // namespace extnum

#endif  // EXTNUM_PARSER_HPP
