#include "extnum/parser.hpp"

#include <cctype>
#include <charconv>

namespace extnum {

namespace {

constexpr int kMaxDepth = 200;
constexpr std::int64_t kMaxExponent = 4096;
constexpr std::int64_t kMaxIndex = 100000;
constexpr std::size_t kMaxNodes = 5000;

class Parser {
 public:
  Parser(std::string_view text, ParseOptions options) : text_(text), options_(options) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& message) const {
    const std::size_t end = pos_ < text_.size() ? pos_ + 1 : pos_;
    throw EvalError(EvalError::Kind::parse_error, Span{pos_, end},
                    message + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  std::string_view word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::int64_t signed_int(std::int64_t limit) {
    skip_ws();
    const bool negative = accept('-');
    skip_ws();
    if (!at_digit()) error("expected integer");
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || value > limit) {
      pos_ = start;
      error("integer out of range");
    }
    return negative ? -value : value;
  }

  ExprPtr make(decltype(Expr::node) node, std::size_t begin) {
    if (++nodes_ > kMaxNodes) error("expression too large");
    return std::make_shared<const Expr>(Expr{std::move(node), Span{begin, pos_}});
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth) parser.error("expression nested too deeply");
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  ExprPtr expr() {
    DepthGuard guard(*this);
    skip_ws();
    const std::size_t begin = pos_;
    ExprPtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make(Binary{BinaryOp::add, lhs, term()}, begin);
      } else if (accept('-')) {
        lhs = make(Binary{BinaryOp::sub, lhs, term()}, begin);
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    skip_ws();
    const std::size_t begin = pos_;
    ExprPtr lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = make(Binary{BinaryOp::mul, lhs, factor()}, begin);
      } else if (accept('/')) {
        lhs = make(Binary{BinaryOp::div, lhs, factor()}, begin);
      } else {
        return lhs;
      }
    }
  }

  ExprPtr factor() {
    DepthGuard guard(*this);
    skip_ws();
    const std::size_t begin = pos_;
    if (accept('-')) return make(Neg{factor()}, begin);
    ExprPtr base = atom();
    if (accept('^')) return make(Pow{base, signed_int(kMaxExponent)}, begin);
    return base;
  }

  ExprPtr atom() {
    skip_ws();
    const std::size_t begin = pos_;
    if (pos_ >= text_.size()) error("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (at_digit()) ++pos_;
      return make(IntegerLit{Integer(std::string(text_.substr(begin, pos_ - begin)), 10)}, begin);
    }
    if (c == '(') {
      ++pos_;
      ExprPtr inner = expr();
      expect(')');
      return inner;
    }
    if (c == '{') {
      ++pos_;
      expect('0');
      expect('}');
      return make(MagLit{Magnitude::zero()}, begin);
    }
    const std::string_view name = word();
    if (name.empty()) error("unexpected '" + std::string(1, c) + "'");
    if (name == "x") return make(VarX{}, begin);
    if (name == "all" || name == "F") return make(MagLit{Magnitude::all()}, begin);
    if (name == "_") {
      if (!options_.allow_last_value) {
        pos_ = begin;
        error("'_' is only available in the REPL");
      }
      return make(LastValue{}, begin);
    }
    if (name == "O") return big_o(begin);
    Operator fn{};
    if (name == "e") {
      fn = Operator::magnitude;
    } else if (name == "u") {
      fn = Operator::unity;
    } else if (name == "inv") {
      fn = Operator::inverse;
    } else {
      pos_ = begin;
      error("unknown name '" + std::string(name) + "'");
    }
    expect('(');
    ExprPtr arg = expr();
    expect(')');
    return make(Apply{fn, arg}, begin);
  }

  ExprPtr big_o(std::size_t begin) {
    expect('(');
    skip_ws();
    Magnitude mag;
    if (accept('1')) {
      mag = Magnitude::ox(0);
    } else if (word() == "x") {
      mag = accept('^') ? Magnitude::ox(signed_int(kMaxIndex)) : Magnitude::ox(1);
    } else {
      error("expected '1' or 'x' inside O(...)");
    }
    expect(')');
    return make(MagLit{mag}, begin);
  }

  std::string_view text_;
  ParseOptions options_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  std::size_t nodes_ = 0;
};

[[noreturn]] void raise_divisor(const ExternalNumber& divisor, Span span) {
  if (divisor == ExternalNumber()) throw EvalError(EvalError::Kind::zero_denominator, span, "division by zero");
  throw EvalError(EvalError::Kind::division_by_magnitude, span,
                  "division by non-zeroless element " + to_string(divisor));
}

ExternalNumber eval_node(const Expr& expr, const ExternalNumber* last);

struct Evaluator {
  const Expr& self;
  const ExternalNumber* last;

  ExternalNumber operator()(const IntegerLit& lit) const { return RatFun(Rational(lit.value)); }
  ExternalNumber operator()(const VarX&) const { return RatFun::x(); }
  ExternalNumber operator()(const MagLit& lit) const { return ExternalNumber(lit.mag); }
  ExternalNumber operator()(const LastValue&) const {
    if (last == nullptr) throw EvalError(EvalError::Kind::parse_error, self.span, "no previous value");
    return *last;
  }
  ExternalNumber operator()(const Pow& p) const {
    const ExternalNumber base = eval_node(*p.base, last);
    if (base.is_magnitude() && p.exponent < 0) raise_divisor(base, self.span);
    if (base.is_magnitude() && p.exponent == 0)
      throw EvalError(EvalError::Kind::unity_of_magnitude, self.span, "unity undefined for magnitudes");
    return pow(base, p.exponent);
  }
  ExternalNumber operator()(const Neg& n) const { return -eval_node(*n.operand, last); }
  ExternalNumber operator()(const Binary& b) const {
    const ExternalNumber lhs = eval_node(*b.lhs, last);
    const ExternalNumber rhs = eval_node(*b.rhs, last);
    switch (b.op) {
      case BinaryOp::add:
        return lhs + rhs;
      case BinaryOp::sub:
        return lhs - rhs;
      case BinaryOp::mul:
        return lhs * rhs;
      case BinaryOp::div:
        if (rhs.is_magnitude()) raise_divisor(rhs, b.rhs->span);
        return lhs / rhs;
    }
    return {};
  }
  ExternalNumber operator()(const Apply& a) const {
    const ExternalNumber arg = eval_node(*a.arg, last);
    switch (a.fn) {
      case Operator::magnitude:
        return neutral(arg);
      case Operator::unity:
        if (arg.is_magnitude())
          throw EvalError(EvalError::Kind::unity_of_magnitude, self.span, "unity undefined for magnitudes");
        return unity(arg);
      case Operator::inverse:
        if (arg.is_magnitude()) raise_divisor(arg, self.span);
        return inverse(arg);
    }
    return {};
  }
};

ExternalNumber eval_node(const Expr& expr, const ExternalNumber* last) {
  return std::visit(Evaluator{expr, last}, expr.node);
}

struct Printer {
  std::string operator()(const IntegerLit& lit) const { return lit.value.get_str(); }
  std::string operator()(const VarX&) const { return "x"; }
  std::string operator()(const MagLit& lit) const { return to_string(lit.mag); }
  std::string operator()(const LastValue&) const { return "_"; }
  std::string operator()(const Pow& p) const {
    return "(^ " + to_sexpr(*p.base) + " " + std::to_string(p.exponent) + ")";
  }
  std::string operator()(const Neg& n) const { return "(neg " + to_sexpr(*n.operand) + ")"; }
  std::string operator()(const Binary& b) const {
    static constexpr const char* kOps[] = {"+", "-", "*", "/"};
    return std::string("(") + kOps[static_cast<int>(b.op)] + " " + to_sexpr(*b.lhs) + " " + to_sexpr(*b.rhs) + ")";
  }
  std::string operator()(const Apply& a) const {
    static constexpr const char* kNames[] = {"u", "inv", "e"};
    return std::string("(") + kNames[static_cast<int>(a.fn)] + " " + to_sexpr(*a.arg) + ")";
  }
};

}  // namespace

std::string_view to_string(EvalError::Kind kind) {
  switch (kind) {
    case EvalError::Kind::parse_error:
      return "ParseError";
    case EvalError::Kind::division_by_magnitude:
      return "DivisionByMagnitude";
    case EvalError::Kind::unity_of_magnitude:
      return "UnityOfMagnitude";
    case EvalError::Kind::zero_denominator:
      return "ZeroDenominator";
  }
  return "EvalError";
}

ExprPtr parse(std::string_view text, ParseOptions options) { return Parser(text, options).run(); }

ExternalNumber eval(const Expr& expr, const ExternalNumber* last) { return eval_node(expr, last); }

ExternalNumber evaluate(std::string_view text) { return eval(*parse(text)); }

std::string to_sexpr(const Expr& expr) { return std::visit(Printer{}, expr.node); }

}  // namespace extnum
