#include "mnconvex/expr.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace mnconvex {

namespace {

std::string describe_reason(double input, DomainReason reason) {
  std::ostringstream os;
  os.precision(17);
  os << "expression left its real domain at x=" << input << " (" << to_string(reason) << ")";
  return os.str();
}

std::shared_ptr<const ExprNode> make_node(ExprNode node) {
  return std::make_shared<const ExprNode>(std::move(node));
}

bool same_tree(const ExprNode& a, const ExprNode& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprNode::Kind::Constant:
      return a.value == b.value;
    case ExprNode::Kind::Variable:
      return true;
    case ExprNode::Kind::Unary:
      return a.unary_op == b.unary_op && same_tree(*a.lhs, *b.lhs);
    case ExprNode::Kind::Binary:
      return a.binary_op == b.binary_op && same_tree(*a.lhs, *b.lhs) && same_tree(*a.rhs, *b.rhs);
  }
  return false;
}

double eval_node(const ExprNode& n, double x) {
  auto checked = [x](double r) {
    if (!std::isfinite(r)) throw EvalDomainError(x, DomainReason::NonFiniteResult);
    return r;
  };
  switch (n.kind) {
    case ExprNode::Kind::Constant:
      return n.value;
    case ExprNode::Kind::Variable:
      return x;
    case ExprNode::Kind::Unary: {
      const double a = eval_node(*n.lhs, x);
      switch (n.unary_op) {
        case UnaryOp::Neg:
          return -a;
        case UnaryOp::Exp:
          return checked(std::exp(a));
        case UnaryOp::Ln:
          if (a <= 0.0) throw EvalDomainError(x, DomainReason::NonPositiveLog);
          return checked(std::log(a));
        case UnaryOp::Sqrt:
          if (a < 0.0) throw EvalDomainError(x, DomainReason::NegativeSqrt);
          return std::sqrt(a);
        case UnaryOp::Abs:
          return std::fabs(a);
      }
      break;
    }
    case ExprNode::Kind::Binary: {
      const double a = eval_node(*n.lhs, x);
      const double b = eval_node(*n.rhs, x);
      switch (n.binary_op) {
        case BinaryOp::Add:
          return checked(a + b);
        case BinaryOp::Sub:
          return checked(a - b);
        case BinaryOp::Mul:
          return checked(a * b);
        case BinaryOp::Div:
          if (b == 0.0) throw EvalDomainError(x, DomainReason::DivisionByZero);
          return checked(a / b);
        case BinaryOp::Pow: {
          const bool integral_exponent = std::nearbyint(b) == b;
          if (!integral_exponent && a <= 0.0) throw EvalDomainError(x, DomainReason::NegativePowerBase);
          if (a == 0.0 && b < 0.0) throw EvalDomainError(x, DomainReason::DivisionByZero);
          return checked(std::pow(a, b));
        }
      }
      break;
    }
  }
  throw std::logic_error("malformed expression node");
}

std::string format_constant(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::logic_error("constant formatting failed");
  std::string s(buf, end);
  return v < 0.0 ? "(" + s + ")" : s;
}

std::string_view unary_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::Neg: return "-";
    case UnaryOp::Exp: return "exp";
    case UnaryOp::Ln: return "ln";
    case UnaryOp::Sqrt: return "sqrt";
    case UnaryOp::Abs: return "abs";
  }
  return "?";
}

char binary_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return '+';
    case BinaryOp::Sub: return '-';
    case BinaryOp::Mul: return '*';
    case BinaryOp::Div: return '/';
    case BinaryOp::Pow: return '^';
  }
  return '?';
}

void print_node(const ExprNode& n, std::string& out) {
  switch (n.kind) {
    case ExprNode::Kind::Constant:
      out += format_constant(n.value);
      return;
    case ExprNode::Kind::Variable:
      out += 'x';
      return;
    case ExprNode::Kind::Unary:
      if (n.unary_op == UnaryOp::Neg) {
        out += "(-";
        print_node(*n.lhs, out);
        out += ')';
      } else {
        out += unary_name(n.unary_op);
        out += '(';
        print_node(*n.lhs, out);
        out += ')';
      }
      return;
    case ExprNode::Kind::Binary:
      out += '(';
      print_node(*n.lhs, out);
      out += ' ';
      out += binary_symbol(n.binary_op);
      out += ' ';
      print_node(*n.rhs, out);
      out += ')';
      return;
  }
}

// Recursive-descent parser over the grammar documented in expr.hpp.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr run() {
    Expr e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(pos_, "syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(BinaryOp::Add, lhs, parse_term());
      } else if (accept('-')) {
        lhs = Expr::binary(BinaryOp::Sub, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(BinaryOp::Mul, lhs, parse_unary());
      } else if (accept('/')) {
        lhs = Expr::binary(BinaryOp::Div, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    if (accept('-')) return Expr::unary(UnaryOp::Neg, parse_unary());
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (accept('^')) return Expr::binary(BinaryOp::Pow, base, parse_unary());
    return base;
  }

  Expr parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected operand but input ended");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word == "x") return Expr::variable();
      UnaryOp op;
      if (word == "exp") {
        op = UnaryOp::Exp;
      } else if (word == "ln") {
        op = UnaryOp::Ln;
      } else if (word == "sqrt") {
        op = UnaryOp::Sqrt;
      } else if (word == "abs") {
        op = UnaryOp::Abs;
      } else {
        pos_ = start;
        fail("unknown identifier '" + std::string(word) + "'");
      }
      expect('(');
      Expr arg = parse_expr();
      expect(')');
      return Expr::unary(op, arg);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    auto digits = [this] {
      std::size_t n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      pos_ = start;
      fail("malformed number");
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) fail("malformed exponent");
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
      pos_ = start;
      fail("number out of range");
    }
    return Expr::constant(value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view to_string(DomainReason reason) {
  switch (reason) {
    case DomainReason::NonPositiveLog: return "NonPositiveLog";
    case DomainReason::NegativeSqrt: return "NegativeSqrt";
    case DomainReason::DivisionByZero: return "DivisionByZero";
    case DomainReason::NonFiniteResult: return "NonFiniteResult";
    case DomainReason::NegativePowerBase: return "NegativePowerBase";
    case DomainReason::NonPositiveInput: return "NonPositiveInput";
  }
  return "Unknown";
}

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error(message), position_(position) {}

EvalDomainError::EvalDomainError(double input, DomainReason reason)
    : std::domain_error(describe_reason(input, reason)), input_(input), reason_(reason) {}

Expr Expr::constant(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("expression constants must be finite");
  return Expr(make_node({ExprNode::Kind::Constant, value, {}, {}, nullptr, nullptr}));
}

Expr Expr::variable() { return Expr(make_node({ExprNode::Kind::Variable, 0.0, {}, {}, nullptr, nullptr})); }

Expr Expr::unary(UnaryOp op, Expr operand) {
  return Expr(make_node({ExprNode::Kind::Unary, 0.0, op, {}, std::move(operand.root_), nullptr}));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  return Expr(make_node({ExprNode::Kind::Binary, 0.0, {}, op, std::move(lhs.root_), std::move(rhs.root_)}));
}

double Expr::evaluate(double x) const {
  if (!(x > 0.0) || !std::isfinite(x)) throw EvalDomainError(x, DomainReason::NonPositiveInput);
  const double r = eval_node(*root_, x);
  if (!std::isfinite(r)) throw EvalDomainError(x, DomainReason::NonFiniteResult);
  return r;
}

std::string Expr::to_string() const {
  std::string out;
  print_node(*root_, out);
  return out;
}

bool operator==(const Expr& a, const Expr& b) { return same_tree(*a.root_, *b.root_); }

Expr parse(std::string_view text) { return Parser(text).run(); }

}  // namespace mnconvex
