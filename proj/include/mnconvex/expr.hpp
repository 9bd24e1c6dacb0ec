#pragma once

// Expression language for positive real functions of one variable `x`.
//
//   expr    := term   (('+' | '-') term)*
//   term    := unary  (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := number | 'x' | func '(' expr ')' | '(' expr ')'
//   func    := 'exp' | 'ln' | 'sqrt' | 'abs'
//   number  := digits ['.' digits] [('e'|'E') ['+'|'-'] digits]   (or '.' digits ...)
//
// `^` binds tighter than unary minus, so "-x^2" is -(x^2) and "2^-1" is 0.5.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mnconvex {

enum class UnaryOp { Neg, Exp, Ln, Sqrt, Abs };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

enum class DomainReason {
  NonPositiveLog,
  NegativeSqrt,
  DivisionByZero,
  NonFiniteResult,
  NegativePowerBase,
  NonPositiveInput,
};

std::string_view to_string(DomainReason reason);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Raised when evaluation leaves the real domain. `input()` is the argument
// passed to the evaluation that failed.
class EvalDomainError : public std::domain_error {
 public:
  EvalDomainError(double input, DomainReason reason);
  double input() const noexcept { return input_; }
  DomainReason reason() const noexcept { return reason_; }

 private:
  double input_;
  DomainReason reason_;
};

struct ExprNode;

// Immutable expression tree. Copies share structure.
class Expr {
 public:
  static Expr constant(double value);
  static Expr variable();
  static Expr unary(UnaryOp op, Expr operand);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);

  // Requires x > 0 and finite; throws EvalDomainError otherwise.
  double evaluate(double x) const;

  // Canonical fully parenthesised text; parse(to_string()) is structurally
  // identical to *this.
  std::string to_string() const;

  const ExprNode& root() const noexcept { return *root_; }

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const ExprNode> root) : root_(std::move(root)) {}
  std::shared_ptr<const ExprNode> root_;
};

struct ExprNode {
  enum class Kind { Constant, Variable, Unary, Binary };
  Kind kind;
  double value = 0.0;
  UnaryOp unary_op = UnaryOp::Neg;
  BinaryOp binary_op = BinaryOp::Add;
  std::shared_ptr<const ExprNode> lhs;  // operand of unary nodes
  std::shared_ptr<const ExprNode> rhs;
};

Expr parse(std::string_view text);

}  // namespace mnconvex
