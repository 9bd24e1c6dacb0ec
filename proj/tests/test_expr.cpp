#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "mnconvex/expr.hpp"

using namespace mnconvex;

namespace {

const ExprNode& child(const ExprNode& n, bool right = false) { return right ? *n.rhs : *n.lhs; }

DomainReason domain_reason(const std::string& text, double x) {
  try {
    parse(text).evaluate(x);
  } catch (const EvalDomainError& e) {
    EXPECT_EQ(e.input(), x);
    return e.reason();
  }
  ADD_FAILURE() << text << " evaluated without a domain error";
  return DomainReason::NonFiniteResult;
}

// Random well-formed trees with the shapes the parser can produce.
Expr random_tree(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
  switch (pick(rng)) {
    case 0: {
      std::uniform_real_distribution<double> value(0.0, 100.0);
      return Expr::constant(std::ldexp(std::round(value(rng) * 8.0), -3));
    }
    case 1:
      return Expr::variable();
    case 2:
    case 3: {
      std::uniform_int_distribution<int> op(0, 4);
      return Expr::unary(static_cast<UnaryOp>(op(rng)), random_tree(rng, depth - 1));
    }
    default: {
      std::uniform_int_distribution<int> op(0, 4);
      return Expr::binary(static_cast<BinaryOp>(op(rng)), random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    }
  }
}

}  // namespace

TEST(ExprParse, SingleOperator) {
  const Expr e = parse("x^2");
  const ExprNode& root = e.root();
  ASSERT_EQ(root.kind, ExprNode::Kind::Binary);
  EXPECT_EQ(root.binary_op, BinaryOp::Pow);
  EXPECT_EQ(child(root).kind, ExprNode::Kind::Variable);
  ASSERT_EQ(child(root, true).kind, ExprNode::Kind::Constant);
  EXPECT_EQ(child(root, true).value, 2.0);
}

TEST(ExprParse, Composition) {
  const Expr e = parse("exp(x)/x");
  EXPECT_EQ(e, Expr::binary(BinaryOp::Div, Expr::unary(UnaryOp::Exp, Expr::variable()), Expr::variable()));
}

TEST(ExprParse, IncompleteExpressionReportsPosition) {
  try {
    parse("x +");
    FAIL() << "expected a syntax error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(ExprParse, MalformedInputs) {
  for (const char* bad : {"", "(x", "x)", "2 3", "sin(x)", "exp x", "1e", "x ^", "*x", "1e999"}) {
    EXPECT_THROW(parse(bad), ParseError) << bad;
  }
}

TEST(ExprParse, PowerBindsTighterThanUnaryMinus) {
  EXPECT_EQ(parse("-x^2"), Expr::unary(UnaryOp::Neg, parse("x^2")));
  EXPECT_DOUBLE_EQ(parse("-x^2").evaluate(3.0), -9.0);
  EXPECT_DOUBLE_EQ(parse("2^-1").evaluate(1.0), 0.5);
}

TEST(ExprParse, NumberForms) {
  EXPECT_EQ(parse("1.5e2").evaluate(1.0), 150.0);
  EXPECT_EQ(parse(".25").evaluate(1.0), 0.25);
  EXPECT_EQ(parse("3E-1").evaluate(1.0), 0.3);
}

TEST(ExprEvaluate, Arithmetic) {
  EXPECT_EQ(parse("x^2").evaluate(3.0), 9.0);
  EXPECT_EQ(parse("ln(x)").evaluate(1.0), 0.0);
  EXPECT_EQ(parse("abs(1-x)").evaluate(3.0), 2.0);
  EXPECT_EQ(parse("sqrt(x)").evaluate(16.0), 4.0);
}

TEST(ExprEvaluate, Precedence) {
  for (double x : {0.5, 1.0, 7.0}) {
    EXPECT_EQ(parse("2+3*4").evaluate(x), 14.0);
    EXPECT_EQ(parse("2^3^2").evaluate(x), 512.0);
    EXPECT_EQ(parse("8/4/2").evaluate(x), 1.0);
    EXPECT_EQ(parse("8-4-2").evaluate(x), 2.0);
  }
}

TEST(ExprEvaluate, DomainErrors) {
  EXPECT_EQ(domain_reason("ln(0-1)", 2.0), DomainReason::NonPositiveLog);
  EXPECT_EQ(domain_reason("ln(x-1)", 1.0), DomainReason::NonPositiveLog);
  EXPECT_EQ(domain_reason("sqrt(1-x)", 4.0), DomainReason::NegativeSqrt);
  EXPECT_EQ(domain_reason("1/(x-2)", 2.0), DomainReason::DivisionByZero);
  EXPECT_EQ(domain_reason("exp(x)", 1000.0), DomainReason::NonFiniteResult);
  EXPECT_EQ(domain_reason("(1-x)^0.5", 3.0), DomainReason::NegativePowerBase);
  EXPECT_EQ(domain_reason("x", -1.0), DomainReason::NonPositiveInput);
  EXPECT_EQ(domain_reason("x", 0.0), DomainReason::NonPositiveInput);
}

TEST(ExprEvaluate, IntegerPowersOfNegativeBases) {
  EXPECT_EQ(parse("(1-x)^2").evaluate(3.0), 4.0);
  EXPECT_EQ(parse("(1-x)^3").evaluate(3.0), -8.0);
}

TEST(ExprProperty, PrintParseRoundTrip) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 2000; ++i) {
    const Expr e = random_tree(rng, 5);
    const std::string text = e.to_string();
    const Expr again = parse(text);
    ASSERT_EQ(again, e) << text;
    ASSERT_EQ(again.to_string(), text);
  }
}

TEST(ExprProperty, ReparseOfParsedText) {
  for (const char* s : {"x^2", "exp(x)/x", "-x^2+3*x-1", "2^3^2", "sqrt(abs(ln(x)))", "x*x-6*x+10", "x+4/x",
                        "1/(1+exp(-x))", "(x^2)^0.5"}) {
    const Expr e = parse(s);
    EXPECT_EQ(parse(e.to_string()), e) << s;
  }
}

TEST(ExprProperty, EvaluationIsDeterministic) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Expr e = random_tree(rng, 4);
    for (double x : {0.3, 1.0, 2.5}) {
      double first = 0.0;
      bool ok = true;
      try {
        first = e.evaluate(x);
      } catch (const EvalDomainError&) {
        ok = false;
      }
      if (!ok) {
        EXPECT_THROW(e.evaluate(x), EvalDomainError);
        continue;
      }
      const double second = e.evaluate(x);
      EXPECT_EQ(std::memcmp(&first, &second, sizeof first), 0);
    }
  }
}
