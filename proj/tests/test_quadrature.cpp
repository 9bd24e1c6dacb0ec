#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "mnconvex/quadrature.hpp"

using namespace mnconvex;

TEST(Quadrature, Examples) {
  const QuadResult sq = integrate([](double x) { return x * x; }, 1.0, 3.0, 1e-10);
  EXPECT_TRUE(sq.converged);
  EXPECT_NEAR(sq.value, 26.0 / 3.0, 1e-12);

  const QuadResult inv = integrate([](double x) { return 1.0 / x; }, 1.0, 4.0, 1e-10);
  EXPECT_NEAR(inv.value, 1.3862943611198906, 1e-10);

  const QuadResult ex = integrate([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-12);
  EXPECT_NEAR(ex.value, std::exp(1.0) - 1.0, 1e-12);
}

TEST(Quadrature, ErrorEstimateBoundsTrueError) {
  struct Case {
    double (*f)(double);
    double a, b, exact;
  };
  const Case cases[] = {
      {[](double x) { return std::sqrt(x); }, 0.0, 1.0, 2.0 / 3.0},
      {[](double x) { return std::log(x); }, 1e-12, 1.0, -1.0},
      {[](double x) { return 1.0 / (1.0 + x * x); }, -5.0, 5.0, 2.0 * std::atan(5.0)},
      {[](double x) { return std::cos(30.0 * x); }, 0.0, 1.0, std::sin(30.0) / 30.0},
  };
  for (const auto& c : cases) {
    const QuadResult r = integrate(c.f, c.a, c.b, 1e-9);
    EXPECT_TRUE(r.converged);
    EXPECT_LE(std::fabs(r.value - c.exact), std::max(r.error_estimate, 1e-14)) << c.exact;
  }
}

TEST(QuadratureProperty, PolynomialExactness) {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  std::uniform_real_distribution<double> end(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    double c[4];
    for (double& ci : c) ci = coef(rng);
    double a = end(rng), b = end(rng);
    if (a > b) std::swap(a, b);
    const auto poly = [&](double x) { return ((c[3] * x + c[2]) * x + c[1]) * x + c[0]; };
    const auto anti = [&](double x) { return (((c[3] / 4 * x + c[2] / 3) * x + c[1] / 2) * x + c[0]) * x; };
    const QuadResult r = integrate(poly, a, b, 1e-10);
    ASSERT_TRUE(r.converged);
    ASSERT_EQ(r.evaluations, 15);
    const double exact = anti(b) - anti(a);
    ASSERT_NEAR(r.value, exact, 1e-12 * std::max(1.0, std::fabs(exact)) * 10);
  }
}

TEST(QuadratureProperty, HighDegreePolynomialsExactOnOnePanel) {
  // K15 integrates degree <= 22 exactly.
  const auto f = [](double x) { return std::pow(x, 20) - 3.0 * std::pow(x, 11); };
  const QuadResult r = integrate(f, 0.0, 1.0, 1e-13);
  EXPECT_NEAR(r.value, 1.0 / 21.0 - 3.0 / 12.0, 1e-14);
}

TEST(QuadratureProperty, Additivity) {
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> end(0.1, 5.0);
  const auto f = [](double x) { return std::exp(std::sin(x)) / (1.0 + x); };
  for (int trial = 0; trial < 100; ++trial) {
    double pts[3] = {end(rng), end(rng), end(rng)};
    std::sort(pts, pts + 3);
    const QuadResult ab = integrate(f, pts[0], pts[1], 1e-11);
    const QuadResult bc = integrate(f, pts[1], pts[2], 1e-11);
    const QuadResult ac = integrate(f, pts[0], pts[2], 1e-11);
    ASSERT_NEAR(ab.value + bc.value, ac.value, ab.error_estimate + bc.error_estimate + ac.error_estimate + 1e-14);
  }
}

TEST(Quadrature, ReportsNonConvergence) {
  QuadOptions opts;
  opts.max_evaluations = 300;
  const QuadResult r = integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, 1e-14, opts);
  EXPECT_FALSE(r.converged);
  EXPECT_LE(r.evaluations, 300 + 30);
  EXPECT_TRUE(std::isfinite(r.value));
}

TEST(Quadrature, DomainErrorCarriesAbscissa) {
  try {
    integrate(
        [](double x) -> double {
          if (x > 0.7) throw std::domain_error("outside");
          return x;
        },
        0.0, 1.0, 1e-9);
    FAIL();
  } catch (const IntegrationError& e) {
    EXPECT_GT(e.abscissa(), 0.7);
    EXPECT_LE(e.abscissa(), 1.0);
  }
  EXPECT_THROW(integrate([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0, 1e-9), IntegrationError);
}

TEST(Quadrature, RejectsBadArguments) {
  const auto f = [](double x) { return x; };
  EXPECT_THROW(integrate(f, 0.0, INFINITY, 1e-9), std::invalid_argument);
  EXPECT_THROW(integrate(f, 2.0, 1.0, 1e-9), std::invalid_argument);
  EXPECT_THROW(integrate(f, 1.0, 1.0, 1e-9), std::invalid_argument);
  EXPECT_THROW(integrate(f, 0.0, 1.0, 0.0), std::invalid_argument);
}
