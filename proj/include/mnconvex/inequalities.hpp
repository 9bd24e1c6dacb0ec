#pragma once

// Hermite-Hadamard type inequalities for MN-convex functions.
//
// For u < v the chain
//
//   f(M(u,v,1/2))  <=  int_0^1 N(f(M(u,v,l)), f(M(u,v,1-l)), 1/2) dl  <=  N(f(u), f(v), 1/2)
//
// is evaluated in weight space by hh_verify. hh_closed_form evaluates the
// middle term through the x-space integrals of the eight classical (M, N)
// specialisations; the two routes share no code beyond the quadrature and
// serve as oracles for each other.

#include <string>
#include <string_view>
#include <utility>

#include "mnconvex/convexity.hpp"
#include "mnconvex/means.hpp"
#include "mnconvex/quadrature.hpp"

namespace mnconvex {

inline constexpr double kDefaultQuadTolerance = 1e-9;

struct HHReport {
  double left = 0.0;
  double middle = 0.0;
  double right = 0.0;
  double quad_error = 0.0;
  double slack = 0.0;  // max(1e-7, 10 quad_error)
  bool chain_holds = false;
  bool converged = true;
  long evaluations = 0;
};

HHReport hh_verify(const FunctionHandle& f, const MeanSpec& m, const MeanSpec& n, double u, double v,
                   double tol = kDefaultQuadTolerance);

// (M, N) pairs with closed-form x-space middle terms:
//   i AA, ii GA, iii HA, iv M_pA (p != 0), v AG, vi GG, vii HG, viii AH.
enum class CorollaryItem { I, II, III, IV, V, VI, VII, VIII };

struct CorollaryKind {
  CorollaryItem item;
  double p = 1.0;  // only for IV
};

// "i" .. "viii"; p is attached for "iv" and must be non-zero there.
CorollaryKind parse_corollary(std::string_view roman, double p = 1.0);
std::string to_string(const CorollaryKind& kind);

// The (M, N) pair a corollary kind specialises.
MeanPair corollary_means(const CorollaryKind& kind);

struct HHClosedForm {
  double left = 0.0;
  double middle = 0.0;
  double right = 0.0;
  double quad_error = 0.0;
  bool converged = true;
  long evaluations = 0;
};

HHClosedForm hh_closed_form(const FunctionHandle& f, const CorollaryKind& kind, double u, double v,
                            double tol = kDefaultQuadTolerance);

// Checks f(M(u,v,1/2)) <= f(x) <= N(f(u), f(v), 1/2) for x = M(u,v,l) over a
// dense weight grid. The witness is (u, v, l) with lhs/rhs the two sides of
// whichever bound failed. Warnings are attached when f is not symmetric or
// not MN-convex on [u, v], since the bounds are only guaranteed then.
ConvexityReport symmetric_bounds_check(const FunctionHandle& f, const MeanSpec& m, const MeanSpec& n, double u,
                                       double v, const GridConfig& cfg = {});

struct BoundsReport {
  double upper_K = 0.0;  // max{f(u), f(v)}
  double empirical_sup = 0.0;
  double empirical_inf = 0.0;
  bool sup_within_bound = true;
  long points = 0;
};

BoundsReport bounds_estimate(const FunctionHandle& f, double u, double v, const GridConfig& cfg = {});

struct LipschitzReport {
  double epsilon = 0.0;
  double m1 = 0.0;  // inf of f on [a - eps, b + eps]
  double m2 = 0.0;  // sup of f on [a - eps, b + eps]
  double K = 0.0;   // (m2 - m1) / eps
  double delta = 0.0;
  bool delta_infinite = false;  // K == 0: every delta works
  bool empirical_holds = false;
  double max_slope = 0.0;  // largest |f(y) - f(x)| / |y - x| over sampled pairs in [a, b]
  long pairs = 0;
};

LipschitzReport lipschitz_bound(const FunctionHandle& f, const Interval& domain, double a, double b, double epsilon,
                                const GridConfig& cfg = {}, int dense_points = 10'000);

}  // namespace mnconvex
