#pragma once

// Weighted two-argument means M(u, v, lambda) on (0, inf).
//
// Weight convention, fixed for the whole library: M(u, v, 0) = u and
// M(u, v, 1) = v. In that convention
//
//   A(u, v, l)   = (1 - l) u + l v
//   G(u, v, l)   = u^(1 - l) v^l
//   H(u, v, l)   = u v / ((1 - l) v + l u)
//   M_p(u, v, l) = ((1 - l) u^p + l v^p)^(1/p),   M_0 = G
//   QA_phi       = phi^-1((1 - l) phi(u) + l phi(v))

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "mnconvex/expr.hpp"

namespace mnconvex {

// Raised when a mean is asked to combine values outside (0, inf) or its
// generator misbehaves on the requested range.
class MeanDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Interval {
  double lo;
  double hi;

  // Throws std::invalid_argument unless 0 < lo < hi and both are finite.
  Interval(double lo_, double hi_);

  double width() const noexcept { return hi - lo; }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

namespace mean {
struct Arithmetic {};
struct Geometric {};
struct Harmonic {};
struct Power {
  double p;
};
struct QuasiArithmetic {
  Expr generator;
};
}  // namespace mean

class MeanSpec {
 public:
  using Variant = std::variant<mean::Arithmetic, mean::Geometric, mean::Harmonic, mean::Power,
                               mean::QuasiArithmetic>;

  MeanSpec(Variant v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  static MeanSpec arithmetic() { return Variant{mean::Arithmetic{}}; }
  static MeanSpec geometric() { return Variant{mean::Geometric{}}; }
  static MeanSpec harmonic() { return Variant{mean::Harmonic{}}; }
  static MeanSpec power(double p) { return Variant{mean::Power{p}}; }
  static MeanSpec quasi_arithmetic(Expr generator) { return Variant{mean::QuasiArithmetic{std::move(generator)}}; }

  const Variant& variant() const noexcept { return v_; }

  // Canonical text: A, G, H, P:<p>, QA:<expr>.
  std::string to_string() const;

 private:
  Variant v_;
};

// Parses the canonical text form; throws std::invalid_argument (or
// ParseError for a malformed QA generator).
MeanSpec parse_mean_spec(std::string_view text);

// Power means with |p| below this threshold evaluate as the geometric mean.
inline constexpr double kPowerZeroThreshold = 1e-12;

double mean_value(const MeanSpec& spec, double u, double v, double lambda);

enum class UnweightedKind { A, G, H, L, I, Mp };

struct UnweightedMean {
  UnweightedKind kind;
  double p = 1.0;  // used by Mp only
};

double unweighted_mean_value(const UnweightedMean& mean, double u, double v);

// Finds lambda with |M(u, v, lambda) - x| <= 1e-10 max(1, x) by bisection.
// Requires u != v and x between u and v.
double solve_weight(const MeanSpec& spec, double u, double v, double x);

enum class Direction { Increasing, Decreasing };

Direction direction(const MeanSpec& spec, double u, double v);

}  // namespace mnconvex
