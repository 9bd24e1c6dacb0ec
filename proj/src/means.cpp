#include "mnconvex/means.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace mnconvex {

namespace {

constexpr double kQuasiArithmeticTolerance = 1e-12;
constexpr int kGeneratorSamples = 33;

void require_positive(double u, double v) {
  if (!(u > 0.0) || !(v > 0.0) || !std::isfinite(u) || !std::isfinite(v)) {
    throw MeanDomainError("mean arguments must be finite and positive (got u=" + std::to_string(u) +
                          ", v=" + std::to_string(v) + ")");
  }
}

void require_weight(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("mean weight must lie in [0,1] (got " + std::to_string(lambda) + ")");
  }
}

double power_mean(double p, double u, double v, double lambda) {
  if (std::fabs(p) < kPowerZeroThreshold) return std::pow(u, 1.0 - lambda) * std::pow(v, lambda);
  if (std::fabs(p) < 1e-3) {
    // ((1-l)u^p + l v^p)^(1/p) = exp(log1p((1-l)expm1(p ln u) + l expm1(p ln v)) / p)
    const double s = (1.0 - lambda) * std::expm1(p * std::log(u)) + lambda * std::expm1(p * std::log(v));
    return std::exp(std::log1p(s) / p);
  }
  // Scale so both ratios raised to p are at most one.
  const double scale = p > 0.0 ? std::max(u, v) : std::min(u, v);
  const double s = (1.0 - lambda) * std::pow(u / scale, p) + lambda * std::pow(v / scale, p);
  return scale * std::pow(s, 1.0 / p);
}

int monotone_sign(const Expr& phi, double lo, double hi) {
  int sign = 0;
  double prev = phi.evaluate(lo);
  for (int i = 1; i < kGeneratorSamples; ++i) {
    const double x = i + 1 == kGeneratorSamples ? hi : lo + (hi - lo) * i / (kGeneratorSamples - 1);
    const double cur = phi.evaluate(x);
    const int step = cur > prev ? 1 : (cur < prev ? -1 : 0);
    if (step == 0 || (sign != 0 && step != sign)) {
      throw MeanDomainError("quasi-arithmetic generator " + phi.to_string() +
                            " is not strictly monotone on [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
    }
    sign = step;
    prev = cur;
  }
  return sign;
}

double quasi_arithmetic_mean(const Expr& phi, double u, double v, double lambda) {
  if (u == v || lambda == 0.0) return u;
  if (lambda == 1.0) return v;
  double lo = std::min(u, v);
  double hi = std::max(u, v);
  const int sign = monotone_sign(phi, lo, hi);
  const double target = (1.0 - lambda) * phi.evaluate(u) + lambda * phi.evaluate(v);
  for (int iter = 0; iter < 200 && hi - lo > kQuasiArithmeticTolerance * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double value = phi.evaluate(mid);
    if ((sign > 0 && value < target) || (sign < 0 && value > target)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::string format_real(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, end) : std::to_string(v);
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo > 0.0) || !(lo < hi)) {
    throw std::invalid_argument("interval requires 0 < lo < hi (got " + format_real(lo) + ":" +
                                format_real(hi) + ")");
  }
}

std::string MeanSpec::to_string() const {
  return std::visit(overloaded{
                        [](const mean::Arithmetic&) -> std::string { return "A"; },
                        [](const mean::Geometric&) -> std::string { return "G"; },
                        [](const mean::Harmonic&) -> std::string { return "H"; },
                        [](const mean::Power& m) { return "P:" + format_real(m.p); },
                        [](const mean::QuasiArithmetic& m) { return "QA:" + m.generator.to_string(); },
                    },
                    v_);
}

MeanSpec parse_mean_spec(std::string_view text) {
  if (text == "A") return MeanSpec::arithmetic();
  if (text == "G") return MeanSpec::geometric();
  if (text == "H") return MeanSpec::harmonic();
  if (text.starts_with("P:")) {
    const std::string_view num = text.substr(2);
    double p = 0.0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
    if (num.empty() || ec != std::errc{} || ptr != num.data() + num.size() || !std::isfinite(p)) {
      throw std::invalid_argument("invalid power mean exponent in '" + std::string(text) + "'");
    }
    return MeanSpec::power(p);
  }
  if (text.starts_with("QA:")) return MeanSpec::quasi_arithmetic(parse(text.substr(3)));
  throw std::invalid_argument("unknown mean '" + std::string(text) + "' (expected A, G, H, P:<p> or QA:<expr>)");
}

double mean_value(const MeanSpec& spec, double u, double v, double lambda) {
  require_positive(u, v);
  require_weight(lambda);
  return std::visit(
      overloaded{
          [&](const mean::Arithmetic&) { return (1.0 - lambda) * u + lambda * v; },
          [&](const mean::Geometric&) { return std::pow(u, 1.0 - lambda) * std::pow(v, lambda); },
          [&](const mean::Harmonic&) { return u * v / ((1.0 - lambda) * v + lambda * u); },
          [&](const mean::Power& m) { return power_mean(m.p, u, v, lambda); },
          [&](const mean::QuasiArithmetic& m) { return quasi_arithmetic_mean(m.generator, u, v, lambda); },
      },
      spec.variant());
}

double unweighted_mean_value(const UnweightedMean& mean, double u, double v) {
  require_positive(u, v);
  if (u == v) return u;
  double result = 0.0;
  switch (mean.kind) {
    case UnweightedKind::A:
      result = 0.5 * (u + v);
      break;
    case UnweightedKind::G:
      result = std::sqrt(u) * std::sqrt(v);
      break;
    case UnweightedKind::H:
      result = 2.0 * u / (u + v) * v;
      break;
    case UnweightedKind::L:
      // (u - v) / (ln u - ln v), with ln(u/v) taken as log1p((u - v)/v)
      result = (u - v) / std::log1p((u - v) / v);
      break;
    case UnweightedKind::I: {
      // ln I = (u ln u - v ln v)/(u - v) - 1 = ln v + u ln(u/v)/(u - v) - 1
      const double log_ratio = std::log1p((u - v) / v);
      result = std::exp(std::log(v) + (u * log_ratio / (u - v) - 1.0));
      break;
    }
    case UnweightedKind::Mp:
      result = power_mean(mean.p, u, v, 0.5);
      break;
  }
  if (!std::isfinite(result)) throw MeanDomainError("unweighted mean produced a non-finite value");
  return result;
}

Direction direction(const MeanSpec& spec, double u, double v) {
  if (u == v) throw std::invalid_argument("mean direction is undefined for u == v");
  return mean_value(spec, u, v, 0.0) < mean_value(spec, u, v, 1.0) ? Direction::Increasing
                                                                   : Direction::Decreasing;
}

double solve_weight(const MeanSpec& spec, double u, double v, double x) {
  if (u == v) throw std::invalid_argument("weight is not identifiable when u == v");
  if (!(x >= std::min(u, v) && x <= std::max(u, v))) {
    throw std::invalid_argument("x=" + format_real(x) + " lies outside [min(u,v), max(u,v)]");
  }
  const bool increasing = direction(spec, u, v) == Direction::Increasing;
  const double tol = 1e-10 * std::max(1.0, x);
  double lo = 0.0;
  double hi = 1.0;
  if (std::fabs(mean_value(spec, u, v, lo) - x) <= tol) return lo;
  if (std::fabs(mean_value(spec, u, v, hi) - x) <= tol) return hi;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double value = mean_value(spec, u, v, mid);
    if (std::fabs(value - x) <= tol) return mid;
    if ((value < x) == increasing) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 0.0) break;
  }
  throw MeanDomainError("weight bisection did not reach tolerance for x=" + format_real(x));
}

}  // namespace mnconvex
