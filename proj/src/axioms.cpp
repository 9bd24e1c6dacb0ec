#include "mnconvex/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "detail/sampling.hpp"

namespace mnconvex {

namespace {

constexpr double kAbsoluteFloor = 1e-12;
constexpr int kMonotoneGrid = 64;
constexpr int kContinuityDepth = 40;

double relative_gap(double lhs, double rhs) {
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) return std::numeric_limits<double>::infinity();
  return std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs));
}

// Relative amount by which `small <= large` is violated.
double excess(double small, double large) {
  if (!std::isfinite(small) || !std::isfinite(large)) return std::numeric_limits<double>::infinity();
  return std::max(0.0, small - large) / std::max(1.0, std::fabs(large));
}

double monotonicity_residual(const WeightedMean& m, double u, double v) {
  if (u == v) return 0.0;
  const double scale = std::max(1.0, std::max(u, v));
  std::vector<double> values(kMonotoneGrid);
  for (int i = 0; i < kMonotoneGrid; ++i) values[i] = m(u, v, static_cast<double>(i) / (kMonotoneGrid - 1));
  const double span = values.back() - values.front();
  if (span == 0.0) return std::fabs(v - u) / scale;
  const double sign = span > 0.0 ? 1.0 : -1.0;
  const bool separated = std::fabs(v - u) > 1e-8 * std::max(u, v);
  double worst = 0.0;
  for (int i = 0; i + 1 < kMonotoneGrid; ++i) {
    const double step = sign * (values[i + 1] - values[i]);
    if (!std::isfinite(step)) return std::numeric_limits<double>::infinity();
    if (step < 0.0) {
      worst = std::max(worst, -step / scale);
    } else if (step == 0.0 && separated) {
      worst = std::max(worst, std::fabs(span) / (kMonotoneGrid - 1) / scale);
    }
  }

  // Continuity: follow the larger half of every coarse cell down to width
  // ~1e-14. A jump keeps its size under refinement; a continuous map does not.
  for (int i = 0; i + 1 < kMonotoneGrid; ++i) {
    double a = static_cast<double>(i) / (kMonotoneGrid - 1);
    double b = static_cast<double>(i + 1) / (kMonotoneGrid - 1);
    double fa = values[i];
    double fb = values[i + 1];
    for (int depth = 0; depth < kContinuityDepth; ++depth) {
      const double mid = 0.5 * (a + b);
      const double fm = m(u, v, mid);
      if (std::fabs(fm - fa) >= std::fabs(fb - fm)) {
        b = mid;
        fb = fm;
      } else {
        a = mid;
        fa = fm;
      }
    }
    worst = std::max(worst, std::fabs(fb - fa) / scale);
  }
  return worst;
}

std::vector<std::vector<double>> corner_cases(AxiomId axiom, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  switch (axiom) {
    case AxiomId::WM1:
      return {{lo, hi, 0.0}, {lo, hi, 0.5}, {lo, hi, 1.0}, {mid, mid, 0.3}, {hi, lo, 0.25}};
    case AxiomId::WM2:
      return {{lo, 0.0}, {lo, 0.5}, {hi, 1.0}, {mid, 0.5}};
    case AxiomId::WM3:
      return {{lo, hi, 0.0}, {lo, hi, 0.5}, {lo, hi, 1.0}, {hi, lo, 0.5}, {mid, mid, 0.5}};
    case AxiomId::WM4:
      return {{lo, hi, 0.5, 2.0}, {lo, hi, 0.0, 3.0}, {hi, lo, 1.0, 0.1}, {mid, mid, 0.5, 10.0}};
    case AxiomId::WM5:
      return {{lo, hi, lo, hi, 0.5}, {lo, lo, lo, hi, 0.0}, {lo, hi, hi, hi, 1.0}, {lo, hi, mid, mid, 0.5}};
    case AxiomId::WM6:
      return {{lo, hi}, {hi, lo}, {mid, mid}};
    case AxiomId::WM7:
      return {{lo, hi, mid, lo, 0.5, 0.5}, {lo, hi, hi, lo, 0.0, 1.0}, {lo, lo, hi, hi, 0.25, 0.75}};
    case AxiomId::WM8:
      return {{lo, hi, 0.0, 1.0, 0.5}, {lo, hi, 0.5, 0.5, 0.3}, {hi, lo, 1.0, 0.0, 0.25}, {lo, hi, 0.0, 0.0, 0.5}};
    case AxiomId::P1:
      return {{lo, hi, 0.5, 0.5}, {lo, hi, 0.0, 1.0}, {lo, lo, 0.3, 0.7}, {hi, lo, 0.25, 0.5}};
    case AxiomId::P2:
      return {{lo, hi, 0.0}, {lo, hi, 0.5}, {lo, hi, 1.0}, {mid, mid, 0.3}};
  }
  return {};
}

std::vector<double> random_sample(AxiomId axiom, const Interval& range, detail::UniformStream& rng) {
  auto value = [&] { return rng.uniform(range.lo, range.hi); };
  auto weight = [&] { return rng.unit(); };
  switch (axiom) {
    case AxiomId::WM1:
    case AxiomId::WM3: {
      const double u = value(), v = value();
      return {u, v, weight()};
    }
    case AxiomId::WM2: {
      const double u = value();
      return {u, weight()};
    }
    case AxiomId::WM4: {
      const double u = value(), v = value(), l = weight();
      return {u, v, l, rng.log_uniform(0.1, 10.0)};
    }
    case AxiomId::WM5: {
      double u = value(), w = value(), v = value(), omega = value();
      if (w < u) std::swap(u, w);
      if (omega < v) std::swap(v, omega);
      return {u, w, v, omega, weight()};
    }
    case AxiomId::WM6: {
      const double u = value(), v = value();
      return {u, v};
    }
    case AxiomId::WM7: {
      const double u = value(), v = value(), z = value(), w = value(), l = weight();
      return {u, v, z, w, l, weight()};
    }
    case AxiomId::WM8: {
      const double u = value(), v = value(), l1 = weight(), l2 = weight();
      return {u, v, l1, l2, weight()};
    }
    case AxiomId::P1: {
      const double a = value(), b = value(), s = weight();
      return {a, b, s, weight()};
    }
    case AxiomId::P2: {
      const double a = value(), b = value();
      return {a, b, weight()};
    }
  }
  return {};
}

}  // namespace

std::string_view to_string(AxiomId id) {
  switch (id) {
    case AxiomId::WM1: return "WM1";
    case AxiomId::WM2: return "WM2";
    case AxiomId::WM3: return "WM3";
    case AxiomId::WM4: return "WM4";
    case AxiomId::WM5: return "WM5";
    case AxiomId::WM6: return "WM6";
    case AxiomId::WM7: return "WM7";
    case AxiomId::WM8: return "WM8";
    case AxiomId::P1: return "P1";
    case AxiomId::P2: return "P2";
  }
  return "?";
}

std::size_t sample_arity(AxiomId id) {
  switch (id) {
    case AxiomId::WM2:
    case AxiomId::WM6: return 2;
    case AxiomId::WM1:
    case AxiomId::WM3:
    case AxiomId::P2: return 3;
    case AxiomId::WM4:
    case AxiomId::P1: return 4;
    case AxiomId::WM5:
    case AxiomId::WM8: return 5;
    case AxiomId::WM7: return 6;
  }
  return 0;
}

WeightedMean as_weighted_mean(const MeanSpec& spec) {
  return [spec](double u, double v, double lambda) { return mean_value(spec, u, v, lambda); };
}

AxiomEvaluationError::AxiomEvaluationError(AxiomId axiom, std::vector<double> sample, const std::string& cause)
    : std::domain_error(std::string(to_string(axiom)) + ": mean evaluation failed on sample: " + cause),
      axiom_(axiom),
      sample_(std::move(sample)) {}

double axiom_residual(const WeightedMean& m, AxiomId axiom, std::span<const double> s) {
  if (s.size() != sample_arity(axiom)) throw std::invalid_argument("sample has the wrong arity for this axiom");
  switch (axiom) {
    case AxiomId::WM1:
      return relative_gap(m(s[0], s[1], s[2]), m(s[1], s[0], 1.0 - s[2]));
    case AxiomId::WM2:
      return relative_gap(m(s[0], s[0], s[1]), s[0]);
    case AxiomId::WM3: {
      const double value = m(s[0], s[1], s[2]);
      const double lo = std::min(s[0], s[1]);
      const double hi = std::max(s[0], s[1]);
      return std::max(excess(lo, value), excess(value, hi));
    }
    case AxiomId::WM4: {
      const double alpha = s[3];
      return relative_gap(m(alpha * s[0], alpha * s[1], s[2]), alpha * m(s[0], s[1], s[2]));
    }
    case AxiomId::WM5: {
      const double u = s[0], w = s[1], v = s[2], omega = s[3], l = s[4];
      const double base = m(u, v, l);
      return std::max(excess(base, m(w, v, l)), excess(base, m(u, omega, l)));
    }
    case AxiomId::WM6:
      return monotonicity_residual(m, s[0], s[1]);
    case AxiomId::WM7: {
      const double u = s[0], v = s[1], z = s[2], w = s[3], l = s[4], t = s[5];
      return relative_gap(m(m(u, v, l), m(z, w, l), t), m(m(u, z, t), m(v, w, t), l));
    }
    case AxiomId::WM8: {
      const double u = s[0], v = s[1], l1 = s[2], l2 = s[3], t = s[4];
      const double combined = std::clamp((1.0 - t) * l1 + t * l2, 0.0, 1.0);
      return relative_gap(m(u, v, combined), m(m(u, v, l1), m(u, v, l2), t));
    }
    case AxiomId::P1: {
      const double a = s[0], b = s[1], t = s[2], l = s[3];
      const double c = m(a, b, t);
      return relative_gap(m(m(a, c, l), m(b, c, l), t), c);
    }
    case AxiomId::P2: {
      const double a = s[0], b = s[1], l = s[2];
      return relative_gap(m(m(a, b, l), m(b, a, l), 0.5), m(a, b, 0.5));
    }
  }
  return 0.0;
}

std::vector<std::vector<double>> draw_samples(AxiomId axiom, const SampleConfig& cfg) {
  if (cfg.count < 1) throw std::invalid_argument("sample count must be at least 1");
  std::vector<std::vector<double>> samples = corner_cases(axiom, cfg.value_range.lo, cfg.value_range.hi);
  if (samples.size() > static_cast<std::size_t>(cfg.count)) samples.resize(cfg.count);
  detail::UniformStream rng(cfg.seed);
  while (samples.size() < static_cast<std::size_t>(cfg.count)) {
    samples.push_back(random_sample(axiom, cfg.value_range, rng));
  }
  return samples;
}

AxiomReport check_axiom(const WeightedMean& mean, AxiomId axiom, const SampleConfig& cfg) {
  if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  AxiomReport report{axiom, true, 0.0, {}, 0, cfg.tolerance};
  bool first = true;
  for (auto& sample : draw_samples(axiom, cfg)) {
    double r = 0.0;
    try {
      r = axiom_residual(mean, axiom, sample);
    } catch (const std::domain_error& e) {
      throw AxiomEvaluationError(axiom, sample, e.what());
    }
    if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
    if (first || r > report.worst_residual) {
      report.worst_residual = r;
      report.worst_sample = std::move(sample);
      first = false;
    }
    ++report.samples;
  }
  report.holds = report.worst_residual <= std::max(cfg.tolerance, kAbsoluteFloor);
  return report;
}

AxiomReport check_axiom(const MeanSpec& spec, AxiomId axiom, const SampleConfig& cfg) {
  return check_axiom(as_weighted_mean(spec), axiom, cfg);
}

AxiomReport check_identity(const MeanSpec& spec, AxiomId which, const SampleConfig& cfg) {
  if (which != AxiomId::P1 && which != AxiomId::P2) {
    throw std::invalid_argument("check_identity accepts only P1 or P2");
  }
  return check_axiom(spec, which, cfg);
}

std::vector<AxiomReport> check_all(const MeanSpec& spec, const SampleConfig& cfg) {
  std::vector<AxiomReport> reports;
  const WeightedMean mean = as_weighted_mean(spec);
  for (AxiomId id : kAllAxioms) reports.push_back(check_axiom(mean, id, cfg));
  return reports;
}

}  // namespace mnconvex
