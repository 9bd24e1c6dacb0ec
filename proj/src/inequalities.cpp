#include "mnconvex/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "detail/witness.hpp"

namespace mnconvex {

namespace {

void require_ordered(double u, double v) {
  if (!(u > 0.0) || !(u < v) || !std::isfinite(v)) throw std::invalid_argument("requires 0 < u < v");
}

double log_ratio(double u, double v) { return std::log1p((v - u) / u); }

}  // namespace

HHReport hh_verify(const FunctionHandle& f, const MeanSpec& m, const MeanSpec& n, double u, double v, double tol) {
  require_ordered(u, v);
  HHReport r;
  r.left = f(mean_value(m, u, v, 0.5));
  r.right = mean_value(n, f(u), f(v), 0.5);
  const auto integrand = [&](double lambda) {
    return mean_value(n, f(mean_value(m, u, v, lambda)), f(mean_value(m, u, v, 1.0 - lambda)), 0.5);
  };
  const QuadResult q = integrate(integrand, 0.0, 1.0, tol);
  r.middle = q.value;
  r.quad_error = q.error_estimate;
  r.converged = q.converged;
  r.evaluations = q.evaluations;
  r.slack = std::max(1e-7, 10.0 * r.quad_error);
  r.chain_holds = r.left <= r.middle + r.slack && r.middle <= r.right + r.slack;
  return r;
}

CorollaryKind parse_corollary(std::string_view roman, double p) {
  static constexpr std::pair<std::string_view, CorollaryItem> kNames[] = {
      {"i", CorollaryItem::I},   {"ii", CorollaryItem::II},   {"iii", CorollaryItem::III},
      {"iv", CorollaryItem::IV}, {"v", CorollaryItem::V},     {"vi", CorollaryItem::VI},
      {"vii", CorollaryItem::VII}, {"viii", CorollaryItem::VIII}};
  for (const auto& [name, item] : kNames) {
    if (name == roman) {
      if (item == CorollaryItem::IV && (p == 0.0 || !std::isfinite(p))) {
        throw std::invalid_argument("corollary iv needs a finite non-zero p");
      }
      return {item, item == CorollaryItem::IV ? p : 1.0};
    }
  }
  throw std::invalid_argument("unknown corollary '" + std::string(roman) + "' (expected i..viii)");
}

std::string to_string(const CorollaryKind& kind) {
  switch (kind.item) {
    case CorollaryItem::I: return "i";
    case CorollaryItem::II: return "ii";
    case CorollaryItem::III: return "iii";
    case CorollaryItem::IV: return "iv";
    case CorollaryItem::V: return "v";
    case CorollaryItem::VI: return "vi";
    case CorollaryItem::VII: return "vii";
    case CorollaryItem::VIII: return "viii";
  }
  return "?";
}

MeanPair corollary_means(const CorollaryKind& kind) {
  const MeanSpec a = MeanSpec::arithmetic();
  const MeanSpec g = MeanSpec::geometric();
  const MeanSpec h = MeanSpec::harmonic();
  switch (kind.item) {
    case CorollaryItem::I: return {a, a};
    case CorollaryItem::II: return {g, a};
    case CorollaryItem::III: return {h, a};
    case CorollaryItem::IV: return {MeanSpec::power(kind.p), a};
    case CorollaryItem::V: return {a, g};
    case CorollaryItem::VI: return {g, g};
    case CorollaryItem::VII: return {h, g};
    case CorollaryItem::VIII: return {a, h};
  }
  throw std::logic_error("unhandled corollary kind");
}

HHClosedForm hh_closed_form(const FunctionHandle& f, const CorollaryKind& kind, double u, double v, double tol) {
  require_ordered(u, v);
  if (kind.item == CorollaryItem::IV && kind.p == 0.0) throw std::invalid_argument("corollary iv needs p != 0");
  const MeanPair means = corollary_means(kind);

  HHClosedForm out;
  out.left = f(mean_value(means.inner, u, v, 0.5));
  out.right = mean_value(means.outer, f(u), f(v), 0.5);

  // Reflections of x through the M-midpoint, clamped against rounding.
  const auto clamp = [u, v](double x) { return std::clamp(x, u, v); };
  const auto arithmetic_reflection = [&](double x) { return clamp(u + v - x); };
  const auto geometric_reflection = [&](double x) { return clamp(u * v / x); };
  const auto harmonic_reflection = [&](double x) { return clamp(1.0 / ((1.0 / u - 1.0 / x) + 1.0 / v)); };

  double factor = 0.0;
  std::function<double(double)> integrand;
  switch (kind.item) {
    case CorollaryItem::I:
      factor = 1.0 / (v - u);
      integrand = [&](double x) { return f(x); };
      break;
    case CorollaryItem::II:
      factor = 1.0 / log_ratio(u, v);
      integrand = [&](double x) { return f(x) / x; };
      break;
    case CorollaryItem::III:
      factor = u * v / (v - u);
      integrand = [&](double x) { return f(x) / (x * x); };
      break;
    case CorollaryItem::IV: {
      const double p = kind.p;
      factor = p / (std::pow(v, p) - std::pow(u, p));
      integrand = [&f, p](double x) { return f(x) * std::pow(x, p - 1.0); };
      break;
    }
    case CorollaryItem::V:
      factor = 1.0 / (v - u);
      integrand = [&](double x) { return std::sqrt(f(x) * f(arithmetic_reflection(x))); };
      break;
    case CorollaryItem::VI:
      factor = 1.0 / log_ratio(u, v);
      integrand = [&](double x) { return std::sqrt(f(x) * f(geometric_reflection(x))) / x; };
      break;
    case CorollaryItem::VII:
      factor = u * v / (v - u);
      integrand = [&](double x) { return std::sqrt(f(x) * f(harmonic_reflection(x))) / (x * x); };
      break;
    case CorollaryItem::VIII:
      factor = 2.0 / (v - u);
      integrand = [&](double x) {
        const double fx = f(x);
        const double fr = f(arithmetic_reflection(x));
        return fx * fr / (fx + fr);
      };
      break;
  }
  if (!std::isfinite(factor) || factor == 0.0) throw std::domain_error("degenerate normalising factor");

  const QuadResult q = integrate(integrand, u, v, tol / std::fabs(factor));
  out.middle = factor * q.value;
  out.quad_error = std::fabs(factor) * q.error_estimate;
  out.converged = q.converged;
  out.evaluations = q.evaluations;
  return out;
}

ConvexityReport symmetric_bounds_check(const FunctionHandle& f, const MeanSpec& m, const MeanSpec& n, double u,
                                       double v, const GridConfig& cfg) {
  require_ordered(u, v);
  ConvexityReport report{verdict::Holds{}, 0, 0.0, {}};

  const ConvexityReport symmetry = is_symmetric(f, m, u, v, cfg);
  if (!symmetry.holds()) {
    report.warnings.push_back("precondition: f is not symmetric with respect to " + m.to_string() + "(u,v,1/2)");
  }
  const ConvexityReport convexity = is_mn_convex(f, m, n, Interval(u, v), cfg);
  if (!convexity.holds()) {
    report.warnings.push_back("precondition: f is not " + m.to_string() + n.to_string() + "-convex on [u,v]");
  }

  double lower = 0.0;
  double upper = 0.0;
  try {
    lower = f(mean_value(m, u, v, 0.5));
    upper = mean_value(n, f(u), f(v), 0.5);
  } catch (const std::domain_error& e) {
    report.verdict = verdict::Inconclusive{std::string("evaluation failed at the bounds: ") + e.what()};
    return report;
  }

  const int dense = (cfg.lambda_count - 1) * (cfg.u_count - 1) + 1;
  detail::WitnessTracker tracker;
  bool first = true;
  for (double lambda : grid_nodes(0.0, 1.0, std::max(dense, 2), cfg.seed, 4)) {
    double fx = 0.0;
    try {
      fx = f(mean_value(m, u, v, lambda));
    } catch (const std::domain_error& e) {
      report.verdict = verdict::Inconclusive{"evaluation failed at lambda=" + std::to_string(lambda) + ": " + e.what()};
      return report;
    }
    ++report.checked_points;
    const double low_violation = (lower - fx) / std::max(1.0, std::fabs(fx));
    const double high_violation = (fx - upper) / std::max(1.0, std::fabs(upper));
    const double margin = std::min(-low_violation, -high_violation);
    if (first || margin > report.max_margin) {
      report.max_margin = margin;
      first = false;
    }
    if (low_violation > cfg.tolerance && low_violation >= high_violation) {
      tracker.offer(low_violation, {u, v, lambda, lower, fx});
    } else if (high_violation > cfg.tolerance) {
      tracker.offer(high_violation, {u, v, lambda, fx, upper});
    }
  }
  if (tracker.found()) report.verdict = verdict::Fails{tracker.witness()};
  return report;
}

BoundsReport bounds_estimate(const FunctionHandle& f, double u, double v, const GridConfig& cfg) {
  require_ordered(u, v);
  BoundsReport r;
  r.upper_K = std::max(f(u), f(v));
  r.empirical_sup = -std::numeric_limits<double>::infinity();
  r.empirical_inf = std::numeric_limits<double>::infinity();
  const int dense = (cfg.u_count - 1) * (cfg.v_count - 1) + 1;
  for (double x : grid_nodes(u, v, std::max(dense, 2), cfg.seed, 5)) {
    const double y = f(x);
    r.empirical_sup = std::max(r.empirical_sup, y);
    r.empirical_inf = std::min(r.empirical_inf, y);
    ++r.points;
  }
  r.sup_within_bound = r.empirical_sup <= r.upper_K + cfg.tolerance * std::max(1.0, std::fabs(r.upper_K));
  return r;
}

LipschitzReport lipschitz_bound(const FunctionHandle& f, const Interval& domain, double a, double b, double epsilon,
                                const GridConfig& cfg, int dense_points) {
  if (!(a < b)) throw std::invalid_argument("lipschitz interval requires a < b");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw std::invalid_argument("epsilon must be positive");
  if (!(a - epsilon > 0.0)) throw std::invalid_argument("a - epsilon must stay positive");
  if (a - epsilon < domain.lo || b + epsilon > domain.hi) {
    throw std::invalid_argument("[a - epsilon, b + epsilon] must lie inside the domain");
  }

  LipschitzReport r;
  r.epsilon = epsilon;
  r.m1 = std::numeric_limits<double>::infinity();
  r.m2 = -std::numeric_limits<double>::infinity();
  for (double x : grid_nodes(a - epsilon, b + epsilon, std::max(dense_points, 2), cfg.seed, 6)) {
    const double y = f(x);
    r.m1 = std::min(r.m1, y);
    r.m2 = std::max(r.m2, y);
  }
  r.K = (r.m2 - r.m1) / epsilon;
  if (r.K > 0.0) {
    r.delta = epsilon / r.K;
  } else {
    r.delta = std::numeric_limits<double>::infinity();
    r.delta_infinite = true;
  }

  const auto xs = grid_nodes(a, b, cfg.u_count, cfg.seed, 7);
  const auto ys = grid_nodes(a, b, cfg.v_count, cfg.seed, 8);
  std::vector<double> fx(xs.size());
  std::vector<double> fy(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) fx[i] = f(xs[i]);
  for (std::size_t j = 0; j < ys.size(); ++j) fy[j] = f(ys[j]);
  r.empirical_holds = true;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const double dx = std::fabs(ys[j] - xs[i]);
      if (dx == 0.0) continue;
      const double df = std::fabs(fy[j] - fx[i]);
      ++r.pairs;
      r.max_slope = std::max(r.max_slope, df / dx);
      if (df > r.K * dx + cfg.tolerance * std::max(1.0, r.K * dx)) r.empirical_holds = false;
    }
  }
  return r;
}

}  // namespace mnconvex
