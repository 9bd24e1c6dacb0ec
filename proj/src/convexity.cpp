#include "mnconvex/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "detail/sampling.hpp"
#include "detail/witness.hpp"

namespace mnconvex {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

double relative(double diff, double reference) { return diff / std::max(1.0, std::fabs(reference)); }

verdict::Inconclusive inconclusive_at(const std::string& where, const std::string& cause) {
  return {"evaluation failed at " + where + ": " + cause};
}

std::string point_text(double u, double v, double lambda) {
  return "u=" + fmt(u) + " v=" + fmt(v) + " lambda=" + fmt(lambda);
}

// Values of f at the nodes; throws std::domain_error if f is undefined or
// not positive at one of them.
double positive_value(const FunctionHandle& f, double x) {
  const double y = f(x);
  if (!(y > 0.0)) throw std::domain_error("f(" + fmt(x) + ")=" + fmt(y) + " is not positive");
  return y;
}

ConvexityReport mn_grid_check(const FunctionHandle& f, const MeanSpec& m, const MeanSpec& n,
                              const Interval& domain, const GridConfig& cfg, bool concave) {
  if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("grid tolerance must be positive");
  const auto us = grid_nodes(domain.lo, domain.hi, cfg.u_count, cfg.seed, 1);
  const auto vs = grid_nodes(domain.lo, domain.hi, cfg.v_count, cfg.seed, 2);
  const auto ls = grid_nodes(0.0, 1.0, cfg.lambda_count, cfg.seed, 3);

  ConvexityReport report{verdict::Holds{}, 0, 0.0, {}};
  std::vector<double> fu(us.size());
  std::vector<double> fv(vs.size());
  try {
    for (std::size_t i = 0; i < us.size(); ++i) fu[i] = positive_value(f, us[i]);
    for (std::size_t j = 0; j < vs.size(); ++j) fv[j] = positive_value(f, vs[j]);
  } catch (const std::domain_error& e) {
    report.verdict = inconclusive_at("a grid node", e.what());
    return report;
  }

  detail::WitnessTracker tracker;
  bool first_margin = true;
  for (std::size_t i = 0; i < us.size(); ++i) {
    for (std::size_t j = 0; j < vs.size(); ++j) {
      for (double lambda : ls) {
        double image = 0.0;
        double bound = 0.0;
        try {
          image = positive_value(f, mean_value(m, us[i], vs[j], lambda));
          bound = mean_value(n, fu[i], fv[j], lambda);
        } catch (const std::domain_error& e) {
          report.verdict = inconclusive_at(point_text(us[i], vs[j], lambda), e.what());
          return report;
        }
        ++report.checked_points;
        const double lhs = concave ? bound : image;
        const double rhs = concave ? image : bound;
        const double violation = relative(lhs - rhs, rhs);
        if (first_margin || -violation > report.max_margin) {
          report.max_margin = -violation;
          first_margin = false;
        }
        if (violation > cfg.tolerance) tracker.offer(violation, {us[i], vs[j], lambda, lhs, rhs});
      }
    }
  }
  if (tracker.found()) report.verdict = verdict::Fails{tracker.witness()};
  return report;
}

}  // namespace

FunctionHandle FunctionHandle::from_expr(Expr expr) {
  return FunctionHandle(std::make_shared<const FunctionNode>(FunctionNode{source::FromExpr{std::move(expr)}}));
}

FunctionHandle FunctionHandle::from_text(std::string_view text) { return from_expr(parse(text)); }

FunctionHandle FunctionHandle::from_callable(std::string label, std::function<double(double)> fn) {
  if (!fn) throw std::invalid_argument("callable function handle needs a target");
  return FunctionHandle(std::make_shared<const FunctionNode>(
      FunctionNode{source::FromCallable{std::move(label), std::move(fn)}}));
}

double FunctionHandle::operator()(double x) const {
  if (!(x > 0.0) || !std::isfinite(x)) throw EvalDomainError(x, DomainReason::NonPositiveInput);
  return std::visit(overloaded{
                        [x](const source::FromExpr& s) { return s.expr.evaluate(x); },
                        [x](const source::FromCallable& s) {
                          const double y = s.fn(x);
                          if (!std::isfinite(y)) throw EvalDomainError(x, DomainReason::NonFiniteResult);
                          return y;
                        },
                        [x](const source::Combined& s) { return mean_value(s.mean, s.f(x), s.g(x), 0.5); },
                        [x](const source::Scaled& s) { return s.alpha * s.f(x); },
                        [x](const source::Composed& s) { return s.outer(s.inner(x)); },
                        [x](const source::SupEnvelope& s) {
                          double best = s.family.front()(x);
                          for (std::size_t i = 1; i < s.family.size(); ++i) best = std::max(best, s.family[i](x));
                          return best;
                        },
                    },
                    node_->source);
}

std::string FunctionHandle::describe() const {
  return std::visit(overloaded{
                        [](const source::FromExpr& s) { return s.expr.to_string(); },
                        [](const source::FromCallable& s) { return s.label; },
                        [](const source::Combined& s) {
                          return s.mean.to_string() + "(" + s.f.describe() + ", " + s.g.describe() + ")";
                        },
                        [](const source::Scaled& s) { return fmt(s.alpha) + "*" + s.f.describe(); },
                        [](const source::Composed& s) {
                          return "compose(" + s.outer.describe() + ", " + s.inner.describe() + ")";
                        },
                        [](const source::SupEnvelope& s) {
                          std::string out = "sup{";
                          for (std::size_t i = 0; i < s.family.size(); ++i) {
                            if (i) out += ", ";
                            out += s.family[i].describe();
                          }
                          return out + "}";
                        },
                    },
                    node_->source);
}

FunctionHandle combine(const MeanSpec& n, const FunctionHandle& f, const FunctionHandle& g) {
  return FunctionHandle(std::make_shared<const FunctionNode>(FunctionNode{source::Combined{n, f, g}}));
}

FunctionHandle scale(double alpha, const FunctionHandle& f) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("scale factor must be positive and finite");
  return FunctionHandle(std::make_shared<const FunctionNode>(FunctionNode{source::Scaled{alpha, f}}));
}

FunctionHandle compose(const FunctionHandle& outer, const FunctionHandle& inner) {
  return FunctionHandle(std::make_shared<const FunctionNode>(FunctionNode{source::Composed{outer, inner}}));
}

FunctionHandle sup_envelope(std::vector<FunctionHandle> family) {
  if (family.empty()) throw std::invalid_argument("sup envelope needs a non-empty family");
  return FunctionHandle(std::make_shared<const FunctionNode>(FunctionNode{source::SupEnvelope{std::move(family)}}));
}

CompositionCheck check_composition(const FunctionHandle& outer, const FunctionHandle& inner, const Interval& domain,
                                   int samples) {
  CompositionCheck check;
  std::vector<double> ys;
  for (double x : grid_nodes(domain.lo, domain.hi, std::max(samples, 2), 0)) ys.push_back(inner(x));
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  double prev_y = 0.0;
  double prev_g = 0.0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const double g = outer(ys[i]);
    if (i > 0 && g < prev_g - 1e-12 * std::max(1.0, std::fabs(prev_g)) && check.outer_nondecreasing) {
      check.outer_nondecreasing = false;
      check.warnings.push_back("outer function decreases on the range of the inner function: g(" + fmt(prev_y) +
                               ")=" + fmt(prev_g) + " > g(" + fmt(ys[i]) + ")=" + fmt(g));
    }
    prev_y = ys[i];
    prev_g = g;
  }
  return check;
}

std::vector<double> grid_nodes(double lo, double hi, int count, std::uint64_t seed, std::uint64_t stream) {
  if (count < 2) throw std::invalid_argument("grid axes need at least 2 nodes");
  if (!(lo < hi)) throw std::invalid_argument("grid requires lo < hi");
  const double mid = 0.5 * (lo + hi);
  std::vector<double> nodes;
  nodes.reserve(count + 1);
  const double spacing = (hi - lo) / (count - 1);
  detail::UniformStream rng(seed * 0x9E3779B97F4A7C15ULL + stream);
  for (int i = 0; i < count; ++i) {
    double x = i + 1 == count ? hi : (2 * i + 1 == count ? mid : lo + spacing * i);
    if (seed != 0 && i > 0 && i + 1 < count && x != mid) x += (rng.unit() - 0.5) * 0.9 * spacing;
    nodes.push_back(x);
  }
  if (count % 2 == 0) nodes.push_back(mid);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

ConvexityReport is_mn_convex(const FunctionHandle& f, const MeanSpec& m, const MeanSpec& n, const Interval& domain,
                             const GridConfig& cfg) {
  return mn_grid_check(f, m, n, domain, cfg, false);
}

ConvexityReport is_mn_concave(const FunctionHandle& f, const MeanSpec& m, const MeanSpec& n, const Interval& domain,
                              const GridConfig& cfg) {
  return mn_grid_check(f, m, n, domain, cfg, true);
}

ConvexityReport is_symmetric(const FunctionHandle& f, const MeanSpec& m, double u, double v, const GridConfig& cfg) {
  if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("grid tolerance must be positive");
  ConvexityReport report{verdict::Holds{}, 0, 0.0, {}};
  detail::WitnessTracker tracker;
  for (double lambda : grid_nodes(0.0, 1.0, cfg.lambda_count, cfg.seed, 3)) {
    double lhs = 0.0;
    double rhs = 0.0;
    try {
      lhs = f(mean_value(m, u, v, lambda));
      rhs = f(mean_value(m, u, v, 1.0 - lambda));
    } catch (const std::domain_error& e) {
      report.verdict = inconclusive_at(point_text(u, v, lambda), e.what());
      return report;
    }
    ++report.checked_points;
    const double gap = std::fabs(lhs - rhs) / std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
    report.max_margin = std::max(report.max_margin, gap);
    if (gap > cfg.tolerance) tracker.offer(gap, {u, v, lambda, lhs, rhs});
  }
  if (tracker.found()) report.verdict = verdict::Fails{tracker.witness()};
  return report;
}

std::pair<double, double> recheck_convexity_witness(const FunctionHandle& f, const MeanSpec& m, const MeanSpec& n,
                                                    const Witness& w, bool concave) {
  const double image = f(mean_value(m, w.u, w.v, w.lambda));
  const double bound = mean_value(n, f(w.u), f(w.v), w.lambda);
  return concave ? std::pair{bound, image} : std::pair{image, bound};
}

std::string MeanPair::label() const {
  auto short_name = [](const MeanSpec& s) {
    return std::visit(overloaded{
                          [](const mean::Arithmetic&) -> std::string { return "A"; },
                          [](const mean::Geometric&) -> std::string { return "G"; },
                          [](const mean::Harmonic&) -> std::string { return "H"; },
                          [](const mean::Power& p) { return "P" + fmt(p.p); },
                          [](const mean::QuasiArithmetic&) -> std::string { return "QA"; },
                      },
                      s.variant());
  };
  return short_name(inner) + short_name(outer);
}

std::vector<MeanPair> default_catalog(double p) {
  const std::vector<MeanSpec> means{MeanSpec::arithmetic(), MeanSpec::geometric(), MeanSpec::harmonic(),
                                    MeanSpec::power(p)};
  std::vector<MeanPair> pairs;
  for (const auto& inner : means) {
    for (const auto& outer : means) pairs.push_back({inner, outer});
  }
  return pairs;
}

std::vector<Classification> classify(const FunctionHandle& f, const Interval& domain,
                                     const std::vector<MeanPair>& catalog, const GridConfig& cfg) {
  if (catalog.empty()) throw std::invalid_argument("classification catalog must be non-empty");
  std::vector<Classification> out;
  out.reserve(catalog.size());
  for (const auto& pair : catalog) out.push_back({pair, is_mn_convex(f, pair.inner, pair.outer, domain, cfg)});
  return out;
}

}  // namespace mnconvex
