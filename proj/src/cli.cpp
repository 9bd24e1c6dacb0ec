#include "mnconvex/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "mnconvex/axioms.hpp"
#include "mnconvex/convexity.hpp"
#include "mnconvex/inequalities.hpp"
#include "mnconvex/report_json.hpp"

namespace mnconvex::cli {

namespace {

// Bad input that is only detectable after CLI11 accepted the flag.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

enum class Outcome { Pass, Fail, Inconclusive };

Outcome worst(Outcome a, Outcome b) {
  if (a == Outcome::Fail || b == Outcome::Fail) return Outcome::Fail;
  if (a == Outcome::Inconclusive || b == Outcome::Inconclusive) return Outcome::Inconclusive;
  return Outcome::Pass;
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

Outcome outcome_of(const ConvexityReport& r) {
  if (r.holds()) return Outcome::Pass;
  return r.fails() ? Outcome::Fail : Outcome::Inconclusive;
}

std::string g7(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.7g", x);
  return buf;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

struct Options {
  // shared
  bool json = false;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int grid = 33;

  // function assembly
  std::string f;
  std::vector<std::string> g;
  std::string combine;
  bool compose = false;
  bool sup = false;
  std::optional<double> alpha;

  // means and geometry
  std::string mean;
  std::string m;
  std::string n;
  std::string interval;
  double u = 0.0;
  double v = 0.0;
  std::optional<double> p;
  double a = 0.0;
  double b = 0.0;
  double epsilon = 0.0;
  int count = 1000;
  std::string corollary;
  bool concave = false;
};

MeanSpec mean_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_mean_spec(text);
  } catch (const std::exception& e) {
    throw UsageError(flag, e.what());
  }
}

Interval interval_flag(const std::string& flag, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError(flag, "expected LO:HI, got '" + text + "'");
  auto parse_real = [&](std::string_view s) {
    double x = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw UsageError(flag, "'" + std::string(s) + "' is not a decimal real");
    }
    return x;
  };
  const std::string_view view(text);
  const double lo = parse_real(view.substr(0, colon));
  const double hi = parse_real(view.substr(colon + 1));
  try {
    return Interval(lo, hi);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag, e.what());
  }
}

FunctionHandle expr_flag(const std::string& flag, const std::string& text) {
  try {
    return FunctionHandle::from_text(text);
  } catch (const ParseError& e) {
    throw UsageError(flag, e.what());
  }
}

FunctionHandle build_function(const Options& o) {
  FunctionHandle h = expr_flag("--f", o.f);
  const int modes = (o.combine.empty() ? 0 : 1) + (o.compose ? 1 : 0) + (o.sup ? 1 : 0);
  if (modes > 1) throw UsageError("--combine/--compose/--sup", "choose at most one construction");
  if (modes == 1 && o.g.empty()) throw UsageError("--g", "required by --combine, --compose and --sup");
  if (modes == 0 && !o.g.empty()) throw UsageError("--g", "needs one of --combine, --compose or --sup");
  if ((!o.combine.empty() || o.compose) && o.g.size() != 1) {
    throw UsageError("--g", "--combine and --compose take exactly one --g");
  }
  std::vector<FunctionHandle> others;
  for (const auto& text : o.g) others.push_back(expr_flag("--g", text));
  if (!o.combine.empty()) h = combine(mean_flag("--combine", o.combine), h, others.front());
  if (o.compose) h = compose(others.front(), h);
  if (o.sup) {
    others.insert(others.begin(), h);
    h = sup_envelope(std::move(others));
  }
  if (o.alpha) {
    if (!(*o.alpha > 0.0)) throw UsageError("--alpha", "must be positive");
    h = scale(*o.alpha, h);
  }
  return h;
}

// Sampled hypotheses of --compose over the domain; empty without --compose.
std::vector<std::string> composition_warnings(const Options& o, const Interval& domain) {
  if (!o.compose) return {};
  return check_composition(expr_flag("--g", o.g.front()), expr_flag("--f", o.f), domain).warnings;
}

GridConfig grid_config(const Options& o) {
  GridConfig cfg;
  cfg.u_count = cfg.v_count = cfg.lambda_count = o.grid;
  cfg.seed = o.seed;
  cfg.tolerance = o.tol;
  return cfg;
}

Json function_echo(const Options& o) {
  Json j{{"f", o.f}};
  if (!o.g.empty()) j["g"] = o.g;
  if (!o.combine.empty()) j["combine"] = o.combine;
  if (o.compose) j["compose"] = true;
  if (o.sup) j["sup"] = true;
  if (o.alpha) j["alpha"] = *o.alpha;
  return j;
}

// Output of one command: machine form, text lines and overall outcome.
struct CommandResult {
  Json arguments = Json::object();
  Json results = Json::array();
  std::vector<std::string> lines;
  Outcome outcome = Outcome::Pass;
};

void add_convexity_lines(CommandResult& out, const std::string& title, const ConvexityReport& r) {
  out.lines.push_back(title);
  for (const auto& w : r.warnings) out.lines.push_back("  warning: " + w);
  if (r.holds()) {
    out.lines.push_back("  verdict: holds (" + std::to_string(r.checked_points) + " points, max_margin " +
                        g7(r.max_margin) + ")");
  } else if (const Witness* w = r.witness()) {
    out.lines.push_back("  verdict: fails (" + std::to_string(r.checked_points) + " points)");
    out.lines.push_back("  witness: u=" + g7(w->u) + " v=" + g7(w->v) + " λ=" + g7(w->lambda) +
                        " lhs=" + g7(w->lhs) + " rhs=" + g7(w->rhs));
  } else {
    out.lines.push_back("  verdict: inconclusive: " + std::get<verdict::Inconclusive>(r.verdict).detail);
  }
}

CommandResult run_check_axioms(const Options& o) {
  CommandResult out;
  const MeanSpec spec = mean_flag("--mean", o.mean);
  SampleConfig cfg;
  cfg.seed = o.seed;
  cfg.count = o.count;
  cfg.tolerance = o.tol;
  if (!o.interval.empty()) cfg.value_range = interval_flag("--interval", o.interval);
  out.arguments = Json{{"mean", spec.to_string()},
                       {"count", o.count},
                       {"interval", Json::array({cfg.value_range.lo, cfg.value_range.hi})},
                       {"tol", o.tol}};
  out.lines.push_back("mean " + spec.to_string() + "  samples " + std::to_string(o.count) + "  seed " +
                      std::to_string(o.seed) + "  tolerance " + g7(o.tol));
  for (AxiomId id : kAllAxioms) {
    try {
      const AxiomReport r = check_axiom(spec, id, cfg);
      out.results.push_back(to_json(r));
      out.lines.push_back(pad(std::string(to_string(id)), 5) + (r.holds ? "pass" : "FAIL") +
                          "  worst_residual=" + g7(r.worst_residual));
      if (!r.holds) out.outcome = worst(out.outcome, Outcome::Fail);
    } catch (const AxiomEvaluationError& e) {
      Json sample = Json::array();
      for (double x : e.sample()) sample.push_back(number_json(x));
      out.results.push_back(Json{{"axiom", std::string(to_string(id))},
                                 {"holds", nullptr},
                                 {"detail", e.what()},
                                 {"sample", std::move(sample)}});
      out.lines.push_back(pad(std::string(to_string(id)), 5) + "inconclusive  " + e.what());
      out.outcome = worst(out.outcome, Outcome::Inconclusive);
    }
  }
  return out;
}

CommandResult run_check_convexity(const Options& o) {
  CommandResult out;
  const FunctionHandle f = build_function(o);
  const MeanSpec m = mean_flag("--M", o.m);
  const MeanSpec n = mean_flag("--N", o.n);
  const Interval domain = interval_flag("--interval", o.interval);
  const GridConfig cfg = grid_config(o);
  out.arguments = function_echo(o);
  out.arguments["M"] = m.to_string();
  out.arguments["N"] = n.to_string();
  out.arguments["interval"] = Json::array({domain.lo, domain.hi});
  out.arguments["concave"] = o.concave;
  out.arguments["grid"] = o.grid;
  out.arguments["tol"] = o.tol;

  const std::vector<std::string> hypotheses = composition_warnings(o, domain);
  ConvexityReport r = o.concave ? is_mn_concave(f, m, n, domain, cfg) : is_mn_convex(f, m, n, domain, cfg);
  r.warnings.insert(r.warnings.begin(), hypotheses.begin(), hypotheses.end());
  Json j{{"check", o.concave ? "mn_concave" : "mn_convex"}, {"function", f.describe()}};
  j.update(to_json(r));
  out.results.push_back(std::move(j));
  add_convexity_lines(out,
                      "f=" + f.describe() + "  " + m.to_string() + n.to_string() +
                          (o.concave ? "-concave" : "-convex") + " on [" + g7(domain.lo) + ", " + g7(domain.hi) +
                          "]",
                      r);
  out.outcome = outcome_of(r);
  return out;
}

CommandResult run_classify(const Options& o) {
  CommandResult out;
  const FunctionHandle f = build_function(o);
  const Interval domain = interval_flag("--interval", o.interval);
  const double p = o.p.value_or(2.0);
  out.arguments = function_echo(o);
  out.arguments["interval"] = Json::array({domain.lo, domain.hi});
  out.arguments["p"] = p;
  out.arguments["grid"] = o.grid;
  out.arguments["tol"] = o.tol;

  out.lines.push_back("f=" + f.describe() + " on [" + g7(domain.lo) + ", " + g7(domain.hi) + "]");
  for (const auto& w : composition_warnings(o, domain)) out.lines.push_back("  warning: " + w);
  bool any_conclusive = false;
  for (const Classification& c : classify(f, domain, default_catalog(p), grid_config(o))) {
    Json j{{"pair", c.pair.label()}, {"M", c.pair.inner.to_string()}, {"N", c.pair.outer.to_string()}};
    j.update(to_json(c.report));
    out.results.push_back(std::move(j));
    std::string line = "  " + pad(c.pair.label(), 6);
    if (c.report.holds()) {
      line += "holds";
      any_conclusive = true;
    } else if (const Witness* w = c.report.witness()) {
      line += "fails   u=" + g7(w->u) + " v=" + g7(w->v) + " λ=" + g7(w->lambda);
      any_conclusive = true;
    } else {
      line += "inconclusive";
    }
    out.lines.push_back(line);
  }
  out.outcome = any_conclusive ? Outcome::Pass : Outcome::Inconclusive;
  return out;
}

CommandResult run_hh(const Options& o) {
  CommandResult out;
  const FunctionHandle f = build_function(o);
  std::optional<CorollaryKind> kind;
  MeanSpec m = MeanSpec::arithmetic();
  MeanSpec n = MeanSpec::arithmetic();
  if (!o.corollary.empty()) {
    try {
      kind = parse_corollary(o.corollary, o.p.value_or(1.0));
    } catch (const std::invalid_argument& e) {
      throw UsageError("--corollary", e.what());
    }
    const MeanPair pair = corollary_means(*kind);
    m = pair.inner;
    n = pair.outer;
    if (!o.m.empty() && mean_flag("--M", o.m).to_string() != m.to_string()) {
      throw UsageError("--M", "conflicts with --corollary " + o.corollary + " (which uses " + m.to_string() + ")");
    }
    if (!o.n.empty() && mean_flag("--N", o.n).to_string() != n.to_string()) {
      throw UsageError("--N", "conflicts with --corollary " + o.corollary + " (which uses " + n.to_string() + ")");
    }
  } else {
    if (o.m.empty()) throw UsageError("--M", "required unless --corollary is given");
    if (o.n.empty()) throw UsageError("--N", "required unless --corollary is given");
    m = mean_flag("--M", o.m);
    n = mean_flag("--N", o.n);
  }
  if (!(o.u > 0.0 && o.u < o.v)) throw UsageError("--u/--v", "require 0 < u < v");

  out.arguments = function_echo(o);
  out.arguments["M"] = m.to_string();
  out.arguments["N"] = n.to_string();
  out.arguments["u"] = o.u;
  out.arguments["v"] = o.v;
  out.arguments["tol"] = o.tol;
  if (kind) {
    out.arguments["corollary"] = to_string(*kind);
    if (kind->item == CorollaryItem::IV) out.arguments["p"] = kind->p;
  }

  const HHReport r = hh_verify(f, m, n, o.u, o.v, o.tol);
  Json j{{"check", "hermite_hadamard"}, {"function", f.describe()}};
  j.update(to_json(r));
  out.lines.push_back("f=" + f.describe() + "  M=" + m.to_string() + " N=" + n.to_string() + "  [" + g7(o.u) +
                      ", " + g7(o.v) + "]");
  out.lines.push_back("          " + pad("left", 14) + pad("middle", 14) + "right");
  out.lines.push_back("weight    " + pad(g7(r.left), 14) + pad(g7(r.middle), 14) + g7(r.right));
  out.outcome = r.chain_holds ? Outcome::Pass : Outcome::Fail;
  if (!r.converged) out.outcome = worst(out.outcome, Outcome::Inconclusive);

  if (kind) {
    const HHClosedForm c = hh_closed_form(f, *kind, o.u, o.v, o.tol);
    const double gap = std::fabs(r.middle - c.middle);
    const double allowed = std::max(1e-6, 20.0 * std::max(r.quad_error, c.quad_error));
    const bool agree = gap <= allowed;
    j["closed_form"] = to_json(c);
    j["cross_check"] = Json{{"difference", number_json(gap)}, {"allowed", number_json(allowed)}, {"agree", agree}};
    out.lines.push_back("x-space   " + pad(g7(c.left), 14) + pad(g7(c.middle), 14) + g7(c.right));
    out.lines.push_back("cross-check: " + std::string(agree ? "agree" : "DISAGREE") + " (|difference| " + g7(gap) +
                        ", allowed " + g7(allowed) + ")");
    if (!agree) out.outcome = worst(out.outcome, Outcome::Fail);
    if (!c.converged) out.outcome = worst(out.outcome, Outcome::Inconclusive);
  }
  out.lines.push_back("chain: " + std::string(r.chain_holds ? "holds" : "FAILS") + " (slack " + g7(r.slack) +
                      ", quad_error " + g7(r.quad_error) + (r.converged ? "" : ", NOT converged") + ")");
  out.results.push_back(std::move(j));
  return out;
}

CommandResult run_symmetry(const Options& o) {
  CommandResult out;
  const FunctionHandle f = build_function(o);
  const MeanSpec m = mean_flag("--M", o.m);
  const GridConfig cfg = grid_config(o);
  out.arguments = function_echo(o);
  out.arguments["M"] = m.to_string();
  if (!o.n.empty()) out.arguments["N"] = o.n;
  out.arguments["u"] = o.u;
  out.arguments["v"] = o.v;
  out.arguments["grid"] = o.grid;
  out.arguments["tol"] = o.tol;

  const ConvexityReport sym = is_symmetric(f, m, o.u, o.v, cfg);
  Json j{{"check", "symmetry"}, {"function", f.describe()}};
  j.update(to_json(sym));
  out.results.push_back(std::move(j));
  add_convexity_lines(out, "f=" + f.describe() + "  symmetric w.r.t. " + m.to_string() + "(u,v,1/2)", sym);
  out.outcome = outcome_of(sym);

  if (!o.n.empty()) {
    const MeanSpec n = mean_flag("--N", o.n);
    if (!(o.u > 0.0 && o.u < o.v)) throw UsageError("--u/--v", "symmetric bounds require 0 < u < v");
    const ConvexityReport bounds = symmetric_bounds_check(f, m, n, o.u, o.v, cfg);
    Json b{{"check", "symmetric_bounds"}, {"function", f.describe()}};
    b.update(to_json(bounds));
    out.results.push_back(std::move(b));
    add_convexity_lines(out, "bounds f(M(u,v,1/2)) <= f(x) <= N(f(u),f(v),1/2) with N=" + n.to_string(), bounds);
    out.outcome = worst(out.outcome, outcome_of(bounds));
  }
  return out;
}

CommandResult run_bounds(const Options& o) {
  CommandResult out;
  const FunctionHandle f = build_function(o);
  if (!(o.u > 0.0 && o.u < o.v)) throw UsageError("--u/--v", "require 0 < u < v");
  out.arguments = function_echo(o);
  out.arguments["u"] = o.u;
  out.arguments["v"] = o.v;
  out.arguments["grid"] = o.grid;
  out.arguments["tol"] = o.tol;
  const BoundsReport r = bounds_estimate(f, o.u, o.v, grid_config(o));
  Json j{{"check", "bounds"}, {"function", f.describe()}};
  j.update(to_json(r));
  out.results.push_back(std::move(j));
  out.lines.push_back("f=" + f.describe() + " on [" + g7(o.u) + ", " + g7(o.v) + "]");
  out.lines.push_back("  upper_K=" + g7(r.upper_K) + "  empirical_sup=" + g7(r.empirical_sup) +
                      "  empirical_inf=" + g7(r.empirical_inf));
  out.lines.push_back(std::string("  sup within bound: ") + (r.sup_within_bound ? "yes" : "NO"));
  out.outcome = r.sup_within_bound ? Outcome::Pass : Outcome::Fail;
  return out;
}

CommandResult run_lipschitz(const Options& o) {
  CommandResult out;
  const FunctionHandle f = build_function(o);
  const Interval domain = interval_flag("--interval", o.interval);
  out.arguments = function_echo(o);
  out.arguments["interval"] = Json::array({domain.lo, domain.hi});
  out.arguments["a"] = o.a;
  out.arguments["b"] = o.b;
  out.arguments["epsilon"] = o.epsilon;
  out.arguments["grid"] = o.grid;
  out.arguments["tol"] = o.tol;
  LipschitzReport r;
  try {
    r = lipschitz_bound(f, domain, o.a, o.b, o.epsilon, grid_config(o));
  } catch (const std::invalid_argument& e) {
    throw UsageError("--a/--b/--epsilon", e.what());
  }
  Json j{{"check", "lipschitz"}, {"function", f.describe()}};
  j.update(to_json(r));
  out.results.push_back(std::move(j));
  out.lines.push_back("f=" + f.describe() + " on [" + g7(o.a) + ", " + g7(o.b) + "], epsilon " + g7(o.epsilon));
  out.lines.push_back("  m1=" + g7(r.m1) + "  m2=" + g7(r.m2) + "  K=" + g7(r.K) +
                      "  delta=" + (r.delta_infinite ? std::string("inf") : g7(r.delta)));
  out.lines.push_back("  max sampled slope=" + g7(r.max_slope) + "  Lipschitz bound " +
                      (r.empirical_holds ? "holds" : "VIOLATED"));
  out.outcome = r.empirical_holds ? Outcome::Pass : Outcome::Fail;
  return out;
}

void add_function_options(CLI::App* sub, Options& o) {
  sub->add_option("--f", o.f, "Function of x, e.g. \"x^2\" or \"exp(x)/x\"")->required();
  sub->add_option("--g", o.g, "Second function(s) for --combine, --compose or --sup");
  sub->add_option("--combine", o.combine, "h = SPEC(f, g, 1/2)");
  sub->add_flag("--compose", o.compose, "h = g(f(x))");
  sub->add_flag("--sup", o.sup, "h = max(f, g...)");
  sub->add_option("--alpha", o.alpha, "Scale the function by a positive factor");
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Verification toolkit for weighted means and MN-convex functions", "mnconvex"};
  app.set_config("--config", "", "Read options from a key=value file");
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit the report as JSON");
  app.add_option("--seed", o.seed, "Sampling seed")->envname("MNCONVEX_SEED");
  app.add_option("--tol", o.tol, "Relative tolerance (quadrature tolerance for hh)")->check(CLI::PositiveNumber);
  app.add_option("--grid", o.grid, "Grid nodes per axis")->check(CLI::Range(2, 4097));

  auto* axioms = app.add_subcommand("check-axioms", "Check WM1-WM8 and P1, P2 for a weighted mean");
  axioms->add_option("--mean", o.mean, "Mean: A, G, H, P:<p> or QA:<expr>")->required();
  axioms->add_option("--count", o.count, "Samples per axiom")->check(CLI::Range(1, 100'000'000));
  axioms->add_option("--interval", o.interval, "Value range LO:HI (default 0.1:10)");

  auto* convexity = app.add_subcommand("check-convexity", "Grid check of MN-convexity");
  add_function_options(convexity, o);
  convexity->add_option("--M", o.m, "Inner mean")->required();
  convexity->add_option("--N", o.n, "Outer mean")->required();
  convexity->add_option("--interval", o.interval, "Domain LO:HI")->required();
  convexity->add_flag("--concave", o.concave, "Check MN-concavity instead");

  auto* classify_cmd = app.add_subcommand("classify", "Check f against the 16 pairs over {A, G, H, P:p}");
  add_function_options(classify_cmd, o);
  classify_cmd->add_option("--interval", o.interval, "Domain LO:HI")->required();
  classify_cmd->add_option("--p", o.p, "Exponent of the power mean in the catalog (default 2)");

  auto* hh = app.add_subcommand("hh", "Hermite-Hadamard chain for an MN-convex function");
  add_function_options(hh, o);
  hh->add_option("--M", o.m, "Inner mean");
  hh->add_option("--N", o.n, "Outer mean");
  hh->add_option("--u", o.u, "Left endpoint")->required();
  hh->add_option("--v", o.v, "Right endpoint")->required();
  hh->add_option("--corollary", o.corollary, "Also evaluate the x-space form: i..viii")
      ->check(CLI::IsMember({"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"}));
  hh->add_option("--p", o.p, "Power mean exponent for corollary iv");

  auto* symmetry = app.add_subcommand("symmetry", "Symmetry w.r.t. M(u,v,1/2), plus bounds when --N is given");
  add_function_options(symmetry, o);
  symmetry->add_option("--M", o.m, "Mean")->required();
  symmetry->add_option("--N", o.n, "Outer mean for the symmetric bounds check");
  symmetry->add_option("--u", o.u, "Left endpoint")->required();
  symmetry->add_option("--v", o.v, "Right endpoint")->required();

  auto* bounds = app.add_subcommand("bounds", "Upper bound max{f(u), f(v)} and grid extrema");
  add_function_options(bounds, o);
  bounds->add_option("--u", o.u, "Left endpoint")->required();
  bounds->add_option("--v", o.v, "Right endpoint")->required();

  auto* lipschitz = app.add_subcommand("lipschitz", "Lipschitz constant (m2 - m1)/epsilon on [a, b]");
  add_function_options(lipschitz, o);
  lipschitz->add_option("--interval", o.interval, "Domain LO:HI")->required();
  lipschitz->add_option("--a", o.a, "Left end of the closed interval")->required();
  lipschitz->add_option("--b", o.b, "Right end of the closed interval")->required();
  lipschitz->add_option("--epsilon", o.epsilon, "Enlargement")->required()->check(CLI::PositiveNumber);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << msg << "\n";
    return kUsageError;
  }

  std::string command;
  CommandResult result;
  try {
    if (axioms->parsed()) {
      command = "check-axioms";
      result = run_check_axioms(o);
    } else if (convexity->parsed()) {
      command = "check-convexity";
      result = run_check_convexity(o);
    } else if (classify_cmd->parsed()) {
      command = "classify";
      result = run_classify(o);
    } else if (hh->parsed()) {
      command = "hh";
      result = run_hh(o);
    } else if (symmetry->parsed()) {
      command = "symmetry";
      result = run_symmetry(o);
    } else if (bounds->parsed()) {
      command = "bounds";
      result = run_bounds(o);
    } else {
      command = "lipschitz";
      result = run_lipschitz(o);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    // Evaluation left the domain somewhere outside a grid check.
    err << "inconclusive: " << e.what() << "\n";
    result.outcome = Outcome::Inconclusive;
    result.results.push_back(Json{{"error", e.what()}});
    result.lines.push_back("inconclusive: " + std::string(e.what()));
  }

  if (o.json) {
    Json report{{"schema_version", kSchemaVersion},
                {"tool", "mnconvex"},
                {"version", kToolVersion},
                {"command", command},
                {"arguments", result.arguments},
                {"seed", o.seed},
                {"results", result.results},
                {"verdict", outcome_name(result.outcome)}};
    out << report.dump(2) << "\n";
  } else {
    for (const auto& line : result.lines) out << line << "\n";
    out << "verdict: " << outcome_name(result.outcome) << "\n";
  }
  switch (result.outcome) {
    case Outcome::Pass: return kAllHold;
    case Outcome::Fail: return kCheckFailed;
    case Outcome::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

}  // namespace mnconvex::cli
