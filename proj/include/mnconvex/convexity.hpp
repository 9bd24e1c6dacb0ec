#pragma once

// Grid checks for MN-convexity, MN-concavity and midpoint symmetry, plus the
// constructions that preserve MN-convexity (N-combination, positive scaling,
// composition, supremum of a family).
//
// A "Holds" verdict means no violation was found on the grid. It is evidence,
// not proof; checked_points records how much evidence there is.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mnconvex/expr.hpp"
#include "mnconvex/means.hpp"

namespace mnconvex {

struct FunctionNode;

// Immutable positive real function of one positive variable, built from an
// expression or from other handles. Evaluation throws a std::domain_error
// subclass when the function is undefined at x.
class FunctionHandle {
 public:
  static FunctionHandle from_expr(Expr expr);
  static FunctionHandle from_text(std::string_view text);
  // For functions without an expression form (e.g. a mean as a function of
  // its weight).
  static FunctionHandle from_callable(std::string label, std::function<double(double)> fn);

  double operator()(double x) const;

  // Human-readable construction, e.g. "G(exp(x), exp((2 * x)))".
  std::string describe() const;

  const FunctionNode& node() const noexcept { return *node_; }

 private:
  friend FunctionHandle combine(const MeanSpec&, const FunctionHandle&, const FunctionHandle&);
  friend FunctionHandle scale(double, const FunctionHandle&);
  friend FunctionHandle compose(const FunctionHandle&, const FunctionHandle&);
  friend FunctionHandle sup_envelope(std::vector<FunctionHandle>);

  explicit FunctionHandle(std::shared_ptr<const FunctionNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const FunctionNode> node_;
};

namespace source {
struct FromExpr {
  Expr expr;
};
struct FromCallable {
  std::string label;
  std::function<double(double)> fn;
};
struct Combined {
  MeanSpec mean;
  FunctionHandle f;
  FunctionHandle g;
};
struct Scaled {
  double alpha;
  FunctionHandle f;
};
struct Composed {
  FunctionHandle outer;
  FunctionHandle inner;
};
struct SupEnvelope {
  std::vector<FunctionHandle> family;
};
}  // namespace source

struct FunctionNode {
  std::variant<source::FromExpr, source::FromCallable, source::Combined, source::Scaled, source::Composed,
               source::SupEnvelope>
      source;
};

// h(x) = N(f(x), g(x), 1/2)
FunctionHandle combine(const MeanSpec& n, const FunctionHandle& f, const FunctionHandle& g);
// x -> alpha f(x); alpha must be positive and finite.
FunctionHandle scale(double alpha, const FunctionHandle& f);
// x -> outer(inner(x))
FunctionHandle compose(const FunctionHandle& outer, const FunctionHandle& inner);
// x -> max_i f_i(x); the family must be non-empty.
FunctionHandle sup_envelope(std::vector<FunctionHandle> family);

// Sampling check of the composition hypotheses on `domain`: inner values stay
// inside the outer function's domain (a violation throws the evaluation
// error), and the outer function is nondecreasing over the sampled range of
// inner (a violation only produces a warning).
struct CompositionCheck {
  bool outer_nondecreasing = true;
  std::vector<std::string> warnings;
};
CompositionCheck check_composition(const FunctionHandle& outer, const FunctionHandle& inner, const Interval& domain,
                                   int samples = 257);

struct GridConfig {
  int u_count = 33;
  int v_count = 33;
  int lambda_count = 33;
  // Seed 0 keeps the interior nodes equispaced; any other seed jitters them
  // deterministically by up to half a spacing. Endpoints and midpoint are
  // always present.
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
};

// Sorted grid over [lo, hi] with `count` nodes, always containing lo, hi and
// the midpoint (one extra node is added for even counts).
std::vector<double> grid_nodes(double lo, double hi, int count, std::uint64_t seed, std::uint64_t stream = 0);

// lhs must not exceed rhs; a witness is a point where lhs > rhs + tol max(1, |rhs|).
struct Witness {
  double u;
  double v;
  double lambda;
  double lhs;
  double rhs;
};

namespace verdict {
struct Holds {};
struct Fails {
  Witness witness;
};
struct Inconclusive {
  std::string detail;
};
}  // namespace verdict

struct ConvexityReport {
  std::variant<verdict::Holds, verdict::Fails, verdict::Inconclusive> verdict;
  long checked_points = 0;
  // Largest relative slack rhs - lhs seen on the grid; zero for functions on
  // which the inequality is an identity.
  double max_margin = 0.0;
  std::vector<std::string> warnings;

  bool holds() const noexcept { return std::holds_alternative<verdict::Holds>(verdict); }
  bool fails() const noexcept { return std::holds_alternative<verdict::Fails>(verdict); }
  bool inconclusive() const noexcept { return std::holds_alternative<verdict::Inconclusive>(verdict); }
  const Witness* witness() const noexcept {
    const auto* f = std::get_if<verdict::Fails>(&verdict);
    return f ? &f->witness : nullptr;
  }
};

ConvexityReport is_mn_convex(const FunctionHandle& f, const MeanSpec& m, const MeanSpec& n, const Interval& domain,
                             const GridConfig& cfg = {});
ConvexityReport is_mn_concave(const FunctionHandle& f, const MeanSpec& m, const MeanSpec& n, const Interval& domain,
                              const GridConfig& cfg = {});

// f(M(u, v, l)) = f(M(u, v, 1 - l)) over the weight grid.
ConvexityReport is_symmetric(const FunctionHandle& f, const MeanSpec& m, double u, double v,
                             const GridConfig& cfg = {});

// Recomputes the two sides of a convexity (or, with concave = true,
// concavity) witness from scratch.
std::pair<double, double> recheck_convexity_witness(const FunctionHandle& f, const MeanSpec& m, const MeanSpec& n,
                                                    const Witness& w, bool concave = false);

struct MeanPair {
  MeanSpec inner;
  MeanSpec outer;
  std::string label() const;
};

struct Classification {
  MeanPair pair;
  ConvexityReport report;
};

// The 16 (M, N) pairs over {A, G, H, P:p}.
std::vector<MeanPair> default_catalog(double p = 2.0);

std::vector<Classification> classify(const FunctionHandle& f, const Interval& domain,
                                     const std::vector<MeanPair>& catalog, const GridConfig& cfg = {});

}  // namespace mnconvex
