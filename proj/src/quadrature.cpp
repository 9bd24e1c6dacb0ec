#include "mnconvex/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

namespace mnconvex {

namespace {

// Kronrod abscissae on [-1, 1] (descending, last is the centre); odd indices
// are the 7-point Gauss nodes.
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double kGaussWeights[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                     0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kStencil = 15;
constexpr double kRoundoffFactor = 50.0 * std::numeric_limits<double>::epsilon();

struct Segment {
  double a;
  double b;
  double value;
  double error;
  double abs_value;  // integral of |f| by the Kronrod rule
  bool operator<(const Segment& other) const { return error < other.error; }
};

std::string format_cause(double x, const std::string& cause) {
  std::ostringstream os;
  os.precision(17);
  os << "integrand failed at abscissa " << x << ": " << cause;
  return os.str();
}

class Evaluator {
 public:
  explicit Evaluator(const std::function<double(double)>& f) : f_(f) {}

  double operator()(double x) {
    ++count;
    double y = 0.0;
    try {
      y = f_(x);
    } catch (const std::domain_error& e) {
      throw IntegrationError(x, e.what());
    }
    if (!std::isfinite(y)) throw IntegrationError(x, "non-finite integrand value");
    return y;
  }

  long count = 0;

 private:
  const std::function<double(double)>& f_;
};

Segment gauss_kronrod(Evaluator& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  double abs_sum = kKronrodWeights[7] * std::fabs(fc);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double lo = f(centre - dx);
    const double hi = f(centre + dx);
    kronrod += kKronrodWeights[i] * (lo + hi);
    abs_sum += kKronrodWeights[i] * (std::fabs(lo) + std::fabs(hi));
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (lo + hi);
  }
  kronrod *= half;
  gauss *= half;
  abs_sum *= std::fabs(half);
  // Floor the estimate at the rounding level of the rule itself.
  const double error = std::max(std::fabs(kronrod - gauss), kRoundoffFactor * abs_sum);
  return {a, b, kronrod, error, abs_sum};
}

}  // namespace

IntegrationError::IntegrationError(double abscissa, const std::string& cause)
    : std::domain_error(format_cause(abscissa, cause)), abscissa_(abscissa) {}

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double tol,
                     const QuadOptions& options) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw std::invalid_argument("integration bounds require finite a < b");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("integration tolerance must be positive");

  Evaluator eval(f);
  std::priority_queue<Segment> work;
  work.push(gauss_kronrod(eval, a, b));
  double total_error = work.top().error;
  double total_abs = work.top().abs_value;
  bool converged = false;

  for (;;) {
    // Requests below the rounding level of the summed rules cannot be met.
    const double roundoff = 2.0 * kRoundoffFactor * total_abs;
    if (total_error <= std::max(tol, roundoff)) {
      converged = true;
      break;
    }
    if (eval.count + 2 * kStencil > options.max_evaluations) break;
    const Segment worst = work.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) break;
    work.pop();
    const Segment left = gauss_kronrod(eval, worst.a, mid);
    const Segment right = gauss_kronrod(eval, mid, worst.b);
    total_error += left.error + right.error - worst.error;
    total_abs += left.abs_value + right.abs_value - worst.abs_value;
    work.push(left);
    work.push(right);
  }

  // Re-sum from scratch to shed the drift of the incremental updates.
  std::vector<Segment> segments;
  segments.reserve(work.size());
  while (!work.empty()) {
    segments.push_back(work.top());
    work.pop();
  }
  std::sort(segments.begin(), segments.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
  QuadResult result;
  for (const Segment& s : segments) {
    result.value += s.value;
    result.error_estimate += s.error;
  }
  result.evaluations = eval.count;
  result.converged = converged;
  return result;
}

}  // namespace mnconvex
