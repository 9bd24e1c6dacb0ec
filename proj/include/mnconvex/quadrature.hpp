#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature on finite intervals.
//
// The interval with the largest error estimate is bisected until the summed
// estimates fall below the requested absolute tolerance. The per-interval
// estimate is |K15 - G7|, which is pessimistic for smooth integrands since
// K15 is far more accurate than G7.

#include <functional>
#include <stdexcept>

namespace mnconvex {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

struct QuadOptions {
  long max_evaluations = 1'000'000;
};

// The integrand left its domain (or produced a non-finite value) at abscissa().
class IntegrationError : public std::domain_error {
 public:
  IntegrationError(double abscissa, const std::string& cause);
  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double tol,
                     const QuadOptions& options = {});

}  // namespace mnconvex
