#pragma once

// Sampling checks for the weighted-mean axioms and the two derived identities.
//
// Every axiom is evaluated as a residual over a sample of reals. Identities
// use |lhs - rhs| / max(1, |rhs|); inequalities use the relative amount by
// which they are violated (zero when they hold). A check passes when the
// worst residual stays within max(tolerance, 1e-12).
//
// The weight-affinity axiom is stated in the library convention
// M(u, v, 0) = u:  M(u, v, (1-s) l1 + s l2) = M(M(u, v, l1), M(u, v, l2), s).

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mnconvex/means.hpp"

namespace mnconvex {

enum class AxiomId { WM1, WM2, WM3, WM4, WM5, WM6, WM7, WM8, P1, P2 };

inline constexpr AxiomId kAllAxioms[] = {AxiomId::WM1, AxiomId::WM2, AxiomId::WM3, AxiomId::WM4,
                                         AxiomId::WM5, AxiomId::WM6, AxiomId::WM7, AxiomId::WM8,
                                         AxiomId::P1,  AxiomId::P2};

std::string_view to_string(AxiomId id);

// Number of reals in a sample for the given axiom, and their meaning:
//   WM1 (u, v, l)            WM2 (u, l)              WM3 (u, v, l)
//   WM4 (u, v, l, alpha)     WM5 (u, w, v, omega, l) with u <= w, v <= omega
//   WM6 (u, v)               WM7 (u, v, z, w, l, s)  WM8 (u, v, l1, l2, s)
//   P1  (a, b, s, l)         P2  (a, b, l)
std::size_t sample_arity(AxiomId id);

// Black-box weighted mean, M(u, v, lambda).
using WeightedMean = std::function<double(double, double, double)>;

WeightedMean as_weighted_mean(const MeanSpec& spec);

struct SampleConfig {
  std::uint64_t seed = 0;
  int count = 1000;
  Interval value_range{0.1, 10.0};
  double tolerance = 1e-9;
};

struct AxiomReport {
  AxiomId axiom;
  bool holds = true;
  double worst_residual = 0.0;
  std::vector<double> worst_sample;
  int samples = 0;
  double tolerance = 1e-9;
};

// A mean evaluation failed on a specific sample.
class AxiomEvaluationError : public std::domain_error {
 public:
  AxiomEvaluationError(AxiomId axiom, std::vector<double> sample, const std::string& cause);
  AxiomId axiom() const noexcept { return axiom_; }
  const std::vector<double>& sample() const noexcept { return sample_; }

 private:
  AxiomId axiom_;
  std::vector<double> sample_;
};

// Residual of one axiom at one sample. check_axiom reports the maximum of
// this over its samples, so a report's worst_sample re-evaluates to its
// worst_residual.
double axiom_residual(const WeightedMean& mean, AxiomId axiom, std::span<const double> sample);

// Deterministic sample list for (axiom, cfg): structured corner cases first,
// then uniform draws from one seeded stream. The list for count n is a
// prefix of the list for any count m > n.
std::vector<std::vector<double>> draw_samples(AxiomId axiom, const SampleConfig& cfg);

AxiomReport check_axiom(const WeightedMean& mean, AxiomId axiom, const SampleConfig& cfg);
AxiomReport check_axiom(const MeanSpec& spec, AxiomId axiom, const SampleConfig& cfg);

// Restricted to P1 / P2; throws std::invalid_argument for other ids.
AxiomReport check_identity(const MeanSpec& spec, AxiomId which, const SampleConfig& cfg);

std::vector<AxiomReport> check_all(const MeanSpec& spec, const SampleConfig& cfg);

}  // namespace mnconvex
