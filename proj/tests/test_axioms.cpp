#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <cmath>

#include "mnconvex/axioms.hpp"

using namespace mnconvex;

namespace {

double broken_mean(double u, double v, double l) { return (1.0 - l * l) * u + l * l * v; }

std::vector<MeanSpec> catalog_means() {
  std::vector<MeanSpec> out = {MeanSpec::arithmetic(), MeanSpec::geometric(), MeanSpec::harmonic()};
  for (double p : {-2.0, -1.0, 0.5, 2.0, 3.0}) out.push_back(MeanSpec::power(p));
  return out;
}

}  // namespace

TEST(Axioms, CatalogMeansSatisfyEveryAxiom) {
  SampleConfig cfg;
  cfg.seed = 42;
  for (const auto& m : catalog_means()) {
    for (const auto& r : check_all(m, cfg)) {
      EXPECT_TRUE(r.holds) << m.to_string() << " " << to_string(r.axiom) << " residual " << r.worst_residual;
      EXPECT_EQ(r.samples, cfg.count);
    }
  }
}

TEST(Axioms, QuasiArithmeticMeanSatisfiesCoreAxioms) {
  SampleConfig cfg;
  cfg.count = 100;
  cfg.tolerance = 1e-8;
  const MeanSpec qa = MeanSpec::quasi_arithmetic(parse("exp(x/4)"));
  for (AxiomId id : {AxiomId::WM1, AxiomId::WM2, AxiomId::WM3, AxiomId::WM5, AxiomId::WM8}) {
    EXPECT_TRUE(check_axiom(qa, id, cfg).holds) << to_string(id);
  }
}

TEST(Axioms, BrokenMeanFailsWM1WithReplayableWitness) {
  SampleConfig cfg;
  cfg.seed = 3;
  const AxiomReport r = check_axiom(WeightedMean(broken_mean), AxiomId::WM1, cfg);
  ASSERT_FALSE(r.holds);
  ASSERT_EQ(r.worst_sample.size(), sample_arity(AxiomId::WM1));
  const double replay = axiom_residual(broken_mean, AxiomId::WM1, r.worst_sample);
  EXPECT_EQ(replay, r.worst_residual);
  EXPECT_GT(replay, cfg.tolerance);
}

TEST(Axioms, BrokenMeanStillIdempotent) {
  EXPECT_TRUE(check_axiom(WeightedMean(broken_mean), AxiomId::WM2, {}).holds);
}

TEST(Axioms, IdentityOnlyEntryPoint) {
  EXPECT_TRUE(check_identity(MeanSpec::geometric(), AxiomId::P1, {}).holds);
  EXPECT_TRUE(check_identity(MeanSpec::harmonic(), AxiomId::P2, {}).holds);
  EXPECT_THROW(check_identity(MeanSpec::geometric(), AxiomId::WM1, {}), std::invalid_argument);
}

TEST(Axioms, NonMonotoneWeightFailsWM6) {
  const WeightedMean wiggle = [](double u, double v, double l) {
    const double t = l + 0.2 * std::sin(6.283185307179586 * l) * l * (1.0 - l) * 4.0;
    const double w = std::clamp(t, 0.0, 1.0);
    return (1.0 - w) * u + w * v;
  };
  EXPECT_FALSE(check_axiom(wiggle, AxiomId::WM6, {}).holds);
}

TEST(Axioms, DiscontinuousWeightFailsWM6) {
  const WeightedMean jump = [](double u, double v, double l) {
    const double w = l < 0.5 ? 0.5 * l : 0.5 + 0.5 * l;
    return (1.0 - w) * u + w * v;
  };
  EXPECT_FALSE(check_axiom(jump, AxiomId::WM6, {}).holds);
}

TEST(Axioms, NonHomogeneousMeanFailsWM4) {
  const WeightedMean shifted = [](double u, double v, double l) {
    return std::exp((1.0 - l) * std::log(u + 1.0) + l * std::log(v + 1.0)) - 1.0;
  };
  EXPECT_TRUE(check_axiom(shifted, AxiomId::WM1, {}).holds);
  EXPECT_FALSE(check_axiom(shifted, AxiomId::WM4, {}).holds);
}

TEST(Axioms, EvaluationFailureCarriesSample) {
  const WeightedMean throwing = [](double, double, double) -> double { throw MeanDomainError("boom"); };
  try {
    check_axiom(throwing, AxiomId::WM3, {});
    FAIL();
  } catch (const AxiomEvaluationError& e) {
    EXPECT_EQ(e.axiom(), AxiomId::WM3);
    EXPECT_EQ(e.sample().size(), sample_arity(AxiomId::WM3));
  }
}

TEST(AxiomsProperty, SamplesArePrefixStable) {
  for (AxiomId id : kAllAxioms) {
    SampleConfig small;
    small.seed = 9;
    small.count = 50;
    SampleConfig large = small;
    large.count = 400;
    const auto a = draw_samples(id, small);
    const auto b = draw_samples(id, large);
    ASSERT_EQ(a.size(), 50u);
    ASSERT_EQ(b.size(), 400u);
    for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(a[i], b[i]) << to_string(id) << " " << i;
  }
}

TEST(AxiomsProperty, WorstResidualIsMonotoneInSampleCount) {
  for (AxiomId id : {AxiomId::WM1, AxiomId::WM4, AxiomId::WM7}) {
    double prev = 0.0;
    for (int count : {10, 100, 1000}) {
      SampleConfig cfg;
      cfg.count = count;
      const double worst = check_axiom(WeightedMean(broken_mean), id, cfg).worst_residual;
      EXPECT_GE(worst, prev) << to_string(id);
      prev = worst;
    }
  }
}

TEST(AxiomsProperty, SamplesRespectRangeAndArity) {
  SampleConfig cfg;
  cfg.seed = 5;
  cfg.value_range = Interval(0.5, 2.0);
  for (AxiomId id : kAllAxioms) {
    for (const auto& s : draw_samples(id, cfg)) {
      ASSERT_EQ(s.size(), sample_arity(id));
    }
  }
  for (const auto& s : draw_samples(AxiomId::WM5, cfg)) {
    EXPECT_LE(s[0], s[1]);
    EXPECT_LE(s[2], s[3]);
  }
}

TEST(Axioms, SuiteRuntime) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& m : catalog_means()) check_all(m, {});
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(seconds, 10.0);
}
