#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "lplde/closed_forms.hpp"
#include "lplde/engine.hpp"
#include "lplde/errors.hpp"
#include "lplde/pms.hpp"
#include "test_support.hpp"

namespace lplde {
namespace {

using test::rel_diff;

ModelSpec unit_spec(double lambda = 0.0, int order = 3) { return {1.0, 1.0, 1.0, lambda, order}; }

std::vector<double> tau_grid(int n) {
  std::vector<double> taus;
  for (int i = 0; i < n; ++i) taus.push_back(2.0 * std::numbers::pi * (i + 0.37) / n);
  return taus;
}

TEST(EngineInit, ZerothOrder) {
  const ExpansionState a = init({1.0, 1.0, 1.0, 0.0, 0});
  EXPECT_EQ(a.alphas, std::vector<double>{1.0});
  EXPECT_EQ(a.solutions[0], CosineSeries::harmonic(1, 1.0));
  EXPECT_EQ(init({1.0, 1.0, 1.0, 2.0, 0}).alphas[0], 5.0);
  const ExpansionState c = init({2.0, 0.3, 3.0, 0.0, 0});
  EXPECT_EQ(c.alphas[0], 4.0);
  EXPECT_EQ(c.solutions[0], CosineSeries::harmonic(1, 3.0));
}

TEST(EngineInit, RejectsInvalidSpecs) {
  EXPECT_THROW(init({0.0, 1.0, 1.0, 0.0, 3}), InvalidModel);
  EXPECT_THROW(init({1.0, 1.0, 0.0, 0.0, 3}), InvalidModel);
  EXPECT_THROW(init({1.0, 1.0, 1.0, -0.1, 3}), InvalidModel);
  EXPECT_THROW(init({1.0, 1.0, 1.0, 0.0, kMaxOrder + 1}), InvalidModel);
  EXPECT_THROW(init({1.0, 1.0, 1.0, 0.0, -1}), InvalidModel);
  EXPECT_NO_THROW(run({1.0, 1.0, 1.0, 0.0, kMaxOrder}));
}

TEST(EngineDrivingTerm, FirstOrder) {
  const ExpansionState st = init(unit_spec());
  const CosineSeries s = driving_term(st, 1);
  EXPECT_NEAR(s.coefficient(1), -0.75, 1e-15);
  EXPECT_NEAR(s.coefficient(3), -0.25, 1e-15);
  EXPECT_EQ(s.coefficients().size(), 2u);

  EXPECT_TRUE(driving_term(init({1.0, 0.0, 1.0, 0.0, 1}), 1).empty());
  EXPECT_EQ(driving_term(init({1.0, 0.0, 1.0, 1.0, 1}), 1), CosineSeries::harmonic(1, 1.0));
}

TEST(EngineDrivingTerm, OrderOutOfRange) {
  const ExpansionState st = init(unit_spec());
  EXPECT_THROW(driving_term(st, 0), OrderOutOfRange);
  EXPECT_THROW(driving_term(st, 2), OrderOutOfRange);
}

TEST(EngineCancelSecular, FixesAlpha) {
  ExpansionState st = init({1.0, 1.0, 2.0, 0.0, 1});
  EXPECT_NEAR(cancel_secular(st, 1, driving_term(st, 1)), 3.0, 1e-14);
  EXPECT_EQ(st.alphas.size(), 2u);

  ExpansionState free = init({1.3, 0.0, 1.0, 0.7, 1});
  EXPECT_NEAR(cancel_secular(free, 1, driving_term(free, 1)), -0.49, 1e-15);

  const ExpansionState two = run(unit_spec(0.0, 2));
  EXPECT_NEAR(two.alphas[2], -3.0 / 128.0, 1e-15);
}

TEST(EngineCancelSecular, RejectsWrongOrder) {
  ExpansionState st = init(unit_spec());
  EXPECT_THROW(cancel_secular(st, 2, CosineSeries{}), OrderOutOfRange);
}

TEST(EngineSolveOrder, PrintedSolutions) {
  const ExpansionState st = run(unit_spec(0.0, 3));
  const CosineSeries& x1 = st.solutions[1];
  EXPECT_NEAR(x1.coefficient(1), -1.0 / 32, 1e-15);
  EXPECT_NEAR(x1.coefficient(3), 1.0 / 32, 1e-15);

  const CosineSeries& x2 = st.solutions[2];
  EXPECT_NEAR(x2.coefficient(1), 23.0 / 1024, 1e-15);
  EXPECT_NEAR(x2.coefficient(3), -3.0 / 128, 1e-15);
  EXPECT_NEAR(x2.coefficient(5), 1.0 / 1024, 1e-15);

  const CosineSeries& x3 = st.solutions[3];
  EXPECT_NEAR(x3.coefficient(1), -547.0 / 32768, 1e-15);
  EXPECT_NEAR(x3.coefficient(3), 297.0 / 16384, 1e-15);
  EXPECT_NEAR(x3.coefficient(5), -3.0 / 2048, 1e-15);
  EXPECT_NEAR(x3.coefficient(7), 1.0 / 32768, 1e-15);

  EXPECT_TRUE(run({1.0, 0.0, 1.0, 0.0, 1}).solutions[1].empty());
}

// Frozen from a symbolic recursion in the exponential basis z = exp(i tau).
TEST(EngineSolveOrder, FourthOrderMatchesSymbolicOracle) {
  const ExpansionState st = run(unit_spec(0.0, 4));
  const FrequencyResult f = frequency_squared(st);
  EXPECT_NEAR(f.omega_squared, 226829.0 / 131072, 1e-14);
  const CosineSeries& x4 = st.solutions[4];
  EXPECT_NEAR(x4.coefficient(1), 6713.0 / 524288, 1e-15);
  EXPECT_NEAR(x4.coefficient(3), -15121.0 / 1048576, 1e-15);
  EXPECT_NEAR(x4.coefficient(5), 883.0 / 524288, 1e-15);
  EXPECT_NEAR(x4.coefficient(7), -9.0 / 131072, 1e-15);
  EXPECT_NEAR(x4.coefficient(9), 1.0 / 1048576, 1e-15);
}

TEST(EngineSolveOrder, GeneralPointMatchesSymbolicOracle) {
  const ExpansionState st = run({1.5, 2.0, 0.5, 1.0, 4});
  const std::vector<double> alphas{3.25, -0.625, -0.0018028846153846155, -0.0003467085798816568,
                                   -6.73831458736345e-05};
  for (std::size_t n = 0; n < alphas.size(); ++n) EXPECT_LT(rel_diff(st.alphas[n], alphas[n]), 1e-13);
  EXPECT_LT(rel_diff(st.solutions[3].coefficient(1), -9.440030083636777e-05), 1e-12);
  EXPECT_LT(rel_diff(st.solutions[3].coefficient(3), 8.989975677059626e-05), 1e-12);
  EXPECT_LT(rel_diff(st.solutions[3].coefficient(5), 4.444981793354574e-06), 1e-12);
  EXPECT_LT(rel_diff(st.solutions[3].coefficient(7), 5.556227241693218e-08), 1e-12);
}

TEST(EngineSolveOrder, DetectsUncancelledResonance) {
  ExpansionState st = init(unit_spec());
  const CosineSeries s = driving_term(st, 1);
  cancel_secular(st, 1, s);
  EXPECT_THROW(solve_order(st, 1, s), ConsistencyError);
}

TEST(EngineRun, FrequencyExamples) {
  EXPECT_EQ(frequency_squared(run({1.3, 2.0, 0.7, 0.4, 0})).omega_squared, 1.3 * 1.3 + 0.4 * 0.4);
  for (double lambda : {0.0, 0.5, 2.0, 5.0}) {
    EXPECT_NEAR(frequency_squared(run(unit_spec(lambda, 1))).omega_squared, 1.75, 1e-14);
  }
  EXPECT_NEAR(frequency_squared(run(unit_spec(0.0, 3))).omega_squared, 1.744140625, 1e-12);
  const FrequencyResult pms = frequency_squared(run(unit_spec(std::sqrt(0.75), 3)));
  EXPECT_NEAR(pms.omega_squared, 389.0 / 224, 1e-12);
  EXPECT_EQ(pms.method_tag, MethodTag::LPLDE_FIXED_LAMBDA);
  EXPECT_EQ(pms.partials.size(), 4u);
  EXPECT_EQ(pms.partials.back(), pms.omega_squared);
}

TEST(EngineRun, NegativeTotalIsFlagged) {
  const FrequencyResult f = frequency_squared(run({1.0, -4.0, 1.0, 0.0, 1}));
  EXPECT_LT(f.omega_squared, 0.0);
  EXPECT_TRUE(f.nonpositive);
}

TEST(EngineRun, HarmonicLimitIsExact) {
  for (int order : {0, 3, 8}) {
    const ExpansionState st = run({1.7, 0.0, 2.0, 0.0, order});
    EXPECT_EQ(frequency_squared(st).omega_squared, 1.7 * 1.7);
    for (int n = 1; n <= order; ++n) EXPECT_TRUE(st.solutions[n].empty());
  }
}

TEST(EngineRun, GeneralPolynomialForce) {
  // f(x) = -mu x^3 spelled out must agree with the default.
  const ModelSpec spec{1.2, 0.8, 1.1, 0.3, 5};
  const ExpansionState a = run(spec);
  const ExpansionState b = run(spec, Polynomial{0.0, 0.0, 0.0, -0.8});
  EXPECT_EQ(a.alphas, b.alphas);
  // A linear force c x only shifts the frequency: Omega^2 = omega^2 - c exactly at every order >= 1.
  const ExpansionState lin = run(spec, Polynomial{0.0, -0.5});
  EXPECT_NEAR(frequency_squared(lin).omega_squared, 1.44 + 0.5, 1e-14);
}

TEST(EngineResidual, BalancesEveryOrder) {
  const auto taus = tau_grid(100);
  const ResidualReport zero = residual(run({1.1, 0.9, 1.3, 0.2, 0}), taus);
  EXPECT_LE(zero.max_abs, 1e-12 * zero.scale);
  const ResidualReport three = residual(run({1.0, 1.0, 1.0, 0.5, 3}), taus);
  EXPECT_LE(three.max_abs, 1e-10 * three.scale);
  EXPECT_GT(three.scale, 0.0);
}

TEST(EngineResidual, DetectsCorruptedAlpha) {
  ExpansionState st = run({1.0, 1.0, 1.0, 0.5, 3});
  st.alphas[2] += 1e-3;
  const ResidualReport r = residual(st, tau_grid(100));
  EXPECT_GT(r.max_abs, 1e-4 * r.scale);
}

TEST(EngineProperty, MatchesClosedFormsOnRandomSpecs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const ModelSpec spec = test::random_spec(rng);
    const ExpansionState st = run(spec);
    const auto closed = alpha_coeffs(spec);
    for (int n = 1; n <= 3; ++n) {
      ASSERT_LT(rel_diff(st.alphas[n], closed[n]), 1e-10) << "alpha_" << n << " trial " << trial;
    }
  }
}

TEST(EngineProperty, StructureOfSolutions) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const ModelSpec spec = test::random_spec(rng, 6);
    const ExpansionState st = run(spec);
    double total_at_zero = 0.0;
    double magnitude = 0.0;  // round-off in the sum scales with the largest terms
    for (int n = 0; n <= 6; ++n) {
      const CosineSeries& x = st.solutions[n];
      double l1 = 0.0;
      for (const auto& [k, c] : x.coefficients()) l1 += std::abs(c);
      if (n >= 1) EXPECT_NEAR(x.eval(0.0), 0.0, 1e-14 * l1);
      total_at_zero += x.eval(0.0);
      magnitude += l1;
      EXPECT_LE(x.max_harmonic(), 2 * n + 1);
      for (const auto& [k, c] : x.coefficients()) EXPECT_EQ(k % 2, 1) << "even harmonic " << k;
    }
    EXPECT_NEAR(total_at_zero, spec.amplitude, 1e-13 * magnitude);
  }
}

TEST(EngineProperty, FirstOrderIsLambdaInvariant) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const ModelSpec spec = test::random_spec(rng, 1);
    const double expected = spec.omega * spec.omega + 0.75 * spec.amplitude * spec.amplitude * spec.mu;
    for (double lambda : {0.0, 0.3, 1.0, 2.5}) {
      const double w2 = frequency_squared(run(spec.with_lambda(lambda))).omega_squared;
      EXPECT_LT(rel_diff(w2, expected), 1e-14);
    }
  }
}

TEST(EngineProperty, ResidualUpToOrderSix) {
  std::mt19937_64 rng(17);
  const auto taus = tau_grid(100);
  for (int order = 0; order <= 6; ++order) {
    for (int trial = 0; trial < 10; ++trial) {
      const ResidualReport r = residual(run(test::random_spec(rng, order)), taus);
      ASSERT_LE(r.max_abs, 1e-10 * r.scale) << "order " << order;
    }
  }
}

TEST(EnginePms, NumericSearchFindsClosedForm) {
  const PmsResult r = pms_lambda_numeric(unit_spec());
  EXPECT_TRUE(r.stationary);
  EXPECT_NEAR(r.lambda, std::sqrt(3.0) / 2.0, 1e-6);
  EXPECT_NEAR(r.omega_squared, 389.0 / 224, 1e-10);

  const PmsResult big = pms_lambda_numeric({1.0, 3.0, 2.0, 0.0, 3});
  EXPECT_NEAR(big.lambda, 3.0, 1e-6);
}

TEST(EnginePms, FallsBackWithoutInteriorStationaryPoint) {
  // Order 1 is flat in lambda, order 2 is monotone, mu = 0 has no dependence.
  EXPECT_FALSE(pms_lambda_numeric(unit_spec(0.0, 1)).stationary);
  const PmsResult two = pms_lambda_numeric(unit_spec(0.0, 2));
  EXPECT_FALSE(two.stationary);
  EXPECT_EQ(two.lambda, 0.0);
  EXPECT_FALSE(pms_lambda_numeric({1.0, 0.0, 1.0, 0.0, 3}).stationary);
  EXPECT_FALSE(pms_lambda_numeric({1.0, -0.5, 1.0, 0.0, 3}).stationary);
}

TEST(EnginePms, FlattestOfSeveralStationaryPoints) {
  // f' = -l (l - 1)(l - 3); f'' is 2 at l = 1 and -6 at l = 3.
  auto f = [](double l) { return -std::pow(l, 4) / 4.0 + 4.0 * std::pow(l, 3) / 3.0 - 1.5 * l * l; };
  const PmsResult r = find_pms_lambda(f, 4.0);
  EXPECT_TRUE(r.stationary);
  EXPECT_NEAR(r.lambda, 1.0, 1e-6);
  EXPECT_NEAR(r.curvature, 2.0, 1e-3);
}

}  // namespace
}  // namespace lplde
