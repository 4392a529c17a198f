#include "phasekit/stochastic.hpp"
#include "phasekit/rashomon.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace phasekit;

namespace {

double sample_mean(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// sd of the phase-type law from E[T^2] = 2 sum A_i / lambda_i^2
double analytic_sd(const PhaseTypeParams& p) {
  double m2 = 0;
  for (int i = 0; i < p.N(); ++i) m2 += 2 * p.A[i] / (p.lambda[i] * p.lambda[i]);
  const double m = mean_time(p);
  return std::sqrt(m2 - m * m);
}

}  // namespace

TEST(Stochastic, ExponentialMean) {
  const auto tr = simulate_events(build_generator(ModelId::chain(1), {2}), 100000, 1);
  ASSERT_EQ(tr.gaps.size(), 100000u);
  EXPECT_NEAR(sample_mean(tr.gaps), 0.5, 3 * 0.5 / std::sqrt(1e5));
  for (double g : tr.gaps) ASSERT_GT(g, 0);
}

TEST(Stochastic, M9Mean) {
  const auto g = build_generator(ModelId::m9(), {1, 2, 3, 4, 5});
  const auto p = phase_type_params(g);
  const auto tr = simulate_events(g, 100000, 2);
  EXPECT_NEAR(sample_mean(tr.gaps), 1.2, 3 * analytic_sd(p) / std::sqrt(1e5));
}

TEST(Stochastic, DeterministicAcrossRunsAndThreads) {
  const auto g = build_generator(ModelId::m4(), {1, 2, 3, 4, 5});
  SimulationOptions one;
  one.threads = 1;
  one.chunk = 1000;
  SimulationOptions many = one;
  many.threads = 4;
  const auto a = simulate_events(g, 10000, 42, one);
  const auto b = simulate_events(g, 10000, 42, many);
  const auto c = simulate_events(g, 10000, 42, one);
  EXPECT_EQ(a.gaps, b.gaps);
  EXPECT_EQ(a.gaps, c.gaps);
  EXPECT_NE(a.gaps, simulate_events(g, 10000, 43, one).gaps);
}

TEST(Stochastic, NonErgodicGuard) {
  // state 3 bounces to state 1 almost surely; the exit is essentially never taken
  Mat<double> Q = Mat<double>::Zero(4, 4);
  Q(0, 2) = 1e6;
  Q(1, 2) = 1;
  Q(2, 0) = 1e6;
  Q(2, 1) = 1;
  Q(2, 3) = 1e-9;
  for (int i = 0; i < 3; ++i) Q(i, i) = -Q.row(i).sum();
  SimulationOptions opt;
  opt.max_jumps = 1000;
  try {
    simulate_events(make_generator<double>(Q, 3), 10, 1, opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonErgodic);
  }
}

TEST(Stochastic, EmpiricalSurvival) {
  EventTrace t;
  t.gaps = {3, 1, 2};
  const auto s = empirical_survival(t);
  EXPECT_DOUBLE_EQ(s(1.5), 2.0 / 3);
  EXPECT_DOUBLE_EQ(s(0), 1);
  EXPECT_DOUBLE_EQ(s(3.5), 0);
  EXPECT_DOUBLE_EQ(s(1), 2.0 / 3);  // right-continuous
  EXPECT_THROW(empirical_survival(EventTrace{}), Error);
}

TEST(Stochastic, KsStatistic) {
  const auto g = build_generator(ModelId::m9(), {1, 2, 3, 4, 5});
  const auto p = phase_type_params(g);
  const auto tr = simulate_events(g, 100000, 3);
  EXPECT_LE(ks_statistic(tr, p), std::sqrt(std::log(2 / 0.01) / (2 * 1e5)));
  const auto slow = simulate_events(build_generator(ModelId::chain(1), {1}), 100000, 4);
  EXPECT_GT(ks_statistic(slow, PhaseTypeParams{{-10}, {1}}), 0.5);
  // a single gap against its own exponential: the two one-sided limits bracket S
  EventTrace one;
  one.gaps = {std::log(2.0)};
  EXPECT_NEAR(ks_statistic(one, PhaseTypeParams{{-1}, {1}}), 0.5, 1e-15);
}

TEST(Stochastic, TraceCsvRoundTrip) {
  EventTrace t;
  t.gaps = {0.1, 1.0 / 3, 2e-300, 12345.678901234567};
  std::stringstream ss;
  write_trace_csv(ss, t);
  const auto back = read_trace_csv(ss);
  EXPECT_EQ(back.gaps, t.gaps);
  std::stringstream bad("time\n1\n");
  EXPECT_THROW(read_trace_csv(bad), Error);
  std::stringstream neg("gap\n1\n-2\n");
  EXPECT_THROW(read_trace_csv(neg), Error);
}

TEST(Stochastic, FitSingleExponential) {
  const auto tr = simulate_events(build_generator(ModelId::chain(1), {2}), 10000, 5);
  const auto fit = fit_multiexp(tr, 1);
  ASSERT_EQ(fit.params.N(), 1);
  EXPECT_NEAR(fit.params.lambda[0], -2, 3 * 2 / std::sqrt(1e4));
  EXPECT_NEAR(fit.params.lambda[0], -1 / sample_mean(tr.gaps), 1e-6);
  EXPECT_DOUBLE_EQ(fit.params.A[0], 1);
  EXPECT_TRUE(fit.converged);
}

TEST(Stochastic, FitWellSeparatedM9) {
  const auto g = build_generator(ModelId::m9(), {0.05, 2, 5, 10, 20});
  const auto truth = phase_type_params(g);
  const auto tr = simulate_events(g, 1000000, 9);
  const auto fit = fit_multiexp(tr, 3);
  for (int i = 0; i < 3; ++i) {
    EXPECT_LE(std::abs(fit.params.lambda[i] / truth.lambda[i] - 1), 0.10) << i;
    EXPECT_LE(std::abs(fit.params.A[i] - truth.A[i]), 0.05) << i;
  }
  EXPECT_GE(fit.log_likelihood, log_likelihood(tr.gaps, truth) - 1e-6 * 1e6);
}

TEST(Stochastic, FitNesting) {
  const auto tr = simulate_events(build_generator(ModelId::chain(1), {2}), 5000, 6);
  const auto f1 = fit_multiexp(tr, 1);
  const auto f2 = fit_multiexp(tr, 2);
  EXPECT_GE(f2.log_likelihood, f1.log_likelihood - 1e-6 * 5000);
}

TEST(Stochastic, FitRefusesSmallTraces) {
  const auto tr = simulate_events(build_generator(ModelId::chain(1), {2}), 10, 7);
  try {
    fit_multiexp(tr, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientData);
  }
  EXPECT_NO_THROW(fit_multiexp(tr, 1));
}
