#include "phasekit/rashomon.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace phasekit;

namespace {

SymmetricMoments m9_worked() { return SymmetricMoments::from_flat({-15, 27, -10, -5, 60}); }

SymmetricMoments forward(const ModelId& m, const std::vector<double>& k) {
  return moments_cast<double>(moments_from_rates<quad>(m, vector_cast<quad>(k)));
}

void expect_vec(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], tol * std::max(1.0, std::abs(want[i]))) << i;
}

}  // namespace

TEST(Rashomon, MarkersWorkedExamples) {
  const auto m9 = markers(ModelId::m9(), {1, 2, 3, 4, 5});
  expect_vec(m9.T_life, {1, 0.5, 1.0 / 7}, 1e-14);
  expect_vec(m9.p, {0.5, 1.0 / 3, 1.0 / 6}, 1e-14);
  const auto m8 = markers(ModelId::m8(), {1, 2, 1.5, 5.5, 5});
  expect_vec(m8.T_life, {1, 0.5, 1.0 / 7}, 1e-14);
  expect_vec(m8.p, {0.25, 7.0 / 12, 1.0 / 6}, 1e-14);
  const auto ch = markers(ModelId::chain(4), std::vector<double>(7, 1.0));
  expect_vec(ch.p, {0.25, 0.25, 0.25, 0.25}, 1e-14);
}

TEST(Rashomon, MarkersMatchTableOne) {
  std::mt19937_64 rng(2);
  for (auto kind : {ModelKind::M2, ModelKind::M4, ModelKind::M8, ModelKind::M9}) {
    const ModelId model{kind, 0};
    for (int t = 0; t < 500; ++t) {
      const auto k = oracle::log_uniform(rng, 5, 0.01, 100);
      const auto mk = markers(model, k);
      const auto tab = oracle::table_one(kind, k);
      double sp = 0;
      for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(1 / mk.T_life[i], tab.inv_T[i], 1e-10 * tab.inv_T[i]);
        EXPECT_GT(mk.p[i], 0);
        EXPECT_LT(mk.p[i], 1);
        sp += mk.p[i];
      }
      EXPECT_NEAR(sp, 1, 1e-12);
      EXPECT_NEAR(mk.p[2], tab.p3, 1e-10 * tab.p3);
    }
  }
}

TEST(Rashomon, SingularSteadyState) {
  try {
    markers(ModelId::m9(), {1, 2, 0, 0, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularSteadyState);
  }
}

TEST(Rashomon, Sigma) {
  const std::vector<double> k{1, 2, 3, 4, 5};
  EXPECT_EQ(sigma_m9(k), (std::vector<double>{2, 1, 4, 3, 5}));
  EXPECT_EQ(sigma_m9(sigma_m9(k)), k);
  EXPECT_EQ(sigma_m9(std::vector<double>{2, 2, 7, 7, 3}), (std::vector<double>{2, 2, 7, 7, 3}));
  EXPECT_LE(roundtrip_residual(ModelId::m9(), sigma_m9(k), forward(ModelId::m9(), k)), 1e-14);
}

TEST(Rashomon, MapsWorkedExamples) {
  expect_vec(map_m9_to_m8<double>({1, 2, 3, 4, 5}), {1, 2, 1.5, 5.5, 5}, 1e-15);
  expect_vec(map_m9_to_m4<double>({2, 1, 4, 3, 5}), {3.0 / 7, 11.0 / 7, 1, 7, 5}, 1e-15);
  expect_vec(map_m8_to_m9(map_m9_to_m8<double>({1, 2, 3, 4, 5})), {1, 2, 3, 4, 5}, 1e-10);
  expect_vec(map_m4_to_m9(map_m9_to_m4<double>({2, 1, 4, 3, 5})), {2, 1, 4, 3, 5}, 1e-10);
  const auto m = m9_worked();
  EXPECT_LE(roundtrip_residual(ModelId::m8(), {1, 2, 1.5, 5.5, 5}, m), 1e-12);
  EXPECT_LE(roundtrip_residual(ModelId::m4(), {3.0 / 7, 11.0 / 7, 1, 7, 5}, m), 1e-12);
}

TEST(Rashomon, MapDomainViolations) {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  EXPECT_EQ(code([] { map_m9_to_m8<double>({2, 1, 3, 4, 5}); }), ErrorCode::DomainViolation);
  EXPECT_EQ(code([] { map_m9_to_m4<double>({1, 2, 3, 4, 5}); }), ErrorCode::DomainViolation);
  EXPECT_EQ(code([] { map_m9_to_m8<double>({1, 2, -3, 4, 5}); }), ErrorCode::DomainViolation);
  // an M8 point whose preimage would need k4 < 0
  EXPECT_EQ(code([] { map_m8_to_m9<double>({1, 2, 10, 1, 5}); }), ErrorCode::DomainViolation);
}

TEST(Rashomon, VariantsOfWorkedExample) {
  const auto rep = enumerate_variants(m9_worked());
  int m9_valid = 0;
  bool has_m8 = false, has_m4 = false;
  for (const auto& e : rep.entries) {
    if (!e.valid) continue;
    EXPECT_NEAR(e.solution.rates[4], 5, 1e-12);
    EXPECT_NEAR(e.markers->T_life[2], 1.0 / 7, 1e-12);
    EXPECT_NEAR(e.markers->p[2], 1.0 / 6, 1e-12);
    if (e.solution.model == ModelId::m9()) ++m9_valid;
    if (e.solution.model == ModelId::m8() && oracle::rel_err(e.solution.rates, {1, 2, 1.5, 5.5, 5}) < 1e-10) has_m8 = true;
    if (e.solution.model == ModelId::m4() && oracle::rel_err(e.solution.rates, {3.0 / 7, 11.0 / 7, 1, 7, 5}) < 1e-10)
      has_m4 = true;
  }
  EXPECT_EQ(m9_valid, 2);
  EXPECT_TRUE(has_m8);
  EXPECT_TRUE(has_m4);
  EXPECT_TRUE(rep.constraints_ok);
  EXPECT_EQ(rep.mappings.size(), 2u);
  EXPECT_TRUE(rep.mappings_ok);
  EXPECT_GT(rep.delta_p[0], 0);
  EXPECT_LE(rep.delta_p[2], 1e-12);
}

TEST(Rashomon, VariantsOfM2Rates) {
  const std::vector<double> k{1, 2, 1.5, 0.5, 3};
  const auto p = phase_type_params(build_generator(ModelId::m2(), k));
  const auto rep = enumerate_variants(p);
  int m2 = 0;
  for (const auto& e : rep.entries)
    if (e.solution.model == ModelId::m2()) {
      ++m2;
      EXPECT_TRUE(e.valid);
      EXPECT_LE(oracle::rel_err(e.solution.rates, k), 1e-9);
    }
  EXPECT_EQ(m2, 1);
  EXPECT_TRUE(rep.constraints_ok);
}

TEST(Rashomon, VariantsOutsideEveryStratum) {
  SymmetricMoments neg;
  ExperimentConfig cfg;
  for (std::uint64_t i = 0;; ++i) {
    neg = moments(draw_experiment_sample(cfg, i).params);
    if (generic_discriminant(neg.L[0], neg.L[2], neg.S[0], neg.S[1]) < 0) break;
  }
  VariantOptions opt;
  opt.models = {ModelId::m4(), ModelId::m8(), ModelId::m9()};
  const auto rep = enumerate_variants(neg, opt);
  EXPECT_EQ(rep.n_valid, 0);
  EXPECT_TRUE(rep.entries.empty());
  EXPECT_EQ(rep.diagnostics.size(), 3u);
}

TEST(Rashomon, SampleEvaluation) {
  ExperimentConfig cfg;
  const auto o = evaluate_sample(m9_worked(), cfg);
  EXPECT_TRUE(o.retained);
  EXPECT_GT(o.delta[0], 0);  // p1 ranges over 0.5 (M9) and 0.25 (M8 image) among others
  EXPECT_FALSE(o.zero[0]);
  bool half = false, quarter = false;
  for (const auto& im : o.instances) {
    half = half || std::abs(im.p1 - 0.5) < 1e-12;
    quarter = quarter || std::abs(im.p1 - 0.25) < 1e-12;
  }
  EXPECT_TRUE(half);
  EXPECT_TRUE(quarter);
}

TEST(Rashomon, StrictAdmissionIsSubset) {
  ExperimentConfig real, strict;
  strict.admission = Admission::Strict;
  real.n_samples = strict.n_samples = 3000;
  const auto a = discrimination_experiment(real);
  const auto b = discrimination_experiment(strict);
  EXPECT_LE(b.n_retained, a.n_retained);
}

TEST(Rashomon, ExperimentDeterministicAcrossThreads) {
  ExperimentConfig cfg;
  cfg.n_samples = 4000;
  cfg.threads = 1;
  const auto a = discrimination_experiment(cfg);
  cfg.threads = 5;
  const auto b = discrimination_experiment(cfg);
  EXPECT_EQ(a.n_retained, b.n_retained);
  EXPECT_EQ(a.zero_count, b.zero_count);
  ASSERT_EQ(a.histograms.size(), b.histograms.size());
  for (std::size_t i = 0; i < a.histograms.size(); ++i) {
    EXPECT_EQ(a.histograms[i].edges, b.histograms[i].edges);
    EXPECT_EQ(a.histograms[i].counts, b.histograms[i].counts);
  }
  std::ostringstream sa, sb;
  write_histogram_csv(sa, a);
  write_histogram_csv(sb, b);
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_EQ(sa.str().substr(0, 26), "marker,bin_lo,bin_hi,count");
}
