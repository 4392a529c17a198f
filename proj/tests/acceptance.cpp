// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include "phasekit/phasekit.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace phasekit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const ModelId kSolvable[] = {ModelId::m2(), ModelId::m4(), ModelId::m8(), ModelId::m9()};

// 1: forward (eigen path, quad) then the generic closed forms.
Outcome round_trip_generic() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1001);
  bool ok = true;
  double worst = 0;
  int bad_count = 0, draws = 0;
  for (const auto& model : kSolvable) {
    int used = 0;
    while (used < 1000) {
      const auto k = oracle::log_uniform(rng, 5, 1e-2, 1e2);
      BasicSymmetricMoments<quad> m;
      try {
        m = moments(phase_type_params(generator_cast<quad>(build_generator(model, k))));
      } catch (const Error&) {
        continue;  // complex or degenerate spectrum
      }
      ++used;
      ++draws;
      std::vector<BasicInverseSolution<quad>> sols;
      try {
        sols = invert_generic<quad>(model, m);
      } catch (const Error&) {
        ok = false;
        ++bad_count;
        continue;
      }
      const quad d = generic_discriminant(m.L[0], m.L[2], m.S[0], m.S[1]);
      const std::size_t want = model == ModelId::m2() ? 1 : (d > 0 ? 2 : sols.size());
      double best = 1e300;
      for (const auto& s : sols) best = std::min(best, oracle::rel_err(vector_cast<double>(s.rates), k));
      worst = std::max(worst, best);
      if (sols.size() != want || best > 1e-8) {
        ok = false;
        ++bad_count;
      }
    }
  }
  const double secs = seconds_since(t0);
  return {ok && secs < 30,
          fmt("%d draws, %d failures, worst rel err %.2e, %.1f s", draws, bad_count, worst, secs)};
}

// 2: unbranched chains N = 1..8 through the high-precision recursion.
Outcome round_trip_unbranched() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1002);
  bool ok = true;
  double worst = 0;
  int bad_count = 0;
  for (int n = 1; n <= 8; ++n) {
    int used = 0;
    while (used < 200) {
      const auto k = oracle::log_uniform(rng, 2 * n - 1, 1e-2, 1e2);
      BasicPhaseTypeParams<wide> p;
      try {
        p = phase_type_params(generator_cast<wide>(build_generator(ModelId::chain(n), k)));
      } catch (const Error&) {
        continue;
      }
      ++used;
      try {
        const auto s = invert_unbranched<wide>(n, p);
        const double e = oracle::rel_err(vector_cast<double>(s.rates), k);
        worst = std::max(worst, e);
        if (e > 1e-6) {
          ok = false;
          ++bad_count;
        }
      } catch (const Error&) {
        ok = false;
        ++bad_count;
      }
    }
  }
  const double secs = seconds_since(t0);
  return {ok && secs < 30, fmt("1600 draws, %d failures, worst rel err %.2e, %.1f s", bad_count, worst, secs)};
}

// 3: M3 moments lie on the hypersurface and the family reproduces them.
Outcome m3_non_solvable() {
  std::mt19937_64 rng(1003);
  bool ok = true;
  double worst_h = 0, worst_res = 0;
  std::size_t fewest = 1000;
  int used = 0;
  GenericOptions opt;
  opt.k3_grid = {0.1, 0.5, 1, 5, 10};
  while (used < 100) {
    const auto k = oracle::log_uniform(rng, 5, 1e-1, 1e1);
    PhaseTypeParams p;
    try {
      p = precise_phase_type_params(build_generator(ModelId::m3(), k));
    } catch (const Error&) {
      continue;
    }
    ++used;
    const auto m = moments_cast<double>(moments(params_cast<quad>(p)));
    const double L1 = m.L[0], L2 = m.L[1], L3 = m.L[2], S1 = m.S[0], S2 = m.S[1];
    const double h = L1 * S1 * S2 - L2 * S1 * S1 + L3 * S1 - S2 * S2;
    const double scale = std::abs(L1 * S1 * S2) + std::abs(L2 * S1 * S1) + std::abs(L3 * S1) + S2 * S2;
    worst_h = std::max(worst_h, std::abs(h) / scale);
    if (std::abs(h) > 1e-9 * scale) ok = false;
    std::size_t members = 0;
    std::vector<std::vector<double>> seen;
    try {
      for (const auto& s : invert_generic(ModelId::m3(), m, opt)) {
        const double r = s.residual;
        worst_res = std::max(worst_res, r);
        bool distinct = true;
        for (const auto& o : seen) distinct = distinct && oracle::rel_err(s.rates, o) > 1e-6;
        if (r <= 1e-9 && distinct) {
          ++members;
          seen.push_back(s.rates);
        }
      }
    } catch (const Error&) {
    }
    fewest = std::min(fewest, members);
    if (members < 3) ok = false;
  }
  return {ok, fmt("100 instances, max |H|/scale %.2e, fewest reproducing members %zu, worst residual %.2e", worst_h,
                  fewest, worst_res)};
}

// 4: the discrimination experiment at its defaults.
Outcome discrimination() {
  const auto t0 = Clock::now();
  ExperimentConfig cfg;
  cfg.threads = 1;
  const auto r = discrimination_experiment(cfg);
  const double secs = seconds_since(t0);
  const double want[3] = {0.11, 0.16, 0.16};
  bool ok = std::abs(r.retained_fraction - 0.614) <= 0.02 && secs < 300;
  for (int i = 0; i < 3; ++i) ok = ok && std::abs(r.zero_fraction[i] - want[i]) <= 0.03;
  return {ok, fmt("retained %.4f, zero fractions p1 %.4f T1 %.4f T2 %.4f (p2 %.4f), %.1f s", r.retained_fraction,
                  r.zero_fraction[0], r.zero_fraction[1], r.zero_fraction[2], r.zero_fraction[3], secs)};
}

void discrimination_strict_info() {
  ExperimentConfig cfg;
  cfg.threads = 1;
  cfg.admission = Admission::Strict;
  const auto r = discrimination_experiment(cfg);
  std::printf("info: strict admission: retained %.4f, zero fractions p1 %.4f T1 %.4f T2 %.4f\n",
              r.retained_fraction, r.zero_fraction[0], r.zero_fraction[1], r.zero_fraction[2]);
}

// 5: shared k5, T3 and p3 across valid variants.
Outcome shared_invariants() {
  std::mt19937_64 rng(1005);
  ExperimentConfig cfg;
  cfg.seed = 1005;
  bool ok = true;
  int multi = 0;
  double worst = 0;
  for (int i = 0; i < 500; ++i) {
    PhaseTypeParams p;
    if (i % 2 == 0) {
      p = draw_experiment_sample(cfg, static_cast<std::uint64_t>(i)).params;
    } else {
      for (;;) {
        const auto k = oracle::log_uniform(rng, 5, 1e-1, 1e1);
        try {
          p = precise_phase_type_params(build_generator(kSolvable[(i / 2) % 4], k));
          break;
        } catch (const Error&) {
        }
      }
    }
    const auto rep = enumerate_variants(p);
    if (rep.n_valid < 2) continue;
    ++multi;
    worst = std::max({worst, rep.k5_spread, rep.T3_spread, rep.p3_spread});
    if (!rep.constraints_ok) ok = false;
  }
  return {ok && multi > 0, fmt("%d inputs with >= 2 valid variants, worst spread %.2e", multi, worst)};
}

// 6: both maps out of M9 preserve the moments and the lifetimes.
Outcome mappings() {
  std::mt19937_64 rng(1006);
  bool ok = true;
  double worst_m = 0, worst_t = 0;
  int done[2] = {0, 0};
  while (done[0] < 500 || done[1] < 500) {
    const auto k = oracle::log_uniform(rng, 5, 1e-1, 1e1);
    const int which = k[1] > k[0] ? 0 : (k[0] > k[1] ? 1 : -1);
    if (which < 0 || done[which] >= 500) continue;
    ++done[which];
    const auto image = which == 0 ? map_m9_to_m8(k) : map_m9_to_m4(k);
    const ModelId target = which == 0 ? ModelId::m8() : ModelId::m4();
    const auto m = moments_from_rates<quad>(ModelId::m9(), vector_cast<quad>(k));
    const double res = static_cast<double>(roundtrip_residual<quad>(target, vector_cast<quad>(image), m));
    const auto a = markers(ModelId::m9(), k), b = markers(target, image);
    double t = 0;
    for (int s = 0; s < 3; ++s) t = std::max(t, std::abs(a.T_life[s] - b.T_life[s]) / a.T_life[s]);
    worst_m = std::max(worst_m, res);
    worst_t = std::max(worst_t, t);
    if (res > 1e-9 || t > 1e-9) ok = false;
  }
  return {ok, fmt("500 per map, worst moment residual %.2e, worst lifetime gap %.2e", worst_m, worst_t)};
}

// 7: each point of an original system lies in exactly one simple system.
Outcome disjointness() {
  std::mt19937_64 rng(1007);
  std::uniform_int_distribution<int> small(0, 4);
  bool ok = true;
  int bad = 0;
  for (auto kind : {ModelKind::M2, ModelKind::M3, ModelKind::M4, ModelKind::M8, ModelKind::M9}) {
    const auto& set = simple_systems(kind);
    for (int t = 0; t < 500; ++t) {
      std::vector<double> k(5);
      if (t < 250) {
        for (auto& x : k) x = small(rng);
      } else {
        k = oracle::log_uniform(rng, 5, 1e-2, 1e2);
        if (t % 5 == 1) k[t % 5] = 0;
        if (t % 7 == 2) k[1] = k[0];
      }
      const auto v = oracle::original_v<quad>(kind, k);
      std::array<quad, kNumVars> x{};
      std::copy(k.begin(), k.end(), x.begin());
      std::copy(v.begin(), v.end(), x.begin() + 5);
      int accepted = 0;
      for (const auto& s : set.systems) accepted += system_accepts(s, x, 1e-9);
      if (accepted != 1) {
        ok = false;
        ++bad;
      }
    }
  }
  return {ok, fmt("2500 points, %d not in exactly one system", bad)};
}

// 8: DKW bound on simulated traces and the mean-time identity.
Outcome simulation() {
  const double bound = std::sqrt(std::log(2 / 0.01) / (2 * 1e5));
  std::mt19937_64 rng(1008);
  int within = 0;
  double worst_mean = 0;
  for (int i = 0; i < 100; ++i) {
    const ModelId model = kSolvable[i % 4];
    std::vector<double> k;
    PhaseTypeParams p;
    for (;;) {
      k = oracle::log_uniform(rng, 5, 1e-1, 1e1);
      try {
        p = precise_phase_type_params(build_generator(model, k));
        break;
      } catch (const Error&) {
      }
    }
    const auto tr = simulate_events(build_generator(model, k), 100000, 5000 + i);
    if (ks_statistic(tr, p) <= bound) ++within;
    const double want = 1 / (markers(model, k).p[2] * k[4]);
    worst_mean = std::max(worst_mean, std::abs(mean_time(p) - want) / want);
  }
  return {within >= 99 && worst_mean <= 1e-9,
          fmt("%d/100 within ks bound %.5f, worst mean-time gap %.2e", within, bound, worst_mean)};
}

// 9: simulate, fit, enumerate; the truth must be among the variants.
Outcome end_to_end() {
  const std::vector<double> truth{0.05, 2, 5, 10, 20};
  const auto tr = simulate_events(build_generator(ModelId::m9(), truth), 1000000, 2024);
  const auto fit = fit_multiexp(tr, 3);
  const auto rep = enumerate_variants(fit.params);
  double best = 1e300;
  for (const auto& e : rep.entries)
    if (e.solution.model == ModelId::m9()) best = std::min(best, oracle::rel_err(e.solution.rates, truth));
  return {best <= 0.15, fmt("best M9 variant rel err %.3f, %d valid variants", best, rep.n_valid)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"generic round trip", round_trip_generic},
      {"unbranched round trip", round_trip_unbranched},
      {"M3 non-solvability", m3_non_solvable},
      {"discrimination fractions", discrimination},
      {"shared k5/T3/p3", shared_invariants},
      {"M9 maps", mappings},
      {"simple-system disjointness", disjointness},
      {"simulation fidelity", simulation},
      {"end-to-end inference", end_to_end},
  };
  int failed = 0;
  int id = 0;
  for (const auto& [name, run] : criteria) {
    ++id;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d (%s): %s  %s\n", id, name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    if (id == 4) discrimination_strict_info();
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
