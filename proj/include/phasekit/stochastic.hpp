#pragma once

#include "phasekit/direct_problem.hpp"
#include "phasekit/error.hpp"
#include "phasekit/model_catalog.hpp"
#include "phasekit/parallel.hpp"
#include "phasekit/random.hpp"

#include <ceres/gradient_problem.h>
#include <ceres/gradient_problem_solver.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace phasekit {

struct EventTrace {
  std::vector<double> gaps;
  std::uint64_t seed = 0;
  std::optional<ModelId> model;
  std::vector<double> rates;
};

struct SimulationOptions {
  std::uint64_t max_jumps = 10'000'000;  // per event, before NonErgodic
  std::size_t chunk = 65536;             // events per RNG substream
  unsigned threads = 0;                  // 0: worker_count()
};

// Gillespie simulation of the return process: each event starts in s, runs the
// chain until N+1 is hit and records the elapsed time.
inline EventTrace simulate_events(const Generator& g, std::int64_t n_events, std::uint64_t seed,
                                  const SimulationOptions& opt = {}) {
  if (n_events < 1) throw Error(ErrorCode::InvalidInput, "n_events must be >= 1");
  const auto report = validate(g);
  if (!report.c1_ok || !report.c2_ok)
    throw Error(ErrorCode::InvalidInput, "generator fails the structural conditions C1/C2");
  const int n = g.N;
  std::vector<double> out_rate(n);
  std::vector<std::vector<double>> cum(n);
  std::vector<std::vector<int>> target(n);
  for (int i = 0; i < n; ++i) {
    double acc = 0;
    for (int j = 0; j <= n; ++j)
      if (j != i && g.Q(i, j) > 0) {
        acc += g.Q(i, j);
        cum[i].push_back(acc);
        target[i].push_back(j);
      }
    out_rate[i] = acc;
  }
  const int start = g.return_state - 1;

  EventTrace trace;
  trace.seed = seed;
  trace.gaps.resize(static_cast<std::size_t>(n_events));
  const std::size_t total = trace.gaps.size();
  const std::size_t chunks = (total + opt.chunk - 1) / opt.chunk;
  parallel_for(
      chunks,
      [&](std::size_t c) {
        Rng rng(seed, c);
        const std::size_t lo = c * opt.chunk, hi = std::min(total, lo + opt.chunk);
        for (std::size_t e = lo; e < hi; ++e) {
          int state = start;
          double t = 0;
          std::uint64_t jumps = 0;
          while (state != n) {
            if (out_rate[state] <= 0 || ++jumps > opt.max_jumps)
              throw Error(ErrorCode::NonErgodic, "observed state not reached from state " +
                                                     std::to_string(state + 1) + " within the jump guard");
            t += rng.exponential() / out_rate[state];
            const double u = (rng.uniform() - 0x1.0p-53) * out_rate[state];
            const auto& cs = cum[state];
            std::size_t k = std::upper_bound(cs.begin(), cs.end(), u) - cs.begin();
            if (k >= cs.size()) k = cs.size() - 1;
            state = target[state][k];
          }
          trace.gaps[e] = t;
        }
      },
      opt.threads);
  return trace;
}

// Right-continuous empirical survivor function #(gaps > t)/n.
class EmpiricalSurvival {
 public:
  explicit EmpiricalSurvival(std::vector<double> gaps) : sorted_(std::move(gaps)) {
    if (sorted_.empty()) throw Error(ErrorCode::InsufficientData, "empty trace");
    std::sort(sorted_.begin(), sorted_.end());
  }
  double operator()(double t) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), t);
    return static_cast<double>(sorted_.end() - it) / static_cast<double>(sorted_.size());
  }
  const std::vector<double>& sorted_gaps() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

inline EmpiricalSurvival empirical_survival(const EventTrace& trace) { return EmpiricalSurvival(trace.gaps); }

// sup_t |S_hat(t) - S(t)|, taking both one-sided limits at every sample point.
inline double ks_statistic(const EventTrace& trace, const PhaseTypeParams& p) {
  std::vector<double> x = trace.gaps;
  if (x.empty()) throw Error(ErrorCode::InsufficientData, "empty trace");
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double s = survival(p, x[i]);
    const double before = (n - static_cast<double>(i)) / n;
    const double after = (n - static_cast<double>(i) - 1) / n;
    d = std::max({d, std::abs(before - s), std::abs(after - s)});
  }
  return d;
}

inline void write_trace_csv(std::ostream& os, const EventTrace& trace) {
  char buf[64];
  os << "gap\n";
  for (double g : trace.gaps) {
    std::snprintf(buf, sizeof buf, "%.17g\n", g);
    os << buf;
  }
}

inline EventTrace read_trace_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error(ErrorCode::InvalidInput, "trace CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "gap") throw Error(ErrorCode::InvalidInput, "trace CSV must start with the header 'gap'");
  EventTrace t;
  std::size_t row = 1;
  while (std::getline(is, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(line, &used);
    } catch (...) {
      used = 0;
    }
    if (used != line.size() || !(v > 0) || !std::isfinite(v))
      throw Error(ErrorCode::InvalidInput, "trace CSV row " + std::to_string(row) + ": gaps must be positive numbers");
    t.gaps.push_back(v);
  }
  return t;
}

struct FitConfig {
  int restarts = 20;
  int max_iter = 500;
  double tol = 1e-10;          // function and gradient tolerance
  std::size_t subsample = 20000;  // multistart runs on at most this many gaps
  int polish = 3;              // best starts refined on the full data
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

struct FitResult {
  PhaseTypeParams params;
  double log_likelihood = -std::numeric_limits<double>::infinity();
  bool converged = false;
  int n_restarts_used = 0;
};

namespace detail {

// Mean negative log-likelihood of f(t) = sum A_i mu_i exp(-mu_i t) in the
// coordinates theta = (log mu_1..log mu_n, A_1..A_{n-1}), A_n = 1 - sum.
class MultiExpNll final : public ceres::FirstOrderFunction {
 public:
  MultiExpNll(const std::vector<double>* data, int n) : data_(data), n_(n) {}
  int NumParameters() const override { return 2 * n_ - 1; }

  bool Evaluate(const double* theta, double* cost, double* gradient) const override {
    const int n = n_;
    std::vector<double> mu(n), A(n), e(n), grad(2 * n - 1, 0.0);
    double an = 1;
    for (int i = 0; i < n; ++i) {
      if (!std::isfinite(theta[i]) || theta[i] > 700 || theta[i] < -700) return false;
      mu[i] = std::exp(theta[i]);
    }
    for (int i = 0; i + 1 < n; ++i) {
      A[i] = theta[n + i];
      an -= A[i];
    }
    A[n - 1] = an;
    // the density must stay nonnegative below the smallest gap too
    double f0 = 0;
    for (int i = 0; i < n; ++i) f0 += A[i] * mu[i];
    if (!(f0 >= 0)) return false;
    double nll = 0;
    for (double t : *data_) {
      double f = 0;
      for (int i = 0; i < n; ++i) {
        e[i] = mu[i] * std::exp(-mu[i] * t);
        f += A[i] * e[i];
      }
      if (!(f > 0) || !std::isfinite(f)) return false;
      nll -= std::log(f);
      if (gradient) {
        const double inv = 1.0 / f;
        for (int i = 0; i < n; ++i) grad[i] -= A[i] * e[i] * (1.0 - mu[i] * t) * inv;
        for (int i = 0; i + 1 < n; ++i) grad[n + i] -= (e[i] - e[n - 1]) * inv;
      }
    }
    const double m = static_cast<double>(data_->size());
    *cost = nll / m;
    if (gradient)
      for (int i = 0; i < 2 * n - 1; ++i) gradient[i] = grad[i] / m;
    return true;
  }

 private:
  const std::vector<double>* data_;
  int n_;
};

struct FitRun {
  std::vector<double> theta;
  double cost = std::numeric_limits<double>::infinity();
  bool converged = false;
  bool ok = false;
};

inline FitRun run_fit(const std::vector<double>& data, int n, std::vector<double> theta, const FitConfig& cfg) {
  ceres::GradientProblem problem(new MultiExpNll(&data, n));
  ceres::GradientProblemSolver::Options options;
  options.line_search_direction_type = ceres::LBFGS;
  options.max_num_iterations = cfg.max_iter;
  options.function_tolerance = cfg.tol;
  options.gradient_tolerance = cfg.tol;
  options.parameter_tolerance = 1e-12;
  options.logging_type = ceres::SILENT;
  options.minimizer_progress_to_stdout = false;
  ceres::GradientProblemSolver::Summary summary;
  FitRun r;
  double c0 = 0;
  if (!problem.Evaluate(theta.data(), &c0, nullptr)) return r;
  ceres::Solve(options, problem, theta.data(), &summary);
  // a failed solve reports final_cost = -1; score the returned point directly
  double cost = 0;
  if (summary.termination_type == ceres::FAILURE || !problem.Evaluate(theta.data(), &cost, nullptr)) return r;
  r.theta = std::move(theta);
  r.cost = cost;
  r.converged = summary.termination_type == ceres::CONVERGENCE;
  r.ok = std::isfinite(r.cost);
  return r;
}

inline PhaseTypeParams params_from_theta(const std::vector<double>& theta, int n) {
  std::vector<std::pair<double, double>> comp(n);
  double an = 1;
  for (int i = 0; i < n; ++i) {
    const double a = i + 1 < n ? theta[n + i] : 0.0;
    if (i + 1 < n) an -= a;
    comp[i] = {-std::exp(theta[i]), a};
  }
  comp[n - 1].second = an;
  std::sort(comp.begin(), comp.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  PhaseTypeParams p;
  for (const auto& [l, a] : comp) {
    p.lambda.push_back(l);
    p.A.push_back(a);
  }
  return p;
}

}  // namespace detail

inline double log_likelihood(const std::vector<double>& gaps, const PhaseTypeParams& p) {
  double ll = 0;
  for (double t : gaps) {
    const double f = density(p, t);
    if (!(f > 0)) return -std::numeric_limits<double>::infinity();
    ll += std::log(f);
  }
  return ll;
}

// Maximum-likelihood multi-exponential fit. Starts use log-spaced rates
// spanning the data quantiles, then random log-uniform draws; the multistart
// runs on a deterministic subsample and the best starts are refined on all data.
inline FitResult fit_multiexp(const EventTrace& trace, int n_components, const FitConfig& cfg = {}) {
  const int n = n_components;
  if (n < 1) throw Error(ErrorCode::InvalidInput, "n_components must be >= 1");
  const std::size_t need = static_cast<std::size_t>(10 * (2 * n - 1));
  if (trace.gaps.size() < need)
    throw Error(ErrorCode::InsufficientData, "fit needs at least " + std::to_string(need) + " gaps, got " +
                                                 std::to_string(trace.gaps.size()));
  for (double g : trace.gaps)
    if (!(g > 0)) throw Error(ErrorCode::InvalidInput, "gaps must be positive");

  std::vector<double> sorted = trace.gaps;
  std::sort(sorted.begin(), sorted.end());
  auto quantile = [&](double q) { return sorted[static_cast<std::size_t>(q * static_cast<double>(sorted.size() - 1))]; };
  const double lo = std::log(1.0 / quantile(0.995)), hi = std::log(1.0 / std::max(quantile(0.005), 1e-300));

  std::vector<double> sub;
  if (trace.gaps.size() <= cfg.subsample) {
    sub = trace.gaps;
  } else {
    const double step = static_cast<double>(trace.gaps.size()) / static_cast<double>(cfg.subsample);
    for (std::size_t i = 0; i < cfg.subsample; ++i) sub.push_back(trace.gaps[static_cast<std::size_t>(i * step)]);
  }

  const int restarts = std::max(1, cfg.restarts);
  std::vector<std::vector<double>> starts(restarts);
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> logmu(n);
    if (r == 0) {
      for (int i = 0; i < n; ++i) logmu[i] = n == 1 ? std::log(1.0 / quantile(0.5)) : lo + (hi - lo) * i / (n - 1);
    } else {
      Rng rng(cfg.seed, static_cast<std::uint64_t>(r));
      for (int i = 0; i < n; ++i) logmu[i] = rng.uniform(lo, hi);
      std::sort(logmu.begin(), logmu.end());
    }
    std::vector<double> th(logmu);
    for (int i = 0; i + 1 < n; ++i) th.push_back(1.0 / n);
    starts[r] = th;
  }

  std::vector<detail::FitRun> runs(restarts);
  parallel_for(
      restarts, [&](std::size_t r) { runs[r] = detail::run_fit(sub, n, starts[r], cfg); }, cfg.threads);
  std::vector<int> order;
  for (int r = 0; r < restarts; ++r)
    if (runs[r].ok) order.push_back(r);
  if (order.empty()) throw Error(ErrorCode::InvalidDensity, "no start keeps the density positive on the data");
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return runs[a].cost < runs[b].cost; });

  const bool full = sub.size() != trace.gaps.size();
  const int npolish = full ? std::min<int>(std::max(1, cfg.polish), static_cast<int>(order.size())) : 1;
  std::vector<detail::FitRun> final_runs(npolish);
  if (full)
    parallel_for(
        npolish, [&](std::size_t i) { final_runs[i] = detail::run_fit(trace.gaps, n, runs[order[i]].theta, cfg); },
        cfg.threads);
  else
    final_runs[0] = runs[order[0]];

  int best = -1;
  for (int i = 0; i < npolish; ++i)
    if (final_runs[i].ok && (best < 0 || final_runs[i].cost < final_runs[best].cost)) best = i;
  if (best < 0) throw Error(ErrorCode::InvalidDensity, "refinement left the feasible region");

  FitResult res;
  res.params = detail::params_from_theta(final_runs[best].theta, n);
  res.log_likelihood = log_likelihood(trace.gaps, res.params);
  res.converged = final_runs[best].converged;
  res.n_restarts_used = restarts;
  return res;
}

}  // namespace phasekit
