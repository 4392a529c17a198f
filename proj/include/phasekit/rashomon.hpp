#pragma once

#include "phasekit/direct_problem.hpp"
#include "phasekit/error.hpp"
#include "phasekit/inverse_problem.hpp"
#include "phasekit/model_catalog.hpp"
#include "phasekit/parallel.hpp"
#include "phasekit/random.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace phasekit {

template <class T>
struct BasicMarkers {
  std::vector<T> T_life;  // state lifetimes T_i = -1/Qred_ii
  std::vector<T> p;       // steady-state occupancies of the no-exit chain
};
using Markers = BasicMarkers<double>;

// Lifetimes and occupancies. Works for complex rates, which the discrimination
// admission rule needs for complex-conjugate quadratic roots.
template <class T>
BasicMarkers<T> markers(const ModelId& model, const std::vector<T>& rates) {
  const auto g = build_generator<T>(model, rates);
  const Mat<T> red = reduced_no_exit(g);
  const int n = g.N;
  BasicMarkers<T> m;
  for (int i = 0; i < n; ++i) {
    if (detail::magnitude(red(i, i)) == 0)
      throw Error(ErrorCode::SingularSteadyState, "state " + std::to_string(i + 1) + " has no outgoing transition");
    m.T_life.push_back(T(-1) / red(i, i));
  }
  // Qred p = 0 with sum p = 1: the rows of Qred sum to zero, so the last row is
  // redundant and is replaced by the normalisation.
  Mat<T> M = red;
  M.row(n - 1).setOnes();
  Vec<T> rhs = Vec<T>::Zero(n);
  rhs(n - 1) = T(1);
  Eigen::FullPivLU<Mat<T>> lu(M);
  if (!lu.isInvertible())
    throw Error(ErrorCode::SingularSteadyState, "the no-exit chain has no unique steady state");
  const Vec<T> p = lu.solve(rhs);
  for (int i = 0; i < n; ++i) m.p.push_back(p(i));
  return m;
}

inline Markers markers(const ModelId& model, const std::vector<double>& rates) {
  return markers<double>(model, rates);
}

// Relabelling of vertices 1 and 2 in M9.
template <class T>
std::vector<T> sigma_m9(const std::vector<T>& k) {
  if (k.size() != 5) throw Error(ErrorCode::WrongArity, "M9 has 5 rates");
  return {k[1], k[0], k[3], k[2], k[4]};
}

namespace detail {

template <class T>
void require_positive(const std::vector<T>& v, const char* what) {
  if (v.size() != 5) throw Error(ErrorCode::WrongArity, std::string(what) + ": expected 5 rates");
  for (const T& x : v)
    if (!(x > T(0))) throw Error(ErrorCode::DomainViolation, std::string(what) + ": rates must be positive");
}

}  // namespace detail

// M9 -> M8, defined for k2 > k1 > 0.
template <class T>
std::vector<T> map_m9_to_m8(const std::vector<T>& k) {
  detail::require_positive(k, "map_m9_to_m8");
  if (!(k[1] > k[0])) throw Error(ErrorCode::DomainViolation, "map_m9_to_m8 needs k2 > k1");
  const T k1 = k[0], k2 = k[1], k3 = k[2], k4 = k[3], k5 = k[4];
  return {k1, k2, k3 * (k2 - k1) / k2, (k1 * k3 + k2 * k4) / k2, k5};
}

// M9 -> M4, defined for k1 > k2 > 0.
template <class T>
std::vector<T> map_m9_to_m4(const std::vector<T>& k) {
  detail::require_positive(k, "map_m9_to_m4");
  if (!(k[0] > k[1])) throw Error(ErrorCode::DomainViolation, "map_m9_to_m4 needs k1 > k2");
  const T k1 = k[0], k2 = k[1], k3 = k[2], k4 = k[3], k5 = k[4];
  return {(k1 - k2) * k4 / (k3 + k4), (k1 * k3 + k2 * k4) / (k3 + k4), k2, k3 + k4, k5};
}

// Inverse of map_m9_to_m8 on its image.
template <class T>
std::vector<T> map_m8_to_m9(const std::vector<T>& k) {
  detail::require_positive(k, "map_m8_to_m9");
  const T k1 = k[0], k2 = k[1];
  if (!(k2 > k1)) throw Error(ErrorCode::DomainViolation, "map_m8_to_m9 needs k2 > k1");
  const T k3 = k[2] * k2 / (k2 - k1);
  const T k4 = (k[3] * k2 - k1 * k3) / k2;
  std::vector<T> out{k1, k2, k3, k4, k[4]};
  detail::require_positive(out, "map_m8_to_m9 image");
  return out;
}

// Inverse of map_m9_to_m4 on its image.
template <class T>
std::vector<T> map_m4_to_m9(const std::vector<T>& k) {
  detail::require_positive(k, "map_m4_to_m9");
  const T k1 = k[0] + k[1];
  const T k2 = k[2];
  if (!(k1 > k2)) throw Error(ErrorCode::DomainViolation, "map_m4_to_m9 needs k1' + k2' > k3'");
  const T k4 = k[0] * k[3] / (k1 - k2);
  const T k3 = k[3] - k4;
  std::vector<T> out{k1, k2, k3, k4, k[4]};
  detail::require_positive(out, "map_m4_to_m9 image");
  return out;
}

inline std::vector<ModelId> solvable_catalog() {
  return {ModelId::m2(), ModelId::m4(), ModelId::m8(), ModelId::m9()};
}

struct VariantEntry {
  InverseSolution solution;
  bool valid = false;  // all rates > 0 and forward moments reproduce the input
  std::optional<Markers> markers;
};

struct MappingCheck {
  std::string map;           // "m9_to_m8" or "m9_to_m4"
  std::size_t source = 0;    // entry index of the M9 variant
  std::optional<std::size_t> image_entry;  // matching variant of the target model
  double moment_residual = 0;
  double T_spread = 0;       // max relative gap of T_1, T_2, T_3
  bool ok = false;
};

struct VariantReport {
  SymmetricMoments moments;
  std::vector<VariantEntry> entries;
  std::vector<std::string> diagnostics;
  int n_valid = 0;
  std::vector<double> delta_p;        // per state, max - min over valid variants
  std::vector<double> delta_log10_T;  // per state
  // invariants across valid variants: relative spread of k5, T_3, p_3
  double k5_spread = 0, T3_spread = 0, p3_spread = 0;
  bool constraints_ok = true;
  std::vector<MappingCheck> mappings;
  bool mappings_ok = true;
};

struct VariantOptions {
  std::vector<ModelId> models = solvable_catalog();
  double tol = 1e-9;  // branch tolerance
  double valid_residual = 1e-6;
  double agreement = 1e-8;
  std::vector<double> k3_grid = default_free_grid();
};

namespace detail {

inline double rel_spread(const std::vector<double>& v) {
  if (v.size() < 2) return 0;
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  const double scale = std::max(std::abs(*lo), std::abs(*hi));
  return scale > 0 ? (*hi - *lo) / scale : 0.0;
}

inline double rel_gap(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s > 0 ? std::abs(a - b) / s : 0.0;
}

}  // namespace detail

// Inverts the moments in every requested model (generic branch, then the
// full decomposition when the generic conditions fail), attaches markers and
// checks the invariants shared by all variants.
inline VariantReport enumerate_variants(const SymmetricMoments& m, const VariantOptions& opt = {}) {
  if (m.N() != 3) throw Error(ErrorCode::WrongArity, "variant enumeration covers the N=3 catalog");
  VariantReport rep;
  rep.moments = m;
  for (const ModelId& model : opt.models) {
    if (!model.is_catalog3()) throw Error(ErrorCode::InvalidInput, "variants: catalog models only");
    std::vector<InverseSolution> sols;
    try {
      GenericOptions g;
      g.tol = opt.tol;
      g.k3_grid = opt.k3_grid;
      sols = invert_generic(model, m, g);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::GenericBranchMiss) {
        try {
          ThomasOptions t;
          t.tol = opt.tol;
          sols = invert_thomas(model, m, t).solutions;
        } catch (const Error& e2) {
          rep.diagnostics.push_back(model.name() + ": " + e2.what());
        }
      } else {
        rep.diagnostics.push_back(model.name() + ": " + e.what());
      }
    }
    for (auto& s : sols) {
      VariantEntry v;
      v.solution = std::move(s);
      v.valid = v.solution.all_positive && v.solution.residual <= opt.valid_residual;
      if (v.valid) {
        try {
          v.markers = markers(model, v.solution.rates);
        } catch (const Error& e) {
          v.valid = false;
          rep.diagnostics.push_back(model.name() + ": " + e.what());
        }
      }
      rep.entries.push_back(std::move(v));
    }
  }

  // the M3 family has infinitely many members and does not enter the deltas
  std::vector<const VariantEntry*> valid;
  for (const auto& e : rep.entries)
    if (e.valid && e.solution.model.kind != ModelKind::M3) valid.push_back(&e);
  rep.n_valid = static_cast<int>(valid.size());
  rep.delta_p.assign(3, 0.0);
  rep.delta_log10_T.assign(3, 0.0);
  if (valid.empty()) {
    if (rep.diagnostics.empty()) rep.diagnostics.push_back("no valid variant");
    return rep;
  }
  std::vector<double> k5, T3, p3;
  for (int i = 0; i < 3; ++i) {
    std::vector<double> ps, ts;
    for (const auto* e : valid) {
      ps.push_back(e->markers->p[i]);
      ts.push_back(std::log10(e->markers->T_life[i]));
    }
    rep.delta_p[i] = *std::max_element(ps.begin(), ps.end()) - *std::min_element(ps.begin(), ps.end());
    rep.delta_log10_T[i] = *std::max_element(ts.begin(), ts.end()) - *std::min_element(ts.begin(), ts.end());
  }
  for (const auto* e : valid) {
    k5.push_back(e->solution.rates[4]);
    T3.push_back(e->markers->T_life[2]);
    p3.push_back(e->markers->p[2]);
  }
  rep.k5_spread = detail::rel_spread(k5);
  rep.T3_spread = detail::rel_spread(T3);
  rep.p3_spread = detail::rel_spread(p3);
  rep.constraints_ok = rep.k5_spread <= opt.agreement && rep.T3_spread <= opt.agreement && rep.p3_spread <= opt.agreement;

  // every valid M9 variant inside a map domain must reappear as a variant of the target model
  for (std::size_t i = 0; i < rep.entries.size(); ++i) {
    const auto& src = rep.entries[i];
    if (!src.valid || src.solution.model.kind != ModelKind::M9) continue;
    const auto& k = src.solution.rates;
    for (int which = 0; which < 2; ++which) {
      const bool m8 = which == 0;
      if (m8 ? !(k[1] > k[0]) : !(k[0] > k[1])) continue;
      const ModelId target = m8 ? ModelId::m8() : ModelId::m4();
      if (std::find(opt.models.begin(), opt.models.end(), target) == opt.models.end()) continue;
      MappingCheck mc;
      mc.map = m8 ? "m9_to_m8" : "m9_to_m4";
      mc.source = i;
      const auto image = m8 ? map_m9_to_m8(k) : map_m9_to_m4(k);
      mc.moment_residual = roundtrip_residual(target, image, m);
      const auto mk = markers(target, image);
      for (int s = 0; s < 3; ++s)
        mc.T_spread = std::max(mc.T_spread, detail::rel_gap(mk.T_life[s], src.markers->T_life[s]));
      for (std::size_t j = 0; j < rep.entries.size(); ++j) {
        const auto& e = rep.entries[j];
        if (!(e.solution.model == target)) continue;
        double gap = 0;
        for (int r = 0; r < 5; ++r) gap = std::max(gap, detail::rel_gap(e.solution.rates[r], image[r]));
        if (gap <= 1e-6) mc.image_entry = j;
      }
      mc.ok = mc.image_entry.has_value() && mc.moment_residual <= 1e-9 && mc.T_spread <= opt.agreement;
      rep.mappings_ok = rep.mappings_ok && mc.ok;
      rep.mappings.push_back(mc);
    }
  }
  return rep;
}

inline VariantReport enumerate_variants(const PhaseTypeParams& p, const VariantOptions& opt = {}) {
  return enumerate_variants(moments_cast<double>(moments(params_cast<quad>(p))), opt);
}

enum class Admission {
  RealPart,  // every rate has positive real part (complex-conjugate roots admitted)
  Strict,    // every rate real and positive
};

struct ExperimentConfig {
  std::int64_t n_samples = 100000;
  std::uint64_t seed = 7;
  double log10_lambda_min = -4.0;
  double log10_lambda_max = 0.0;
  Admission admission = Admission::RealPart;
  double zero_tol = 1e-9;  // relative "no discrimination" threshold
  int bins = 40;
  unsigned threads = 0;
  std::vector<ModelId> models = solvable_catalog();
};

// Marker values of one admitted (model, root) instance.
struct InstanceMarkers {
  ModelId model;
  int root = -1;
  double p1 = 0, p2 = 0, log10_T1 = 0, log10_T2 = 0;
};

struct SampleOutcome {
  std::vector<InstanceMarkers> instances;
  bool retained = false;
  // delta of (p1, log10 T1, log10 T2, p2) across admitted instances
  std::array<double, 4> delta{0, 0, 0, 0};
  std::array<bool, 4> zero{true, true, true, true};
};

struct Histogram {
  std::string marker;
  std::vector<double> edges;
  std::vector<std::int64_t> counts;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::int64_t n_samples = 0;
  std::int64_t n_redrawn = 0;  // near-degenerate triples replaced
  std::int64_t n_retained = 0;
  double retained_fraction = 0;
  // zero-discrimination fractions over retained samples for (p1, T1, T2, p2)
  std::array<double, 4> zero_fraction{0, 0, 0, 0};
  std::array<std::int64_t, 4> zero_count{0, 0, 0, 0};
  std::vector<Histogram> histograms;
  std::array<std::int64_t, 5> retained_by_model{0, 0, 0, 0, 0};  // samples admitting M2, M3, M4, M8, M9
};

inline const std::array<const char*, 4>& marker_names() {
  static const std::array<const char*, 4> names{"delta_p1", "delta_log10_T1", "delta_log10_T2", "delta_p2"};
  return names;
}

inline const char* to_string(Admission a) { return a == Admission::Strict ? "strict" : "real-part"; }

inline Admission parse_admission(const std::string& s) {
  if (s == "strict") return Admission::Strict;
  if (s == "real-part" || s == "realpart") return Admission::RealPart;
  throw Error(ErrorCode::InvalidInput, "admission must be 'strict' or 'real-part'");
}

// Admitted instances of one moment vector, in complex double arithmetic.
inline SampleOutcome evaluate_sample(const SymmetricMoments& m, const ExperimentConfig& cfg) {
  using C = std::complex<double>;
  SampleOutcome out;
  const double L1 = m.L[0], L2 = m.L[1], L3 = m.L[2], S1 = m.S[0], S2 = m.S[1];
  const C sq = std::sqrt(C(generic_discriminant(L1, L3, S1, S2), 0.0));
  for (const ModelId& model : cfg.models) {
    if (model.kind == ModelKind::M3 || !model.is_catalog3()) continue;
    const auto sols = generic_formulas<C>(model.kind, C(L1), C(L2), C(L3), C(S1), C(S2), sq);
    for (std::size_t r = 0; r < sols.size(); ++r) {
      const auto& k = sols[r];
      bool ok = true;
      for (const C& x : k) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag()) || !(x.real() > 0)) ok = false;
        if (cfg.admission == Admission::Strict && x.imag() != 0.0) ok = false;
      }
      if (!ok) continue;
      BasicMarkers<C> mk;
      try {
        mk = markers<C>(model, std::vector<C>(k.begin(), k.end()));
      } catch (const Error&) {
        continue;
      }
      InstanceMarkers im;
      im.model = model;
      im.root = model.kind == ModelKind::M2 ? -1 : static_cast<int>(r);
      im.p1 = mk.p[0].real();
      im.p2 = mk.p[1].real();
      im.log10_T1 = std::log10(std::abs(mk.T_life[0]));
      im.log10_T2 = std::log10(std::abs(mk.T_life[1]));
      out.instances.push_back(im);
    }
  }
  out.retained = !out.instances.empty();
  if (out.instances.size() >= 2) {
    auto delta = [&](auto get, int slot) {
      double lo = get(out.instances[0]), hi = lo, mag = std::abs(lo);
      for (const auto& im : out.instances) {
        lo = std::min(lo, get(im));
        hi = std::max(hi, get(im));
        mag = std::max(mag, std::abs(get(im)));
      }
      out.delta[slot] = hi - lo;
      out.zero[slot] = out.delta[slot] <= cfg.zero_tol * std::max(1.0, mag);
    };
    delta([](const InstanceMarkers& i) { return i.p1; }, 0);
    delta([](const InstanceMarkers& i) { return i.log10_T1; }, 1);
    delta([](const InstanceMarkers& i) { return i.log10_T2; }, 2);
    delta([](const InstanceMarkers& i) { return i.p2; }, 3);
  }
  return out;
}

struct ExperimentSample {
  PhaseTypeParams params;
  int redraws = 0;
};

// Sample i of the protocol: A1, A2 ~ U[0,1], A3 = 1 - A1 - A2, lambda_j =
// -10^U[min,max], redrawn while the triple is near-degenerate.
inline ExperimentSample draw_experiment_sample(const ExperimentConfig& cfg, std::uint64_t index) {
  Rng rng(cfg.seed, index);
  ExperimentSample s;
  for (;;) {
    const double a1 = rng.uniform(0.0, 1.0), a2 = rng.uniform(0.0, 1.0);
    std::vector<double> lam(3);
    for (auto& l : lam) l = -std::pow(10.0, rng.uniform(cfg.log10_lambda_min, cfg.log10_lambda_max));
    PhaseTypeParams p{lam, {a1, a2, 1.0 - a1 - a2}};
    std::vector<std::size_t> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](auto x, auto y) { return lam[x] > lam[y]; });
    PhaseTypeParams sorted;
    for (auto i : idx) {
      sorted.lambda.push_back(p.lambda[i]);
      sorted.A.push_back(p.A[i]);
    }
    if (check_params(sorted, 1e-9).min_relative_separation > kTolSeparation) {
      s.params = sorted;
      return s;
    }
    ++s.redraws;
  }
}

inline ExperimentReport discrimination_experiment(const ExperimentConfig& cfg) {
  if (cfg.n_samples < 1) throw Error(ErrorCode::InvalidInput, "n_samples must be >= 1");
  if (!(cfg.log10_lambda_min < cfg.log10_lambda_max)) throw Error(ErrorCode::InvalidInput, "empty lambda range");
  if (cfg.bins < 1) throw Error(ErrorCode::InvalidInput, "bins must be >= 1");
  const auto n = static_cast<std::size_t>(cfg.n_samples);
  std::vector<SampleOutcome> outcomes(n);
  std::vector<int> redraws(n, 0);
  parallel_for(
      n,
      [&](std::size_t i) {
        const auto s = draw_experiment_sample(cfg, i);
        redraws[i] = s.redraws;
        outcomes[i] = evaluate_sample(moments(s.params), cfg);
      },
      cfg.threads);

  ExperimentReport rep;
  rep.config = cfg;
  rep.n_samples = cfg.n_samples;
  std::array<double, 4> maxd{0, 0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    rep.n_redrawn += redraws[i];
    const auto& o = outcomes[i];
    if (!o.retained) continue;
    ++rep.n_retained;
    std::array<bool, 5> seen{};
    for (const auto& im : o.instances) seen[static_cast<int>(im.model.kind)] = true;
    for (int k = 0; k < 5; ++k) rep.retained_by_model[k] += seen[k];
    for (int k = 0; k < 4; ++k) {
      rep.zero_count[k] += o.zero[k];
      maxd[k] = std::max(maxd[k], o.delta[k]);
    }
  }
  rep.retained_fraction = static_cast<double>(rep.n_retained) / static_cast<double>(rep.n_samples);
  for (int k = 0; k < 4; ++k)
    rep.zero_fraction[k] =
        rep.n_retained > 0 ? static_cast<double>(rep.zero_count[k]) / static_cast<double>(rep.n_retained) : 0.0;
  for (int k = 0; k < 4; ++k) {
    Histogram h;
    h.marker = marker_names()[k];
    const double top = maxd[k] > 0 ? maxd[k] : 1.0;
    for (int b = 0; b <= cfg.bins; ++b) h.edges.push_back(top * b / cfg.bins);
    h.counts.assign(cfg.bins, 0);
    for (const auto& o : outcomes) {
      if (!o.retained) continue;
      int b = static_cast<int>(o.delta[k] / top * cfg.bins);
      h.counts[std::clamp(b, 0, cfg.bins - 1)]++;
    }
    rep.histograms.push_back(std::move(h));
  }
  return rep;
}

// One CSV per report: marker,bin_lo,bin_hi,count.
inline void write_histogram_csv(std::ostream& os, const ExperimentReport& rep) {
  char buf[160];
  os << "marker,bin_lo,bin_hi,count\n";
  for (const auto& h : rep.histograms)
    for (std::size_t b = 0; b < h.counts.size(); ++b) {
      std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%lld\n", h.marker.c_str(), h.edges[b], h.edges[b + 1],
                    static_cast<long long>(h.counts[b]));
      os << buf;
    }
}

}  // namespace phasekit
