#pragma once

#include "phasekit/direct_problem.hpp"
#include "phasekit/error.hpp"
#include "phasekit/model_catalog.hpp"
#include "phasekit/scalar.hpp"
#include "phasekit/simple_systems.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace phasekit {

template <class T>
struct BasicInverseSolution {
  ModelId model;
  std::vector<T> rates;
  bool all_positive = false;
  std::string branch;  // "generic", "S<i>" for a simple system, "recursion"
  int root = -1;       // quadratic root index (0: +sqrt, 1: -sqrt), -1 if none
  std::vector<std::pair<std::string, T>> free_params;
  T residual = T(0);
};
using InverseSolution = BasicInverseSolution<double>;

template <class To, class From>
BasicInverseSolution<To> solution_cast(const BasicInverseSolution<From>& s) {
  BasicInverseSolution<To> out;
  out.model = s.model;
  out.rates = vector_cast<To>(s.rates);
  out.all_positive = s.all_positive;
  out.branch = s.branch;
  out.root = s.root;
  for (const auto& [name, v] : s.free_params) out.free_params.emplace_back(name, scalar_cast<To>(v));
  out.residual = scalar_cast<To>(s.residual);
  return out;
}

template <class T>
BasicSymmetricMoments<T> symmetric_inputs(const BasicPhaseTypeParams<T>& p) {
  return moments(p);
}

// Max componentwise relative deviation. Denominators are floored at
// 1e-8 * r^deg (r = |L1|, deg the degree of the entry in lambda) so entries
// that vanish on the target do not blow up the ratio.
template <class T>
T moment_residual(const BasicSymmetricMoments<T>& got, const BasicSymmetricMoments<T>& target) {
  using std::abs;
  using std::pow;
  if (got.L.size() != target.L.size() || got.S.size() != target.S.size())
    throw Error(ErrorCode::WrongArity, "moment vectors differ in size");
  const T r = target.L.empty() ? T(1) : std::max<T>(abs(target.L[0]), T(1e-300));
  T worst = T(0);
  auto one = [&](const T& a, const T& b, int deg) {
    T floor = T(1e-8);
    for (int i = 0; i < deg; ++i) floor *= r;
    const T den = std::max<T>(abs(b), floor);
    worst = std::max<T>(worst, abs(a - b) / den);
  };
  for (std::size_t k = 0; k < target.L.size(); ++k) one(got.L[k], target.L[k], static_cast<int>(k) + 1);
  for (std::size_t k = 0; k < target.S.size(); ++k) one(got.S[k], target.S[k], static_cast<int>(k) + 1);
  return worst;
}

template <class T>
T roundtrip_residual(const ModelId& model, const std::vector<T>& rates, const BasicSymmetricMoments<T>& target) {
  return moment_residual(moments_from_rates(model, rates), target);
}

inline double roundtrip_residual(const ModelId& model, const std::vector<double>& rates,
                                 const SymmetricMoments& target) {
  return static_cast<double>(
      roundtrip_residual<quad>(model, vector_cast<quad>(rates), moments_cast<quad>(target)));
}

template <class T>
bool all_positive(const std::vector<T>& v) {
  for (const auto& x : v)
    if (!(x > T(0))) return false;
  return true;
}

namespace detail {

template <class T>
std::array<T, kNumVars> point_from_moments(const BasicSymmetricMoments<T>& m) {
  if (m.L.size() != 3 || m.S.size() != 2)
    throw Error(ErrorCode::WrongArity, "N=3 catalog models need (L1,L2,L3,S1,S2)");
  std::array<T, kNumVars> x;
  x.fill(T(0));
  x[var::L1] = m.L[0];
  x[var::L2] = m.L[1];
  x[var::L3] = m.L[2];
  x[var::S1] = m.S[0];
  x[var::S2] = m.S[1];
  return x;
}

template <class T>
T moment_norm(const std::array<T, kNumVars>& x) {
  using std::abs;
  T n = T(0);
  for (int v = var::L1; v <= var::S2; ++v) n = std::max<T>(n, abs(x[v]));
  return n;
}

// Tolerance band of a relation at x: tol * max(1 + ||m||_inf, sum |terms|).
template <class T>
T band(const Polynomial& p, const std::array<T, kNumVars>& x, const T& tol) {
  return tol * std::max<T>(T(1) + moment_norm(x), p.abs_terms(x));
}

// Relative size below which an inequation counts as vanishing. Inputs are
// double-rounded moments, so this sits a few decades above that noise.
inline constexpr double kNonzeroTol = 1e-13;

// Equations hold inside the tol band. Inequations hold once the value clears
// the rounding band, so points close to (but off) a stratum stay generic.
template <class T>
bool holds(const Relation& r, const std::array<T, kNumVars>& x, const T& tol, T* violation = nullptr) {
  using std::abs;
  const T val = abs(r.poly.eval(x));
  const T b = band(r.poly, x, r.equation ? tol : std::min<T>(tol, T(kNonzeroTol)));
  const bool ok = r.equation ? val <= b : val > b;
  if (violation) {
    // equations: how far outside the band; inequations: how deep inside it
    *violation = r.equation ? (b > T(0) ? val / b : val) : (val > T(0) ? b / val : T(1e300));
  }
  return ok;
}

}  // namespace detail

inline std::vector<double> default_free_grid() { return {0.1, 1.0, 10.0}; }

struct GenericOptions {
  double tol = 1e-9;
  std::vector<double> k3_grid = default_free_grid();  // M3 family evaluation points
};

// Printed closed forms of the generic simple systems, without any domain
// checks. Works for real and complex T. Quadratic models return the +sqrt
// root first.
template <class T>
std::vector<std::array<T, 5>> generic_formulas(ModelKind kind, const T& L1, const T& L2, const T& L3,
                                               const T& S1, const T& S2, const T& sqrt_disc,
                                               const std::vector<T>& k3_values = {}) {
  std::vector<std::array<T, 5>> out;
  const T X = L1 * S1 * S2 - L2 * S1 * S1 + L3 * S1 - S2 * S2;
  const T S1sq = S1 * S1;
  const T S1cu = S1sq * S1;
  const T k5 = -S1;
  switch (kind) {
    case ModelKind::M2: {
      const T k4 = (S1sq - S2) / S1;
      const T k2 = X / (S1cu - S1 * S2);
      const T k3 = (S1sq - S2) * L3 / X;
      const T den = -S1sq * S2 * S2 + S2 * S2 * S2 + (S1cu * S2 - S1 * S2 * S2) * L1 +
                    (-S1sq * S1sq + S1sq * S2) * L2 + (S1cu - S1 * S2) * L3;
      const T num = L1 * L1 * S1cu * S2 + L2 * L2 * S1cu + S1 * S2 * S2 * S2 + L3 * L3 * S1 +
                    (T(-2) * S1sq * S2 * S2 + (-S1sq * S1sq - S1sq * S2) * L2 + (S1cu + S1 * S2) * L3) * L1 +
                    (S1cu * S2 - T(2) * L3 * S1sq + S1 * S2 * S2) * L2 + (S1sq * S1sq - T(3) * S1sq * S2) * L3;
      const T k1 = -num / den;
      out.push_back({k1, k2, k3, k4, k5});
      break;
    }
    case ModelKind::M3: {
      const T k4 = (S1sq - S2) / S1;
      for (const T& k3 : k3_values) {
        const T k2 = L3 / (k3 * S1);
        const T k1 = -(k3 * k3 * S1 * S2 + L3 * S2 + (L2 * S1sq - L3 * S1) * k3) / (k3 * S1 * S2);
        out.push_back({k1, k2, k3, k4, k5});
      }
      break;
    }
    case ModelKind::M4: {
      const T k4 = (S1sq - S2) / S1;
      const T k2 = X / (S1cu - S1 * S2);
      for (int r = 0; r < 2; ++r) {
        const T sq = r == 0 ? sqrt_disc : -sqrt_disc;
        const T k3 = -(L1 * S1 - S2 + sq) / (T(2) * S1);
        const T k1 = (-L1 * S1sq + L2 * S1 + S1 * S2 - (S1sq - S2) * k3 - L3) / (S1sq - S2);
        out.push_back({k1, k2, k3, k4, k5});
      }
      break;
    }
    case ModelKind::M8: {
      for (int r = 0; r < 2; ++r) {
        const T sq = r == 0 ? sqrt_disc : -sqrt_disc;
        const T k2 = -(L1 * S1 - S2 + sq) / (T(2) * S1);
        const T k4 = X / (k2 * S1sq);
        const T k3 = -(-S1cu * k2 + L1 * S1 * S2 - L2 * S1sq + S1 * S2 * k2 + L3 * S1 - S2 * S2) / (k2 * S1sq);
        const T k1 = L3 / (S1 * k2);
        out.push_back({k1, k2, k3, k4, k5});
      }
      break;
    }
    case ModelKind::M9: {
      for (int r = 0; r < 2; ++r) {
        const T sq = r == 0 ? sqrt_disc : -sqrt_disc;
        const T k2 = -(L1 * S1 - S2 + sq) / (T(2) * S1);
        const T den = T(2) * k2 * S1 + L1 * S1 - S2;
        const T k4 = (L1 * S1sq + S1sq * k2 - L2 * S1 - S1 * S2 - S2 * k2 + L3) / den;
        const T k1 = -(k2 * S1 + L1 * S1 - S2) / S1;
        const T k3 = -(-S1cu * k2 + L1 * S1 * S2 - L2 * S1sq + S1 * S2 * k2 + L3 * S1 - S2 * S2) / (S1 * den);
        out.push_back({k1, k2, k3, k4, k5});
      }
      break;
    }
    case ModelKind::UnbranchedChain:
      throw Error(ErrorCode::InvalidInput, "generic formulas exist only for the N=3 catalog");
  }
  return out;
}

// The discriminant (L1 S1 - S2)^2 - 4 L3 S1 of the quadratic leader in M4/M8/M9.
template <class T>
T generic_discriminant(const T& L1, const T& L3, const T& S1, const T& S2) {
  const T b = L1 * S1 - S2;
  return b * b - T(4) * L3 * S1;
}

template <class T>
std::vector<BasicInverseSolution<T>> invert_generic(const ModelId& model, const BasicSymmetricMoments<T>& m,
                                                    const GenericOptions& opt = {}) {
  using std::sqrt;
  if (!model.is_catalog3() || model.kind == ModelKind::UnbranchedChain)
    throw Error(ErrorCode::InvalidInput, "invert_generic covers M2, M3, M4, M8, M9");
  const auto x = detail::point_from_moments(m);
  const T tol = T(opt.tol);
  const auto& sys = simple_systems(model.kind).systems.front();
  for (const auto& r : sys.relations) {
    if (r.leader <= var::k5) continue;
    if (!detail::holds(r, x, tol)) {
      if (model.kind == ModelKind::M3 && r.equation)
        throw Error(ErrorCode::M3HypersurfaceMiss, "moments are off the M3 hypersurface L1S1S2-L2S1^2+L3S1-S2^2=0");
      throw Error(ErrorCode::GenericBranchMiss,
                  "generic branch condition fails for " + model.name() + "; use the full decomposition");
    }
  }
  const T L1 = m.L[0], L2 = m.L[1], L3 = m.L[2], S1 = m.S[0], S2 = m.S[1];
  T sq = T(0);
  if (model.kind == ModelKind::M4 || model.kind == ModelKind::M8 || model.kind == ModelKind::M9) {
    const T disc = generic_discriminant(L1, L3, S1, S2);
    if (disc < T(0)) throw Error(ErrorCode::NegativeDiscriminant, "complex roots for " + model.name());
    sq = sqrt(disc);
  }
  std::vector<T> grid;
  if (model.kind == ModelKind::M3)
    for (double v : opt.k3_grid) {
      if (v == 0) throw Error(ErrorCode::InvalidInput, "M3 family parameter k3 must be nonzero");
      grid.push_back(T(v));
    }
  auto raw = generic_formulas<T>(model.kind, L1, L2, L3, S1, S2, sq, grid);
  std::vector<BasicInverseSolution<T>> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    BasicInverseSolution<T> s;
    s.model = model;
    s.rates.assign(raw[i].begin(), raw[i].end());
    s.branch = "generic";
    if (model.kind == ModelKind::M3)
      s.free_params.emplace_back("k3", grid[i]);
    else if (model.kind != ModelKind::M2)
      s.root = static_cast<int>(i);
    s.all_positive = all_positive(s.rates);
    s.residual = roundtrip_residual(model, s.rates, m);
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<InverseSolution> invert_generic(const ModelId& model, const SymmetricMoments& m,
                                                   const GenericOptions& opt = {}) {
  std::vector<InverseSolution> out;
  for (const auto& s : invert_generic<quad>(model, moments_cast<quad>(m), opt))
    out.push_back(solution_cast<double>(s));
  return out;
}

struct ThomasOptions {
  double tol = 1e-9;
  std::vector<double> free_grid = default_free_grid();  // values for rates left free by a system
};

struct BranchDiagnostic {
  int system = 0;
  bool matched = false;         // all moment-only relations hold
  double worst_violation = 0;   // >1 means outside the band
  int pruned_complex = 0;       // quadratic leaders with complex roots
  int pruned_inequation = 0;    // candidates rejected by an inequation on a rate
  int pruned_initial = 0;       // vanishing leading coefficient
  int solutions = 0;
};

template <class T>
struct BasicThomasResult {
  std::vector<BasicInverseSolution<T>> solutions;
  std::vector<BranchDiagnostic> diagnostics;
};
using ThomasResult = BasicThomasResult<double>;

// Does the full point (k, v) satisfy every relation of the system?
template <class T>
bool system_accepts(const SimpleSystem& sys, const std::array<T, kNumVars>& x, double tol) {
  for (const auto& r : sys.relations)
    if (!detail::holds(r, x, T(tol))) return false;
  return true;
}

template <class T>
BasicThomasResult<T> invert_thomas(const ModelId& model, const BasicSymmetricMoments<T>& m,
                                   const ThomasOptions& opt = {}) {
  using std::abs;
  using std::sqrt;
  const auto& set = simple_systems(model.kind);
  const auto x0 = detail::point_from_moments(m);
  const T tol = T(opt.tol);

  std::vector<int> korder;  // rate variables, lowest rank first
  for (auto it = set.ranking.rbegin(); it != set.ranking.rend(); ++it)
    if (*it <= var::k5) korder.push_back(*it);

  BasicThomasResult<T> res;
  bool any_match = false;
  for (const auto& sys : set.systems) {
    BranchDiagnostic d;
    d.system = sys.index;
    T worst = T(0);
    bool match = true;
    for (const auto& r : sys.relations) {
      if (r.leader <= var::k5) continue;
      T viol;
      if (!detail::holds(r, x0, tol, &viol)) match = false;
      worst = std::max<T>(worst, viol);
    }
    d.matched = match;
    d.worst_violation = static_cast<double>(worst);
    if (!match) {
      res.diagnostics.push_back(d);
      continue;
    }
    any_match = true;

    struct Partial {
      std::array<T, kNumVars> x;
      std::vector<std::pair<std::string, T>> free;
      int root = -1;
    };
    std::vector<Partial> partials{{x0, {}, -1}};
    for (int v : korder) {
      const Relation* eq = nullptr;
      std::vector<const Relation*> neqs;
      for (const auto& r : sys.relations)
        if (r.leader == v) {
          if (r.equation)
            eq = &r;
          else
            neqs.push_back(&r);
        }
      std::vector<Partial> next;
      for (const auto& p : partials) {
        std::vector<std::pair<T, int>> cands;  // value, root index
        bool is_free = false;
        if (eq) {
          auto c = eq->poly.coefficients_in(v, p.x);
          if (c.size() == 3 && c[2] != T(0)) {
            const T a = c[2], b = c[1], cc = c[0];
            T disc = b * b - T(4) * a * cc;
            if (disc < T(0)) {
              if (abs(disc) <= std::min<T>(tol, T(detail::kNonzeroTol)) * (b * b + abs(T(4) * a * cc))) {
                disc = T(0);
              } else {
                ++d.pruned_complex;
                continue;
              }
            }
            const T sq = sqrt(disc);
            // stable pair of roots; root 0 pairs with +sqrt in the printed formulas
            const T q = -(b + (b >= T(0) ? sq : -sq)) / T(2);
            T r_plus, r_minus;
            if (q != T(0)) {
              const T ra = q / a, rb = cc / q;
              // (-b + sq)/(2a) vs (-b - sq)/(2a)
              if (b >= T(0)) {
                r_minus = ra;
                r_plus = rb;
              } else {
                r_plus = ra;
                r_minus = rb;
              }
            } else {
              r_plus = r_minus = T(0);
            }
            cands.push_back({r_plus, 0});
            if (disc != T(0)) cands.push_back({r_minus, 1});
          } else {
            const T b = c.size() > 1 ? c[1] : T(0);
            if (b == T(0)) {
              ++d.pruned_initial;
              continue;
            }
            cands.push_back({-c[0] / b, -1});
          }
        } else {
          is_free = true;
          for (double g : opt.free_grid) cands.push_back({T(g), -1});
        }
        for (const auto& [val, ridx] : cands) {
          Partial q = p;
          q.x[v] = val;
          bool ok = true;
          for (const Relation* r : neqs)
            if (!detail::holds(*r, q.x, tol)) {
              ok = false;
              break;
            }
          if (!ok) {
            ++d.pruned_inequation;
            continue;
          }
          if (is_free) q.free.emplace_back(std::string(kVarNames[v]), val);
          if (ridx >= 0) q.root = ridx;
          next.push_back(std::move(q));
        }
      }
      partials = std::move(next);
    }
    for (const auto& p : partials) {
      BasicInverseSolution<T> s;
      s.model = model;
      s.rates.assign(p.x.begin(), p.x.begin() + 5);
      s.branch = "S" + std::to_string(sys.index);
      s.root = p.root;
      s.free_params = p.free;
      s.all_positive = all_positive(s.rates);
      s.residual = roundtrip_residual(model, s.rates, m);
      res.solutions.push_back(std::move(s));
      ++d.solutions;
    }
    res.diagnostics.push_back(d);
  }
  if (!any_match) {
    std::string msg = "moments lie outside every simple system of " + model.name() + " (worst violations:";
    for (const auto& d : res.diagnostics) msg += " S" + std::to_string(d.system) + "=" + std::to_string(d.worst_violation);
    throw Error(ErrorCode::NoBranchMatches, msg + ")");
  }
  return res;
}

inline ThomasResult invert_thomas(const ModelId& model, const SymmetricMoments& m, const ThomasOptions& opt = {}) {
  auto r = invert_thomas<quad>(model, moments_cast<quad>(m), opt);
  ThomasResult out;
  out.diagnostics = r.diagnostics;
  for (const auto& s : r.solutions) out.solutions.push_back(solution_cast<double>(s));
  return out;
}

template <class T>
struct BasicUnbranchedWorkspace {
  std::vector<T> C;                  // C_j = -A_j lambda_j / k_N
  std::vector<std::vector<T>> u;     // u[n][j] = u_{n+1}(lambda_j), 0-based n
  std::vector<std::vector<T>> w;     // w[n][j] = k_{n+1}^+ u_{n+1}(lambda_j)
};

// Rates (k^+_1..k^+_{N-1}, k^-_1..k^-_{N-1}, k_N) of the unbranched chain with
// the given phase-type parameters, by the rational recursion descending from
// state N.
template <class T>
BasicInverseSolution<T> invert_unbranched(int N, const BasicPhaseTypeParams<T>& p,
                                          BasicUnbranchedWorkspace<T>* ws_out = nullptr) {
  using std::abs;
  if (N < 1 || p.N() != N) throw Error(ErrorCode::WrongArity, "phase-type parameters must have N components");
  const int n = N;
  T scale = T(0);
  for (const T& l : p.lambda) scale = std::max<T>(scale, abs(l));

  T kN = T(0);
  for (int j = 0; j < n; ++j) kN -= p.A[j] * p.lambda[j];
  if (abs(kN) <= T(1e-12) * scale) throw Error(ErrorCode::ZeroPivot, "k_N vanishes");

  BasicUnbranchedWorkspace<T> ws;
  ws.C.resize(n);
  for (int j = 0; j < n; ++j) ws.C[j] = -p.A[j] * p.lambda[j] / kN;

  // 1-based rate arrays with kp[N] = k_N, km[N] = 0
  std::vector<T> kp(n + 1, T(0)), km(n + 1, T(0));
  kp[n] = kN;
  // u[m] for m = 1..N+1 (index m), u[N] = 1, u[N+1] = 0
  std::vector<std::vector<T>> u(n + 2, std::vector<T>(n, T(0))), w(n + 1, std::vector<T>(n, T(0)));
  u[n].assign(n, T(1));

  std::vector<std::vector<T>> lampow(n, std::vector<T>(n, T(1)));  // lampow[s][j] = lambda_j^s
  for (int s = 1; s < n; ++s)
    for (int j = 0; j < n; ++j) lampow[s][j] = lampow[s - 1][j] * p.lambda[j];

  // (Qtilde^s e_N)_m for the partially known chain, kp/km as given (unknowns 0)
  auto coord = [&](int s, int m, const std::vector<T>& kpp, const std::vector<T>& kmm) {
    std::vector<T> v(n + 2, T(0)), nv(n + 2, T(0));
    v[n] = T(1);
    for (int it = 0; it < s; ++it) {
      for (int i = 1; i <= n; ++i) {
        T acc = -(kpp[i] + (i > 1 ? kmm[i - 1] : T(0))) * v[i];
        if (i > 1) acc += kpp[i - 1] * v[i - 1];  // Qtilde_{i,i-1} = k^+_{i-1}
        if (i < n) acc += kmm[i] * v[i + 1];      // Qtilde_{i,i+1} = k^-_i
        nv[i] = acc;
      }
      std::swap(v, nv);
    }
    return v[m];
  };

  for (int s = 1; s < n; ++s) {
    const int m = n - s + 1;
    const int t = n - s;  // index of the rates found at this step
    T LB = T(0);
    for (int j = 0; j < n; ++j) LB += u[m][j] * lampow[s][j] * ws.C[j];
    auto kmm = km;
    kmm[t] = T(0);
    const T f0 = coord(s, m, kp, kmm);
    kmm[t] = T(1);
    const T f1 = coord(s, m, kp, kmm);
    const T slope = f1 - f0;
    // the slope is +-prod of the known k^- rates
    T known = T(1);
    for (int l = t + 1; l < n; ++l) known *= abs(km[l]);
    if (abs(slope) <= T(1e-12) * known)
      throw Error(ErrorCode::ZeroPivot, "vanishing slope for k^-_" + std::to_string(t));
    km[t] = (LB - f0) / slope;
    if (abs(km[t]) <= T(1e-12) * scale) throw Error(ErrorCode::ZeroPivot, "k^-_" + std::to_string(t) + " vanishes");

    for (int j = 0; j < n; ++j)
      w[t][j] = (kp[t + 1] + km[t] + p.lambda[j]) * u[t + 1][j] - km[t + 1] * u[t + 2][j];
    T LA = T(0);
    for (int j = 0; j < n; ++j) LA += w[t][j] * lampow[s][j] * ws.C[j];
    T prod = T(1);
    for (int l = t; l < n; ++l) prod *= km[l];
    kp[t] = LA / prod;
    if (abs(kp[t]) <= T(1e-12) * scale) throw Error(ErrorCode::ZeroPivot, "k^+_" + std::to_string(t) + " vanishes");
    for (int j = 0; j < n; ++j) u[t][j] = w[t][j] / kp[t];
  }

  BasicInverseSolution<T> sol;
  sol.model = ModelId::chain(n);
  for (int i = 1; i < n; ++i) sol.rates.push_back(kp[i]);
  for (int i = 1; i < n; ++i) sol.rates.push_back(km[i]);
  sol.rates.push_back(kN);
  sol.branch = "recursion";
  sol.all_positive = all_positive(sol.rates);
  sol.residual = roundtrip_residual(sol.model, sol.rates, moments(p));
  if (ws_out) {
    ws.u.assign(u.begin() + 1, u.begin() + n + 1);
    ws.w.assign(w.begin() + 1, w.end());
    *ws_out = std::move(ws);
  }
  return sol;
}

inline InverseSolution invert_unbranched(int N, const PhaseTypeParams& p) {
  return solution_cast<double>(invert_unbranched<wide>(N, params_cast<wide>(p)));
}

}  // namespace phasekit
