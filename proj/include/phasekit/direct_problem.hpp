#pragma once

#include "phasekit/error.hpp"
#include "phasekit/model_catalog.hpp"
#include "phasekit/scalar.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <vector>

namespace phasekit {

inline constexpr double kTolSeparation = 1e-8;
inline constexpr double kTolImagRelative = 1e-10;
inline constexpr double kMaxCondition = 1e12;

template <class T>
struct BasicPhaseTypeParams {
  std::vector<T> lambda;
  std::vector<T> A;

  int N() const { return static_cast<int>(lambda.size()); }
};
using PhaseTypeParams = BasicPhaseTypeParams<double>;

template <class T>
struct BasicSymmetricMoments {
  std::vector<T> L;  // e_1..e_N of the eigenvalues
  std::vector<T> S;  // sum_i A_i lambda_i^k, k = 1..N-1

  int N() const { return static_cast<int>(L.size()); }
  // Flattened (L_1..L_N, S_1..S_{N-1}).
  std::vector<T> flat() const {
    std::vector<T> v = L;
    v.insert(v.end(), S.begin(), S.end());
    return v;
  }
  static BasicSymmetricMoments from_flat(const std::vector<T>& v) {
    if (v.size() % 2 == 0)
      throw Error(ErrorCode::WrongArity, "moment vector must have 2N-1 entries");
    const std::size_t n = (v.size() + 1) / 2;
    BasicSymmetricMoments m;
    m.L.assign(v.begin(), v.begin() + n);
    m.S.assign(v.begin() + n, v.end());
    return m;
  }
};
using SymmetricMoments = BasicSymmetricMoments<double>;

template <class To, class From>
BasicPhaseTypeParams<To> params_cast(const BasicPhaseTypeParams<From>& p) {
  return {vector_cast<To>(p.lambda), vector_cast<To>(p.A)};
}

template <class To, class From>
BasicSymmetricMoments<To> moments_cast(const BasicSymmetricMoments<From>& m) {
  return {vector_cast<To>(m.L), vector_cast<To>(m.S)};
}

template <class T>
struct BasicSpectrum {
  std::vector<std::complex<T>> eigenvalues;
  Eigen::Matrix<std::complex<T>, Eigen::Dynamic, Eigen::Dynamic> eigenvectors;  // column j pairs with eigenvalue j
  bool is_real_distinct = false;
};

template <class T>
T frobenius_norm(const Mat<T>& m) {
  using std::sqrt;
  T s = T(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) s += m(i, j) * m(i, j);
  return sqrt(s);
}

// Eigenvalues of Qtilde. Throws DegenerateSpectrum when two eigenvalues are
// closer than kTolSeparation * max|lambda|.
template <class T>
BasicSpectrum<T> spectrum(const BasicGenerator<T>& g) {
  using std::abs;
  const int n = g.N;
  if (n < 1) throw Error(ErrorCode::InvalidInput, "spectrum needs N >= 1");
  BasicSpectrum<T> sp;
  Eigen::EigenSolver<Mat<T>> es(g.Qtilde, true);
  if (es.info() != Eigen::Success) throw Error(ErrorCode::IllConditioned, "eigensolver did not converge");
  sp.eigenvectors = es.eigenvectors();
  sp.eigenvalues.resize(n);
  for (int i = 0; i < n; ++i) sp.eigenvalues[i] = es.eigenvalues()(i);

  const int s = g.return_state - 1;
  for (int j = 0; j < n; ++j) {
    if (s >= 0 && s < n && abs(sp.eigenvectors(s, j)) > T(1e-30)) {
      const std::complex<T> d = sp.eigenvectors(s, j);
      sp.eigenvectors.col(j) /= d;
    }
  }

  const T norm = frobenius_norm(g.Qtilde);
  const T tol_im = T(kTolImagRelative) * norm;
  bool real = true;
  T max_mag = T(0);
  for (const auto& l : sp.eigenvalues) {
    if (abs(l.imag()) > tol_im) real = false;
    max_mag = std::max<T>(max_mag, abs(l));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (abs(sp.eigenvalues[i] - sp.eigenvalues[j]) <= T(kTolSeparation) * max_mag)
        throw Error(ErrorCode::DegenerateSpectrum,
                    "eigenvalues " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                        " coincide: " + std::to_string(static_cast<double>(sp.eigenvalues[i].real())));
    }
  sp.is_real_distinct = real;
  return sp;
}

// Coefficients p_0..p_N of det(x I - M) = sum_k p_k x^k (p_N = 1), Faddeev-LeVerrier.
template <class T>
std::vector<T> charpoly(const Mat<T>& M) {
  const Eigen::Index n = M.rows();
  std::vector<T> p(n + 1, T(0));
  p[n] = T(1);
  if (n == 0) return p;
  Mat<T> Mk = Mat<T>::Zero(n, n);
  Mat<T> I = Mat<T>::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    Mk = M * Mk + p[n - k + 1] * I;
    Mat<T> AM = M * Mk;
    p[n - k] = -AM.trace() / T(static_cast<double>(k));
  }
  return p;
}

// Complete homogeneous symmetric polynomial h_m(lambda); h_0 = 1.
template <class T>
T homogeneous_symmetric(const std::vector<T>& lambda, int m) {
  if (m < 0) return T(0);
  std::vector<T> h(m + 1, T(0));
  h[0] = T(1);
  for (const T& x : lambda)
    for (int d = 1; d <= m; ++d) h[d] += x * h[d - 1];
  return h[m];
}

// Elementary symmetric polynomials e_0..e_N.
template <class T>
std::vector<T> elementary_symmetric(const std::vector<T>& lambda) {
  const std::size_t n = lambda.size();
  std::vector<T> e(n + 1, T(0));
  e[0] = T(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += lambda[i] * e[k - 1];
  return e;
}

template <class T>
struct AmplitudeCheck {
  std::vector<T> A_linear;  // amplitudes from the eigenvector linear solve
  std::vector<T> A_minor;   // amplitudes from the minor-determinant formula
  T max_rel_gap = T(0);
  T condition = T(0);
};

// Phase-type parameters of the absorption time started from s. Amplitudes come
// from the minor-determinant formula; the eigenvector linear solve is computed
// alongside and reported through `check`.
template <class T>
BasicPhaseTypeParams<T> phase_type_params(const BasicGenerator<T>& g, AmplitudeCheck<T>* check = nullptr) {
  using std::abs;
  const int n = g.N;
  const int s = g.return_state - 1;
  if (s < 0 || s >= n) throw Error(ErrorCode::InvalidInput, "return state outside 1..N");
  auto sp = spectrum(g);
  if (!sp.is_real_distinct)
    throw Error(ErrorCode::DegenerateSpectrum, "complex eigenvalues: no real phase-type representation");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return sp.eigenvalues[a].real() > sp.eigenvalues[b].real(); });

  std::vector<T> lam(n);
  Mat<T> U(n, n);
  for (int j = 0; j < n; ++j) {
    lam[j] = sp.eigenvalues[order[j]].real();
    for (int i = 0; i < n; ++i) U(i, j) = sp.eigenvectors(i, order[j]).real();
  }
  const T kexit = g.exit_rate();

  // (a) U C = e_s, A_j = -k_exit C_j u_{N,j} / lambda_j
  Eigen::PartialPivLU<Mat<T>> lu(U);
  // 1-norm condition number; N is small, so the explicit inverse is cheap
  const Mat<T> Uinv = lu.inverse();
  auto norm1 = [](const Mat<T>& M) {
    T best = T(0);
    for (Eigen::Index c = 0; c < M.cols(); ++c) best = std::max<T>(best, M.col(c).cwiseAbs().sum());
    return best;
  };
  T cond = norm1(U) * norm1(Uinv);
  if (!(cond == cond)) cond = T(std::numeric_limits<double>::infinity());
  if (cond > T(kMaxCondition))
    throw Error(ErrorCode::IllConditioned,
                "eigenvector matrix condition " + std::to_string(static_cast<double>(cond)));
  Vec<T> es = Vec<T>::Zero(n);
  es(s) = T(1);
  Vec<T> C = lu.solve(es);
  std::vector<T> A_lin(n);
  for (int j = 0; j < n; ++j) A_lin[j] = -kexit * C(j) * U(n - 1, j) / lam[j];

  // (b) A_i = -k_exit * cof_{s,N}(lambda_i I - Qtilde) / (lambda_i prod_{j != i}(lambda_i - lambda_j))
  std::vector<T> A_min(n);
  for (int i = 0; i < n; ++i) {
    T minor = T(1);
    if (n > 1) {
      Mat<T> B = lam[i] * Mat<T>::Identity(n, n) - g.Qtilde;
      Mat<T> sub(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == s) continue;
        for (int c = 0, cc = 0; c < n - 1; ++c) sub(rr, cc++) = B(r, c);
        ++rr;
      }
      minor = sub.determinant();
      if ((n + s + 1) % 2 != 0) minor = -minor;  // cofactor sign (-1)^{N+s}, 1-based
    }
    T prod = T(1);
    for (int j = 0; j < n; ++j)
      if (j != i) prod *= lam[i] - lam[j];
    A_min[i] = -kexit * minor / (lam[i] * prod);
  }

  if (check) {
    check->A_linear = A_lin;
    check->A_minor = A_min;
    check->condition = cond;
    T gap = T(0);
    for (int i = 0; i < n; ++i) {
      T den = std::max<T>(abs(A_min[i]), T(1e-300));
      gap = std::max<T>(gap, abs(A_lin[i] - A_min[i]) / den);
    }
    check->max_rel_gap = gap;
  }
  return {lam, A_min};
}

// Double-precision generator, computed internally in quad precision.
inline PhaseTypeParams precise_phase_type_params(const Generator& g) {
  return params_cast<double>(phase_type_params(generator_cast<quad>(g)));
}

template <class T>
T survival(const BasicPhaseTypeParams<T>& p, const T& t) {
  using std::exp;
  T s = T(0);
  for (int i = 0; i < p.N(); ++i) s += p.A[i] * exp(p.lambda[i] * t);
  return s;
}

template <class T>
T density(const BasicPhaseTypeParams<T>& p, const T& t) {
  using std::exp;
  T f = T(0);
  for (int i = 0; i < p.N(); ++i) f -= p.A[i] * p.lambda[i] * exp(p.lambda[i] * t);
  return f;
}

template <class T>
T mean_time(const BasicPhaseTypeParams<T>& p) {
  T m = T(0);
  for (int i = 0; i < p.N(); ++i) m -= p.A[i] / p.lambda[i];
  return m;
}

template <class T>
BasicSymmetricMoments<T> moments(const BasicPhaseTypeParams<T>& p) {
  const int n = p.N();
  BasicSymmetricMoments<T> m;
  auto e = elementary_symmetric(p.lambda);
  m.L.assign(e.begin() + 1, e.end());
  m.S.assign(n > 0 ? n - 1 : 0, T(0));
  for (int i = 0; i < n; ++i) {
    T pw = p.lambda[i];
    for (int k = 1; k < n; ++k) {
      m.S[k - 1] += p.A[i] * pw;
      pw *= p.lambda[i];
    }
  }
  return m;
}

// Moments of a catalogued model straight from its rates, by polynomial
// arithmetic on the generator (no eigensolve): L from the characteristic
// polynomial of Qtilde, S_k = -k_exit sum_m c_m h_{k+m-N} with c_m the
// coefficients of the leading (N-1)x(N-1) minor. Valid for any real rates.
template <class T>
BasicSymmetricMoments<T> moments_from_rates(const ModelId& model, const std::vector<T>& rates) {
  auto g = build_generator<T>(model, rates);
  const int n = g.N;
  auto p = charpoly<T>(g.Qtilde);
  std::vector<T> e(n + 1);
  for (int i = 0; i <= n; ++i) e[i] = (i % 2 == 0 ? T(1) : T(-1)) * p[n - i];
  std::vector<T> c = charpoly<T>(Mat<T>(g.Qtilde.topLeftCorner(n - 1, n - 1)));
  // h_j from e via sum_{i=0}^{j} (-1)^i e_i h_{j-i} = 0
  std::vector<T> h(n, T(0));
  h[0] = T(1);
  for (int j = 1; j < n; ++j) {
    T acc = T(0);
    for (int i = 1; i <= std::min(j, n); ++i) acc += (i % 2 == 1 ? T(1) : T(-1)) * e[i] * h[j - i];
    h[j] = acc;
  }
  BasicSymmetricMoments<T> m;
  m.L.assign(e.begin() + 1, e.end());
  const T kexit = g.exit_rate();
  for (int k = 1; k < n; ++k) {
    T acc = T(0);
    for (int mm = 0; mm < n; ++mm) {
      const int j = k + mm - n;
      if (j >= 0) acc += c[mm] * h[j];
    }
    m.S.push_back(-kexit * acc);
  }
  return m;
}

struct ParamsIssues {
  double sum_A_error = 0;
  double min_relative_separation = 0;
  double max_lambda = 0;
  bool ok = false;
};

template <class T>
ParamsIssues check_params(const BasicPhaseTypeParams<T>& p, double tol_sum = 1e-10) {
  using std::abs;
  ParamsIssues r;
  T sum = T(0), maxmag = T(0), maxl = T(-1e300);
  for (int i = 0; i < p.N(); ++i) {
    sum += p.A[i];
    maxmag = std::max<T>(maxmag, abs(p.lambda[i]));
    maxl = std::max<T>(maxl, p.lambda[i]);
  }
  T sep = T(1e300);
  for (int i = 0; i < p.N(); ++i)
    for (int j = i + 1; j < p.N(); ++j) sep = std::min<T>(sep, abs(p.lambda[i] - p.lambda[j]));
  r.sum_A_error = static_cast<double>(abs(sum - T(1)));
  r.min_relative_separation = p.N() > 1 ? static_cast<double>(sep / maxmag) : 1.0;
  r.max_lambda = static_cast<double>(maxl);
  r.ok = r.sum_A_error <= tol_sum && r.min_relative_separation > kTolSeparation && r.max_lambda < 0;
  return r;
}

// CSV "t,S,f" on a uniform grid of `points` values in [0, tmax].
inline void write_survival_csv(std::ostream& os, const PhaseTypeParams& p, double tmax, int points) {
  char buf[128];
  os << "t,S,f\n";
  for (int i = 0; i < points; ++i) {
    const double t = points > 1 ? tmax * i / (points - 1) : 0.0;
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", t, survival(p, t), density(p, t));
    os << buf;
  }
}

}  // namespace phasekit
