#pragma once

#include "phasekit/error.hpp"
#include "phasekit/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

namespace phasekit {

enum class ModelKind { M2, M3, M4, M8, M9, UnbranchedChain };

struct ModelId {
  ModelKind kind = ModelKind::M9;
  int chain_states = 0;  // only for UnbranchedChain

  static constexpr ModelId m2() { return {ModelKind::M2, 0}; }
  static constexpr ModelId m3() { return {ModelKind::M3, 0}; }
  static constexpr ModelId m4() { return {ModelKind::M4, 0}; }
  static constexpr ModelId m8() { return {ModelKind::M8, 0}; }
  static constexpr ModelId m9() { return {ModelKind::M9, 0}; }
  static ModelId chain(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidInput, "unbranched chain needs N >= 1");
    return {ModelKind::UnbranchedChain, n};
  }

  int states() const { return kind == ModelKind::UnbranchedChain ? chain_states : 3; }
  int n_rates() const { return 2 * states() - 1; }
  bool is_catalog3() const { return kind != ModelKind::UnbranchedChain; }

  std::string name() const {
    switch (kind) {
      case ModelKind::M2: return "M2";
      case ModelKind::M3: return "M3";
      case ModelKind::M4: return "M4";
      case ModelKind::M8: return "M8";
      case ModelKind::M9: return "M9";
      case ModelKind::UnbranchedChain: return "chain:" + std::to_string(chain_states);
    }
    return "?";
  }

  // Accepts M2, M3, M4, M8, M9, chain:N (also chainN / UnbranchedChain(N)).
  static ModelId parse(std::string_view s) {
    if (s == "M2") return m2();
    if (s == "M3") return m3();
    if (s == "M4") return m4();
    if (s == "M8") return m8();
    if (s == "M9") return m9();
    for (std::string_view prefix : {"chain:", "chain", "UnbranchedChain("}) {
      if (s.substr(0, prefix.size()) == prefix) {
        auto rest = s.substr(prefix.size());
        if (!rest.empty() && rest.back() == ')') rest.remove_suffix(1);
        int n = 0;
        auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
        if (ec == std::errc() && p == rest.data() + rest.size()) return chain(n);
      }
    }
    throw Error(ErrorCode::InvalidInput, "unknown model '" + std::string(s) + "'");
  }

  friend bool operator==(const ModelId& a, const ModelId& b) {
    return a.kind == b.kind && (a.kind != ModelKind::UnbranchedChain || a.chain_states == b.chain_states);
  }
};

// Directed arc between 0-based states; rate is an index into the rate vector.
struct Arc {
  int from;
  int to;
  int rate;
};

inline std::vector<Arc> arcs(const ModelId& model) {
  switch (model.kind) {
    case ModelKind::M2: return {{0, 1, 0}, {1, 0, 2}, {0, 2, 1}, {2, 0, 3}, {2, 3, 4}};
    case ModelKind::M3: return {{0, 1, 0}, {1, 0, 2}, {0, 2, 1}, {2, 1, 3}, {2, 3, 4}};
    case ModelKind::M4: return {{0, 1, 0}, {1, 2, 2}, {0, 2, 1}, {2, 0, 3}, {2, 3, 4}};
    case ModelKind::M8: return {{0, 1, 0}, {1, 2, 1}, {2, 0, 2}, {2, 1, 3}, {2, 3, 4}};
    case ModelKind::M9: return {{0, 2, 0}, {1, 2, 1}, {2, 0, 2}, {2, 1, 3}, {2, 3, 4}};
    case ModelKind::UnbranchedChain: {
      const int n = model.chain_states;
      std::vector<Arc> out;
      for (int i = 0; i + 1 < n; ++i) out.push_back({i, i + 1, i});
      for (int i = 0; i + 1 < n; ++i) out.push_back({i + 1, i, n - 1 + i});
      out.push_back({n - 1, n, 2 * n - 2});
      return out;
    }
  }
  return {};
}

inline std::vector<std::string> rate_names(const ModelId& model) {
  std::vector<std::string> out;
  if (model.is_catalog3()) {
    for (int i = 1; i <= 5; ++i) out.push_back("k" + std::to_string(i));
    return out;
  }
  const int n = model.chain_states;
  for (int i = 1; i < n; ++i) out.push_back("k" + std::to_string(i) + "+");
  for (int i = 1; i < n; ++i) out.push_back("k" + std::to_string(i) + "-");
  out.push_back("k" + std::to_string(n));
  return out;
}

template <class T>
struct BasicGenerator {
  Mat<T> Q;       // (N+1)x(N+1), row N+1 zero
  Mat<T> Qtilde;  // NxN, Qtilde(i,j) = Q(j,i)
  int N = 0;
  int observed_state = 0;  // 1-based, always N+1
  int return_state = 0;    // 1-based s
  bool nonpositive_rate = false;
  std::vector<std::string> warnings;

  T exit_rate() const { return Q(N - 1, N); }
};
using Generator = BasicGenerator<double>;

// Generator from an explicit (N+1)x(N+1) rate matrix; used for hand-built graphs.
template <class T>
BasicGenerator<T> make_generator(const Mat<T>& Q, int return_state) {
  if (Q.rows() != Q.cols() || Q.rows() < 2)
    throw Error(ErrorCode::InvalidInput, "generator must be square with at least 2 states");
  BasicGenerator<T> g;
  g.N = static_cast<int>(Q.rows()) - 1;
  g.Q = Q;
  g.Qtilde = Q.topLeftCorner(g.N, g.N).transpose();
  g.observed_state = g.N + 1;
  g.return_state = return_state;
  return g;
}

template <class T>
BasicGenerator<T> build_generator(const ModelId& model, const std::vector<T>& rates) {
  const int n = model.states();
  if (static_cast<int>(rates.size()) != model.n_rates())
    throw Error(ErrorCode::WrongArity, model.name() + " expects " + std::to_string(model.n_rates()) +
                                           " rates, got " + std::to_string(rates.size()));
  Mat<T> Q = Mat<T>::Zero(n + 1, n + 1);
  for (const Arc& a : arcs(model)) Q(a.from, a.to) += rates[a.rate];
  for (int i = 0; i < n; ++i) {
    T out = T(0);
    for (int j = 0; j <= n; ++j)
      if (j != i) out += Q(i, j);
    Q(i, i) = -out;
  }
  auto g = make_generator<T>(Q, n);
  for (std::size_t i = 0; i < rates.size(); ++i) {
    if (!(detail::real_part(rates[i]) > 0)) {
      g.nonpositive_rate = true;
      g.warnings.push_back("NonPositiveRate: rate " + std::to_string(i + 1) + " is not > 0");
    }
  }
  return g;
}

inline Generator build_generator(const ModelId& model, const std::vector<double>& rates) {
  return build_generator<double>(model, rates);
}

// The diagonal is re-summed in the target precision, so a lifted generator
// keeps exact zero row sums for its (exactly representable) rates.
template <class To, class From>
BasicGenerator<To> generator_cast(const BasicGenerator<From>& g) {
  BasicGenerator<To> out;
  out.Q = g.Q.unaryExpr([](const From& x) { return scalar_cast<To>(x); });
  for (Eigen::Index i = 0; i < g.N; ++i) {
    To sum = To(0);
    for (Eigen::Index j = 0; j < out.Q.cols(); ++j)
      if (j != i) sum += out.Q(i, j);
    out.Q(i, i) = -sum;
  }
  out.Qtilde = out.Q.topLeftCorner(g.N, g.N).transpose();
  out.N = g.N;
  out.observed_state = g.observed_state;
  out.return_state = g.return_state;
  out.nonpositive_rate = g.nonpositive_rate;
  out.warnings = g.warnings;
  return out;
}

struct ValidationReport {
  bool c1_ok = false;
  bool c2_ok = false;
  bool strongly_connected = false;
  bool s_equals_N = false;
  std::vector<std::string> messages;

  bool all_ok() const { return c1_ok && c2_ok && strongly_connected && s_equals_N; }
};

// Structural checks on the transition graph of states 1..N+1, including the
// implicit return arc N+1 -> s.
template <class T>
ValidationReport validate(const BasicGenerator<T>& g) {
  ValidationReport r;
  const int n = g.N;
  const int total = n + 1;
  auto nonzero = [](const T& x) { return detail::magnitude(x) != 0; };

  std::vector<std::vector<int>> fwd(total), bwd(total);
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j)
      if (i != j && nonzero(g.Q(i, j))) {
        fwd[i].push_back(j);
        bwd[j].push_back(i);
        if (detail::real_part(g.Q(i, j)) < 0)
          r.messages.push_back("negative off-diagonal entry Q[" + std::to_string(i + 1) + "][" +
                               std::to_string(j + 1) + "]");
      }

  bool return_ok = g.return_state >= 1 && g.return_state <= n;
  if (return_ok) {
    fwd[n].push_back(g.return_state - 1);
    bwd[g.return_state - 1].push_back(n);
  }

  // C1: the observed state is entered only from state N, and that arc exists.
  r.c1_ok = nonzero(g.Q(n - 1, n));
  for (int i = 0; i + 1 < n; ++i)
    if (nonzero(g.Q(i, n))) r.c1_ok = false;
  if (!r.c1_ok) r.messages.push_back("C1 violated: N+1 must be reachable from N and only from N");

  // C2: the only way out of N+1 is the return arc to s.
  bool absorbing_row_zero = true;
  for (int j = 0; j < total; ++j)
    if (nonzero(g.Q(n, j))) absorbing_row_zero = false;
  r.c2_ok = return_ok && absorbing_row_zero;
  if (!r.c2_ok) r.messages.push_back("C2 violated: N+1 must have a single outgoing arc to s in 1..N");

  auto reach = [&](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(total, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          q.push(w);
        }
    }
    return count == total;
  };
  r.strongly_connected = reach(fwd) && reach(bwd);
  if (!r.strongly_connected) r.messages.push_back("transition graph is not strongly connected");

  r.s_equals_N = g.return_state == n;
  if (!r.s_equals_N) r.messages.push_back("return state s differs from N: the model is not solvable");
  return r;
}

// Qtilde with the exit rate k_{2N-1} = Q[N][N+1] removed from entry (N,N).
template <class T>
Mat<T> reduced_no_exit(const BasicGenerator<T>& g) {
  Mat<T> r = g.Qtilde;
  r(g.N - 1, g.N - 1) += g.Q(g.N - 1, g.N);
  return r;
}

}  // namespace phasekit
