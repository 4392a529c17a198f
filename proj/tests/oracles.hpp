#pragma once

// Independent reference formulas used as test oracles.

#include "phasekit/model_catalog.hpp"

#include <array>
#include <cmath>
#include <random>
#include <vector>

namespace oracle {

using phasekit::ModelId;
using phasekit::ModelKind;

// (L1, L2, L3, S1, S2) from the original symmetrized polynomial systems.
template <class T = double>
std::array<T, 5> original_v(ModelKind kind, const std::vector<double>& kd) {
  const T k1 = kd[0], k2 = kd[1], k3 = kd[2], k4 = kd[3], k5 = kd[4];
  const T L1 = -(k1 + k2 + k3 + k4 + k5);
  const T S1 = -k5;
  T L2 = 0, L3 = 0, S2 = 0;
  switch (kind) {
    case ModelKind::M2:
      S2 = -k5 * (L1 + k1 + k2 + k3);
      L2 = k1 * k4 + k1 * k5 + k2 * k3 + k2 * k5 + k3 * k4 + k3 * k5;
      L3 = -k2 * k3 * k5;
      break;
    case ModelKind::M3:
      S2 = -k5 * (L1 + k1 + k2 + k3);
      L2 = k1 * k4 + k1 * k5 + k2 * k3 + k2 * k4 + k2 * k5 + k3 * k4 + k3 * k5;
      L3 = -k2 * k3 * k5;
      break;
    case ModelKind::M4:
      S2 = -k5 * (L1 + k1 + k2 + k3);
      L2 = k1 * k3 + k1 * k4 + k1 * k5 + k2 * k3 + k2 * k5 + k3 * k4 + k3 * k5;
      L3 = -k1 * k3 * k5 - k2 * k3 * k5;
      break;
    case ModelKind::M8:
      S2 = -k5 * (k1 + k2 + L1);
      L2 = k1 * k2 + k1 * k3 + k1 * k4 + k1 * k5 + k2 * k3 + k2 * k5;
      L3 = -k1 * k2 * k5;
      break;
    case ModelKind::M9:
      S2 = -k5 * (k1 + k2 + L1);
      L2 = k1 * k2 + k1 * k4 + k1 * k5 + k2 * k3 + k2 * k5;
      L3 = -k1 * k2 * k5;
      break;
    default:
      break;
  }
  return {L1, L2, L3, S1, S2};
}

struct TableOne {
  std::array<double, 3> inv_T;
  double p3;
};

// Reciprocal lifetimes and p3 in closed form.
inline TableOne table_one(ModelKind kind, const std::vector<double>& k) {
  const double k1 = k[0], k2 = k[1], k3 = k[2], k4 = k[3];
  switch (kind) {
    case ModelKind::M2:
      return {{k1 + k2, k3, k4}, k2 * k3 / (k1 * k4 + k2 * k3 + k3 * k4)};
    case ModelKind::M4:
      return {{k1 + k2, k3, k4}, (k1 * k3 + k2 * k3) / (k1 * k3 + k1 * k4 + k2 * k3 + k3 * k4)};
    case ModelKind::M8:
      return {{k1, k2, k3 + k4}, k1 * k2 / (k1 * k2 + k1 * k3 + k1 * k4 + k2 * k3)};
    case ModelKind::M9:
      return {{k1, k2, k3 + k4}, k1 * k2 / (k1 * k2 + k1 * k4 + k2 * k3)};
    default:
      return {{0, 0, 0}, 0};
  }
}

inline std::vector<double> log_uniform(std::mt19937_64& rng, int n, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log10(lo), std::log10(hi));
  std::vector<double> k(n);
  for (auto& x : k) x = std::pow(10.0, u(rng));
  return k;
}

inline double rel_err(const std::vector<double>& a, const std::vector<double>& b) {
  double e = 0;
  for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]) / std::max(std::abs(b[i]), 1e-300));
  return e;
}

}  // namespace oracle
