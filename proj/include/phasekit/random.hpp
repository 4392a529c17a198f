#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace phasekit {

// Seeded generator for one (seed, stream) pair; streams are independent
// substreams used to make parallel work reproducible.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    eng_.seed(seq);
  }

  std::uint64_t bits() { return eng_(); }

  // Uniform on (0, 1], 53-bit resolution.
  double uniform() { return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * (uniform() - 0x1.0p-53); }

  // Exponential with unit rate, by inversion.
  double exponential() { return -std::log(uniform()); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace phasekit
