#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "shgsq/model.hpp"

namespace shgsq::testing {

inline constexpr std::uint64_t kSeed = 20261019;

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = kSeed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// Log-uniform in [lo, hi].
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

  PhysicalParams params() {
    const double gamma_s = uniform(0.0, 1.0) < 0.2 ? 0.0 : log_uniform(1e-3, 1e3);
    return PhysicalParams(log_uniform(1e-3, 1e3), gamma_s, log_uniform(1e-4, 1e2));
  }

  /// Stable point with m in [0, m_max] and eta_in in [0, 1 + m).
  OperatingPoint stable_point(double m_max = 50.0) {
    const double m = uniform(0.0, m_max);
    return OperatingPoint(m, uniform(0.0, 1.0) * (1.0 + m));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Harmonic spectra written as one fraction over the product of both
/// Lorentzian denominators, exactly as the closed form is usually printed.
inline double single_fraction_spectrum(double m, double eta_in, double w, int sign) {
  const double b = eta_in + m;
  const double d = 1.0 + 2.0 * m;
  const double w2 = w * w;
  const double num = 2.0 * b * d + sign * (w2 + b * b + d * d);
  const double den = (w2 + (d - b) * (d - b)) * (w2 + (d + b) * (d + b));
  return 1.0 + 8.0 * m * b * num / den;
}

}  // namespace shgsq::testing
