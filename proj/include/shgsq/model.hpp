#pragma once

#include <numbers>

namespace shgsq {

/// Rates of a singly resonant doubling cavity, all in s^-1.
///
/// gamma_c is the input-coupler rate of the fundamental mode, gamma_s the
/// intracavity loss rate and mu the two-photon (chi-2) coupling rate per
/// photon. The total damping gamma = gamma_c + gamma_s is always derived.
class PhysicalParams {
 public:
  PhysicalParams(double gamma_c, double gamma_s, double mu);

  double gamma_c() const noexcept { return gamma_c_; }
  double gamma_s() const noexcept { return gamma_s_; }
  double mu() const noexcept { return mu_; }
  double gamma() const noexcept { return gamma_c_ + gamma_s_; }

 private:
  double gamma_c_;
  double gamma_s_;
  double mu_;
};

/// Coherent drives of the fundamental (alpha_in) and harmonic (beta_in)
/// modes. Only the in-phase family varphi = 2 phi + pi (mod 2 pi) is
/// representable.
class DriveConfig {
 public:
  static constexpr double kPhaseTolerance = 1e-12;

  DriveConfig(double alpha_in_amp, double phi, double beta_in_amp, double varphi);

  /// Builds a drive with the harmonic phase set from phi.
  static DriveConfig in_phase(double alpha_in_amp, double phi, double beta_in_amp);

  double alpha_in_amp() const noexcept { return alpha_in_amp_; }
  double phi() const noexcept { return phi_; }
  double beta_in_amp() const noexcept { return beta_in_amp_; }
  double varphi() const noexcept { return varphi_; }

 private:
  double alpha_in_amp_;
  double phi_;
  double beta_in_amp_;
  double varphi_;
};

/// Scaled coordinates (m, eta_in) in which the harmonic spectra are written.
///
/// m = mu n / gamma is the scaled intracavity photon number and
/// eta_in = 2 sqrt(mu) |beta_in| / gamma the scaled harmonic drive. The
/// in-phase fixed point is stable iff eta_in < 1 + m.
class OperatingPoint {
 public:
  OperatingPoint(double m, double eta_in);

  /// eta_in = fraction * (1 + m); fraction is the distance to the
  /// instability threshold.
  static OperatingPoint from_fraction(double m, double fraction);

  double m() const noexcept { return m_; }
  double eta_in() const noexcept { return eta_in_; }
  double b() const noexcept { return eta_in_ + m_; }
  double stability_fraction() const noexcept { return eta_in_ / (1.0 + m_); }
  bool is_stable() const noexcept { return eta_in_ < 1.0 + m_; }

 private:
  double m_;
  double eta_in_;
};

/// Classical intracavity fundamental field on the in-phase fixed-point family.
struct SteadyState {
  double alpha_amp = 0.0;
  double alpha_phase = 0.0;
  // sqrt(2 gamma_c)|alpha_in| - |alpha|(gamma + mu n + 2 sqrt(mu)|beta_in|)
  double residual = 0.0;

  double n() const noexcept { return alpha_amp * alpha_amp; }
};

struct PhysicalPoint {
  double n = 0.0;
  double beta_in_amp = 0.0;
};

OperatingPoint scale(const PhysicalParams& params, const SteadyState& steady,
                     const DriveConfig& drive);

PhysicalPoint unscale(const PhysicalParams& params, const OperatingPoint& point);

double db_from_linear(double s);

/// Percentage of the vacuum noise removed: (1 - s) * 100.
double suppression_percent(double s);

/// Maps an angle to (-pi, pi].
double normalize_angle(double theta);

inline constexpr double kPi = std::numbers::pi;

}  // namespace shgsq
