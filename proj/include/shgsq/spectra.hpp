#pragma once

#include "shgsq/model.hpp"

namespace shgsq {

/// Phase-optimized noise spectra of the harmonic output at one frequency.
/// Values are linear and normalized so that vacuum noise is 1.
struct SpectrumSample {
  double omega_tilde = 0.0;  // omega / gamma
  double s_minus = 1.0;      // squeezing
  double s_plus = 1.0;       // antisqueezing
  double theta_s = 0.0;      // squeezed-quadrature phase, (-pi, pi]
  double theta_a = 0.0;      // theta_s + pi/2, (-pi, pi]
};

struct PowerCalibration {
  static constexpr double kDefaultMilliwatts = 2.6;

  PowerCalibration() = default;
  explicit PowerCalibration(double c);

  double c = kDefaultMilliwatts;  // mW per scaled unit squared
};

struct ZeroFrequencyExtrema {
  double s_minus_0 = 1.0;
  double s_plus_0 = 1.0;
};

/// Throws InstabilityError unless eta_in < 1 + m.
void require_stable(const OperatingPoint& point);

/// Harmonic-mode squeezing and antisqueezing spectra.
///
/// Evaluated as the two Lorentzians
///   S- = 1 - 8 m B / (w^2 + (1 + 2m + B)^2),
///   S+ = 1 + 8 m B / (w^2 + (1 + 2m - B)^2),
/// with B = eta_in + m. phi is the fundamental drive phase and only enters
/// the reported quadrature angles.
SpectrumSample spectrum(const OperatingPoint& point, double omega_tilde, double phi = 0.0);

ZeroFrequencyExtrema zero_frequency_extrema(const OperatingPoint& point);

/// theta_s = 2 varphi - pi, normalized to (-pi, pi].
double squeezed_phase(const DriveConfig& drive);

/// Same as squeezed_phase for the in-phase drive with fundamental phase phi.
double squeezed_phase_for(double phi);

/// Classical harmonic output power c (2m + eta_in)^2, in mW.
double output_power(const OperatingPoint& point, const PowerCalibration& cal = {});

}  // namespace shgsq
