#include "shgsq/spectra.hpp"

#include <cmath>
#include <sstream>

#include "shgsq/errors.hpp"

namespace shgsq {

PowerCalibration::PowerCalibration(double c_mw) : c(c_mw) {
  if (!(std::isfinite(c_mw) && c_mw > 0.0))
    throw ParameterError("power calibration must be finite and > 0");
}

void require_stable(const OperatingPoint& point) {
  if (!point.is_stable()) {
    std::ostringstream os;
    os.precision(17);
    os << "operating point m=" << point.m() << " eta_in=" << point.eta_in()
       << " is at or beyond the instability threshold eta_in = 1 + m";
    throw InstabilityError(os.str());
  }
}

SpectrumSample spectrum(const OperatingPoint& point, double omega_tilde, double phi) {
  require_stable(point);
  if (!std::isfinite(omega_tilde)) throw ParameterError("omega_tilde must be finite");
  const double m = point.m();
  const double b = point.b();
  const double w2 = omega_tilde * omega_tilde;
  const double gain = 8.0 * m * b;
  const double fast = 1.0 + 2.0 * m + b;
  const double slow = 1.0 + m - point.eta_in();  // 1 + 2m - B

  SpectrumSample s;
  s.omega_tilde = omega_tilde;
  s.s_minus = 1.0 - gain / (w2 + fast * fast);
  s.s_plus = 1.0 + gain / (w2 + slow * slow);
  s.theta_s = squeezed_phase_for(phi);
  s.theta_a = normalize_angle(s.theta_s + 0.5 * kPi);
  return s;
}

ZeroFrequencyExtrema zero_frequency_extrema(const OperatingPoint& point) {
  const SpectrumSample s = spectrum(point, 0.0);
  return ZeroFrequencyExtrema{s.s_minus, s.s_plus};
}

double squeezed_phase(const DriveConfig& drive) {
  return normalize_angle(2.0 * drive.varphi() - kPi);
}

double squeezed_phase_for(double phi) {
  return squeezed_phase(DriveConfig::in_phase(0.0, phi, 0.0));
}

double output_power(const OperatingPoint& point, const PowerCalibration& cal) {
  const double amplitude = 2.0 * point.m() + point.eta_in();
  return cal.c * amplitude * amplitude;
}

}  // namespace shgsq
