#include "shgsq/model.hpp"

#include <cmath>
#include <string>

#include "shgsq/errors.hpp"

namespace shgsq {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

}  // namespace

PhysicalParams::PhysicalParams(double gamma_c, double gamma_s, double mu)
    : gamma_c_(gamma_c), gamma_s_(gamma_s), mu_(mu) {
  require(std::isfinite(gamma_c) && gamma_c > 0.0, "gamma_c must be finite and > 0");
  require(std::isfinite(gamma_s) && gamma_s >= 0.0, "gamma_s must be finite and >= 0");
  require(std::isfinite(mu) && mu > 0.0, "mu must be finite and > 0");
}

DriveConfig::DriveConfig(double alpha_in_amp, double phi, double beta_in_amp, double varphi)
    : alpha_in_amp_(alpha_in_amp), phi_(phi), beta_in_amp_(beta_in_amp), varphi_(varphi) {
  require(std::isfinite(alpha_in_amp) && alpha_in_amp >= 0.0,
          "alpha_in amplitude must be finite and >= 0");
  require(std::isfinite(beta_in_amp) && beta_in_amp >= 0.0,
          "beta_in amplitude must be finite and >= 0");
  require(std::isfinite(phi) && std::isfinite(varphi), "drive phases must be finite");
  const double mismatch = normalize_angle(varphi - (2.0 * phi + kPi));
  require(std::abs(mismatch) <= kPhaseTolerance,
          "harmonic drive phase must satisfy varphi = 2 phi + pi (mod 2 pi)");
}

DriveConfig DriveConfig::in_phase(double alpha_in_amp, double phi, double beta_in_amp) {
  return DriveConfig(alpha_in_amp, phi, beta_in_amp, 2.0 * phi + kPi);
}

OperatingPoint::OperatingPoint(double m, double eta_in) : m_(m), eta_in_(eta_in) {
  require(std::isfinite(m) && m >= 0.0, "m must be finite and >= 0");
  require(std::isfinite(eta_in) && eta_in >= 0.0, "eta_in must be finite and >= 0");
}

OperatingPoint OperatingPoint::from_fraction(double m, double fraction) {
  require(std::isfinite(fraction) && fraction >= 0.0, "fraction must be finite and >= 0");
  return OperatingPoint(m, fraction * (1.0 + m));
}

OperatingPoint scale(const PhysicalParams& params, const SteadyState& steady,
                     const DriveConfig& drive) {
  const double g = params.gamma();
  const double m = params.mu() * steady.n() / g;
  const double eta = 2.0 * std::sqrt(params.mu()) * drive.beta_in_amp() / g;
  return OperatingPoint(m, eta);
}

PhysicalPoint unscale(const PhysicalParams& params, const OperatingPoint& point) {
  const double g = params.gamma();
  return PhysicalPoint{point.m() * g / params.mu(),
                       point.eta_in() * g / (2.0 * std::sqrt(params.mu()))};
}

double db_from_linear(double s) {
  require(std::isfinite(s) && s > 0.0, "spectrum value must be finite and > 0 for dB conversion");
  return 10.0 * std::log10(s);
}

double suppression_percent(double s) { return (1.0 - s) * 100.0; }

double normalize_angle(double theta) {
  double r = std::remainder(theta, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

}  // namespace shgsq
