#include "shgsq/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "shgsq/errors.hpp"

namespace shgsq {

namespace {

constexpr int kMaxIterations = 200;
constexpr double kRelativeTolerance = 1e-12;

}  // namespace

bool DriftMatrix::conjugate_swap_symmetric() const {
  return (*this)(1, 1) == std::conj((*this)(0, 0)) && (*this)(1, 0) == std::conj((*this)(0, 1));
}

double residual_tolerance(const DriveConfig& drive) {
  return 1e-9 * std::max(1.0, drive.alpha_in_amp());
}

double fixed_point_residual(const PhysicalParams& params, const DriveConfig& drive,
                            double alpha_amp) {
  return drive.alpha_in_amp() - required_pump(params, alpha_amp * alpha_amp, drive.beta_in_amp());
}

double required_pump(const PhysicalParams& params, double n, double beta_in_amp) {
  if (!(std::isfinite(n) && n >= 0.0)) throw ParameterError("n must be finite and >= 0");
  if (!(std::isfinite(beta_in_amp) && beta_in_amp >= 0.0))
    throw ParameterError("beta_in amplitude must be finite and >= 0");
  const double x = std::sqrt(n);
  const double loss = params.gamma() + params.mu() * n + 2.0 * std::sqrt(params.mu()) * beta_in_amp;
  return x * loss / std::sqrt(2.0 * params.gamma_c());
}

SteadyState solve_intracavity(const PhysicalParams& params, const DriveConfig& drive) {
  const double cubic = params.mu();
  const double linear = params.gamma() + 2.0 * std::sqrt(params.mu()) * drive.beta_in_amp();
  const double constant = std::sqrt(2.0 * params.gamma_c()) * drive.alpha_in_amp();

  auto f = [&](double x) { return (cubic * x * x + linear) * x - constant; };
  auto df = [&](double x) { return 3.0 * cubic * x * x + linear; };

  double x = 0.0;
  if (constant > 0.0) {
    double lo = 0.0;
    double hi = std::max(1.0, constant / params.gamma());
    for (int i = 0; f(hi) < 0.0; ++i) {
      if (i == kMaxIterations) throw NumericError("could not bracket the fixed-point root");
      lo = hi;
      hi *= 2.0;
    }
    x = 0.5 * (lo + hi);
    bool converged = false;
    for (int i = 0; i < kMaxIterations; ++i) {
      const double fx = f(x);
      if (fx == 0.0) {
        converged = true;
        break;
      }
      (fx < 0.0 ? lo : hi) = x;
      const double step = fx / df(x);
      if (std::abs(step) <= kRelativeTolerance * x) {
        x -= step;
        converged = true;
        break;
      }
      x -= step;
      if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
      if (hi - lo <= kRelativeTolerance * hi) {
        converged = true;
        break;
      }
    }
    if (!converged) throw NumericError("fixed-point Newton iteration did not converge");
  }

  SteadyState s;
  s.alpha_amp = x;
  s.alpha_phase = normalize_angle(drive.phi());
  s.residual = fixed_point_residual(params, drive, x);
  return s;
}

Realization realize(const PhysicalParams& params, const OperatingPoint& point, double phi) {
  const PhysicalPoint phys = unscale(params, point);
  const DriveConfig drive =
      DriveConfig::in_phase(required_pump(params, phys.n, phys.beta_in_amp), phi, phys.beta_in_amp);
  SteadyState steady;
  steady.alpha_amp = std::sqrt(phys.n);
  steady.alpha_phase = normalize_angle(phi);
  steady.residual = fixed_point_residual(params, drive, steady.alpha_amp);
  return Realization{drive, steady};
}

void check_consistency(const PhysicalParams& params, const SteadyState& steady,
                       const DriveConfig& drive) {
  const double residual = fixed_point_residual(params, drive, steady.alpha_amp);
  if (!(std::abs(residual) <= residual_tolerance(drive))) {
    throw ConsistencyError("steady state does not solve the fixed-point equation (residual " +
                           std::to_string(residual) + ")");
  }
  if (steady.alpha_amp > 0.0 &&
      std::abs(normalize_angle(steady.alpha_phase - drive.phi())) > 1e-9) {
    throw ConsistencyError("intracavity field is not in phase with the fundamental drive");
  }
}

DriftMatrix drift_matrix(const PhysicalParams& params, const SteadyState& steady,
                         const DriveConfig& drive) {
  check_consistency(params, steady, drive);
  const double mu = params.mu();
  const Complex alpha = std::polar(steady.alpha_amp, steady.alpha_phase);
  const Complex beta_in = std::polar(drive.beta_in_amp(), drive.varphi());
  const Complex diag(-(params.gamma() + 2.0 * mu * steady.n()), 0.0);
  const Complex off = 2.0 * std::sqrt(mu) * beta_in - mu * alpha * alpha;

  DriftMatrix dm;
  dm(0, 0) = diag;
  dm(0, 1) = off;
  dm(1, 0) = std::conj(off);
  dm(1, 1) = std::conj(diag);
  return dm;
}

StabilityReport eigenvalues_closed(const PhysicalParams& params, const OperatingPoint& point) {
  const double g = params.gamma();
  const double m = point.m();
  StabilityReport r;
  r.lambda_minus = g * (-(1.0 + 2.0 * m) - point.b());
  // -(1 + 2m) + (m + eta) rearranged so the threshold eta = 1 + m gives exactly 0.
  r.lambda_plus = g * (point.eta_in() - (1.0 + m));
  r.fraction = point.stability_fraction();
  r.margin = 1.0 - r.fraction;
  r.stable = point.is_stable();
  return r;
}

EigenPair eigenvalues_numeric(const DriftMatrix& dm) {
  const Complex half_trace = 0.5 * (dm(0, 0) + dm(1, 1));
  const Complex half_diff = 0.5 * (dm(0, 0) - dm(1, 1));
  const Complex root = std::sqrt(half_diff * half_diff + dm(0, 1) * dm(1, 0));
  Complex a = half_trace - root;
  Complex b = half_trace + root;
  if (b.real() < a.real() || (b.real() == a.real() && b.imag() < a.imag())) std::swap(a, b);
  return EigenPair{a, b};
}

}  // namespace shgsq
