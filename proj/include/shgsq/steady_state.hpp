#pragma once

#include <array>
#include <complex>

#include "shgsq/model.hpp"

namespace shgsq {

using Complex = std::complex<double>;

/// Linearized drift over the doubled basis (delta a, delta a^dagger).
struct DriftMatrix {
  // Row-major: {(0,0), (0,1), (1,0), (1,1)}.
  std::array<Complex, 4> entries{};

  Complex operator()(int row, int col) const { return entries[2 * row + col]; }
  Complex& operator()(int row, int col) { return entries[2 * row + col]; }

  /// True when (1,1) = conj((0,0)) and (1,0) = conj((0,1)) exactly.
  bool conjugate_swap_symmetric() const;
};

struct StabilityReport {
  double lambda_minus = 0.0;  // s^-1
  double lambda_plus = 0.0;   // s^-1
  bool stable = false;
  double fraction = 0.0;  // eta_in / (1 + m)
  double margin = 0.0;    // 1 - fraction
};

struct EigenPair {
  Complex minus;
  Complex plus;
};

/// A steady state realized together with the drive that sustains it.
struct Realization {
  DriveConfig drive;
  SteadyState steady;
};

/// Residual tolerance accepted as "solves the fixed-point equation".
double residual_tolerance(const DriveConfig& drive);

/// sqrt(2 gamma_c)|alpha_in| - x (gamma + mu x^2 + 2 sqrt(mu)|beta_in|).
double fixed_point_residual(const PhysicalParams& params, const DriveConfig& drive,
                            double alpha_amp);

/// Fundamental drive amplitude |alpha_in| that sustains n intracavity photons.
double required_pump(const PhysicalParams& params, double n, double beta_in_amp);

/// Intracavity amplitude on the in-phase family for the given drive.
///
/// Solves mu x^3 + (gamma + 2 sqrt(mu) beta_in) x - sqrt(2 gamma_c) alpha_in = 0
/// for its single non-negative root by bracketed Newton iteration.
SteadyState solve_intracavity(const PhysicalParams& params, const DriveConfig& drive);

/// Constructs the drive and steady state corresponding to a scaled operating
/// point with fundamental drive phase phi.
Realization realize(const PhysicalParams& params, const OperatingPoint& point, double phi = 0.0);

/// Throws ConsistencyError unless steady solves the fixed-point equation for drive.
void check_consistency(const PhysicalParams& params, const SteadyState& steady,
                       const DriveConfig& drive);

DriftMatrix drift_matrix(const PhysicalParams& params, const SteadyState& steady,
                         const DriveConfig& drive);

/// lambda_-/+ = gamma * (-(1 + 2m) -/+ B) from the scaled coordinates.
StabilityReport eigenvalues_closed(const PhysicalParams& params, const OperatingPoint& point);

/// Eigenvalues of a general 2x2 matrix, sorted ascending by real part.
EigenPair eigenvalues_numeric(const DriftMatrix& dm);

}  // namespace shgsq
