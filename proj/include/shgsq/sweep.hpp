#pragma once

#include <span>
#include <vector>

#include "shgsq/model.hpp"
#include "shgsq/spectra.hpp"
#include "shgsq/table.hpp"

namespace shgsq {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr double kDefaultMMax = 20.0;
inline constexpr int kDefaultMSteps = 401;

/// Harmonic-drive fractions eta_in / (1 + m) shown by default: pure doubling,
/// half and three quarters of the instability drive.
std::vector<double> default_fractions();

/// n uniformly spaced points from lo to hi inclusive; n == 1 gives {lo}.
std::vector<double> uniform_grid(double lo, double hi, int n);

std::vector<double> default_m_grid();

/// Maximum squeezing and antisqueezing (dB, zero frequency) against m, one
/// column pair per drive fraction.
SweepTable fig1_dataset(std::span<const double> m_grid, std::span<const double> fractions);

/// Classical harmonic output power (mW) against m, one column per fraction.
SweepTable fig2_dataset(std::span<const double> m_grid, std::span<const double> fractions,
                        const PowerCalibration& cal = {});

/// Frequency-resolved spectra at one point. With the oracle enabled the
/// linear-response result and its relative deviation are appended, realized
/// with the given physical parameters.
SweepTable spectrum_sweep(const OperatingPoint& point, std::span<const double> omega_grid,
                          bool with_oracle, double phi = 0.0,
                          const PhysicalParams& params = PhysicalParams(1.0, 0.0, 1.0));

}  // namespace shgsq
