#pragma once

#include <array>
#include <span>

#include "shgsq/model.hpp"
#include "shgsq/steady_state.hpp"

namespace shgsq {

/// Input noise channels, each as an (x, x^dagger) pair.
enum Channel : int {
  kFundamentalIn = 0,
  kFundamentalInDagger = 1,
  kHarmonicIn = 2,
  kHarmonicInDagger = 3,
  kLossIn = 4,
  kLossInDagger = 5,
};

inline constexpr int kNoiseChannels = 6;

template <int Rows, int Cols>
using CMatrix = std::array<std::array<Complex, Cols>, Rows>;

/// Linearized Langevin model with input-output relations:
///   d/dt v = A v + L xi,   out = M v + N xi,
/// where v = (delta a, delta a^dagger) and xi are the six input fluctuations.
struct LinearResponseSystem {
  double gamma = 1.0;  // frequencies passed to the oracle are scaled by this
  DriftMatrix drift;
  CMatrix<2, kNoiseChannels> input{};
  CMatrix<2, 2> out_harmonic{};
  CMatrix<2, kNoiseChannels> feed_harmonic{};
  CMatrix<2, 2> out_fundamental{};
  CMatrix<2, kNoiseChannels> feed_fundamental{};
  // <xi_i(w) xi_j(-w)> for coherent inputs: 1 on each (x, x^dagger) pair.
  CMatrix<kNoiseChannels, kNoiseChannels> correlator{};
};

enum class OutputMode { harmonic, fundamental };

struct OracleSpectrum {
  double omega_tilde = 0.0;
  double n_corr = 0.0;   // <delta out^dagger(w) delta out(-w)>
  Complex a_corr{};      // <delta out(w) delta out(-w)>
  double s_minus = 1.0;
  double s_plus = 1.0;
  double nu = 0.0;  // arg(a_corr)
};

LinearResponseSystem build_system(const PhysicalParams& params, const SteadyState& steady,
                                  const DriveConfig& drive);

/// Output spectrum of the chosen mode from the frequency-domain response
/// (-i w I - A)^-1 with the Fourier convention x(w) = int e^{+i w t} x(t) dt.
OracleSpectrum oracle_spectrum(const LinearResponseSystem& sys, double omega_tilde,
                               OutputMode mode = OutputMode::harmonic);

/// Largest relative deviation of the oracle harmonic spectra from the closed
/// form over the grid, taken over both S- and S+.
double compare_with_closed_form(const PhysicalParams& params, const OperatingPoint& point,
                                std::span<const double> omega_grid, double phi = 0.0);

/// Same, realized with gamma_c = 1, gamma_s = 0, mu = 1.
double compare_with_closed_form(const OperatingPoint& point, std::span<const double> omega_grid);

}  // namespace shgsq
