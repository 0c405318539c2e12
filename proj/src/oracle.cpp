#include "shgsq/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "shgsq/errors.hpp"
#include "shgsq/spectra.hpp"

namespace shgsq {

namespace {

using Transfer = CMatrix<2, kNoiseChannels>;

// out(w) = [M (-i w I - A)^-1 L + N] xi(w)
Transfer transfer(const LinearResponseSystem& sys, double omega, OutputMode mode) {
  const auto& out = mode == OutputMode::harmonic ? sys.out_harmonic : sys.out_fundamental;
  const auto& feed = mode == OutputMode::harmonic ? sys.feed_harmonic : sys.feed_fundamental;

  const Complex z(0.0, -omega);
  const Complex k00 = z - sys.drift(0, 0);
  const Complex k01 = -sys.drift(0, 1);
  const Complex k10 = -sys.drift(1, 0);
  const Complex k11 = z - sys.drift(1, 1);
  const Complex det = k00 * k11 - k01 * k10;
  const CMatrix<2, 2> resolvent{{{k11 / det, -k01 / det}, {-k10 / det, k00 / det}}};

  CMatrix<2, 2> gain{};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int k = 0; k < 2; ++k) gain[r][c] += out[r][k] * resolvent[k][c];

  Transfer t = feed;
  for (int r = 0; r < 2; ++r)
    for (int j = 0; j < kNoiseChannels; ++j)
      for (int k = 0; k < 2; ++k) t[r][j] += gain[r][k] * sys.input[k][j];
  return t;
}

// <out_r(w) out_s(-w)> = sum_ij T_ri(w) C_ij T_sj(-w)
Complex contract(const LinearResponseSystem& sys, const Transfer& plus, const Transfer& minus,
                 int r, int s) {
  Complex acc{};
  for (int i = 0; i < kNoiseChannels; ++i)
    for (int j = 0; j < kNoiseChannels; ++j)
      if (sys.correlator[i][j] != Complex{}) acc += plus[r][i] * sys.correlator[i][j] * minus[s][j];
  return acc;
}

}  // namespace

LinearResponseSystem build_system(const PhysicalParams& params, const SteadyState& steady,
                                  const DriveConfig& drive) {
  LinearResponseSystem sys;
  sys.gamma = params.gamma();
  sys.drift = drift_matrix(params, steady, drive);

  const Complex alpha = std::polar(steady.alpha_amp, steady.alpha_phase);
  const double root_mu = std::sqrt(params.mu());
  const double coupler = std::sqrt(2.0 * params.gamma_c());
  const double loss = std::sqrt(2.0 * params.gamma_s());

  sys.input[0][kFundamentalIn] = coupler;
  sys.input[0][kHarmonicIn] = 2.0 * root_mu * std::conj(alpha);
  sys.input[0][kLossIn] = loss;
  sys.input[1][kFundamentalInDagger] = coupler;
  sys.input[1][kHarmonicInDagger] = 2.0 * root_mu * alpha;
  sys.input[1][kLossInDagger] = loss;

  sys.out_harmonic[0][0] = 2.0 * root_mu * alpha;
  sys.out_harmonic[1][1] = 2.0 * root_mu * std::conj(alpha);
  sys.feed_harmonic[0][kHarmonicIn] = -1.0;
  sys.feed_harmonic[1][kHarmonicInDagger] = -1.0;

  sys.out_fundamental[0][0] = coupler;
  sys.out_fundamental[1][1] = coupler;
  sys.feed_fundamental[0][kFundamentalIn] = -1.0;
  sys.feed_fundamental[1][kFundamentalInDagger] = -1.0;

  for (int k = 0; k < kNoiseChannels; k += 2) sys.correlator[k][k + 1] = 1.0;
  return sys;
}

OracleSpectrum oracle_spectrum(const LinearResponseSystem& sys, double omega_tilde,
                               OutputMode mode) {
  if (!(eigenvalues_numeric(sys.drift).plus.real() < 0.0))
    throw InstabilityError("drift matrix is not strictly stable");
  if (!std::isfinite(omega_tilde)) throw ParameterError("omega_tilde must be finite");

  const double omega = omega_tilde * sys.gamma;
  const Transfer tp = transfer(sys, omega, mode);
  const Transfer tm = transfer(sys, -omega, mode);

  OracleSpectrum o;
  o.omega_tilde = omega_tilde;
  o.a_corr = contract(sys, tp, tm, 0, 0);
  o.n_corr = contract(sys, tp, tm, 1, 0).real();
  o.nu = std::arg(o.a_corr);

  // For coherent inputs the quadrature spectrum is
  //   S(theta) = sum_k |e^{-i theta} p_k + e^{i theta} q_k|^2
  // with p_k, q_k the responses of out and out^dagger to the k-th annihilation
  // channel. Its extrema are |p|^2 + |q|^2 -/+ 2 |<p, q>|; the product is
  // evaluated through the Lagrange identity so that S- keeps full relative
  // precision when S+ is large.
  std::array<Complex, kNoiseChannels / 2> p{};
  std::array<Complex, kNoiseChannels / 2> q{};
  double pp = 0.0;
  double qq = 0.0;
  Complex pq{};
  for (int k = 0; k < kNoiseChannels / 2; ++k) {
    p[k] = tp[0][2 * k];
    q[k] = tp[1][2 * k];
    pp += std::norm(p[k]);
    qq += std::norm(q[k]);
    pq += p[k] * std::conj(q[k]);
  }
  double minors = 0.0;
  for (int j = 0; j < kNoiseChannels / 2; ++j)
    for (int k = j + 1; k < kNoiseChannels / 2; ++k) minors += std::norm(p[j] * q[k] - p[k] * q[j]);
  const double imbalance = pp - qq;

  o.s_plus = pp + qq + 2.0 * std::abs(pq);
  o.s_minus = (imbalance * imbalance + 4.0 * minors) / o.s_plus;
  return o;
}

double compare_with_closed_form(const PhysicalParams& params, const OperatingPoint& point,
                                std::span<const double> omega_grid, double phi) {
  require_stable(point);
  const Realization r = realize(params, point, phi);
  const LinearResponseSystem sys = build_system(params, r.steady, r.drive);
  double worst = 0.0;
  for (double w : omega_grid) {
    const SpectrumSample closed = spectrum(point, w, phi);
    const OracleSpectrum oracle = oracle_spectrum(sys, w, OutputMode::harmonic);
    worst = std::max({worst, std::abs(oracle.s_minus - closed.s_minus) / closed.s_minus,
                      std::abs(oracle.s_plus - closed.s_plus) / closed.s_plus});
  }
  return worst;
}

double compare_with_closed_form(const OperatingPoint& point, std::span<const double> omega_grid) {
  return compare_with_closed_form(PhysicalParams(1.0, 0.0, 1.0), point, omega_grid);
}

}  // namespace shgsq
