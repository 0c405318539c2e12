#include "shgsq/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>

#include "shgsq/errors.hpp"
#include "shgsq/oracle.hpp"
#include "shgsq/steady_state.hpp"

namespace shgsq {

namespace {

std::string short_number(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string join(std::span<const double> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ";" : "") + short_number(values[i]);
  return out;
}

void check_m_grid(std::span<const double> m_grid) {
  if (m_grid.empty()) throw ParameterError("m grid is empty");
  for (std::size_t i = 0; i < m_grid.size(); ++i) {
    if (!(std::isfinite(m_grid[i]) && m_grid[i] >= 0.0))
      throw ParameterError("m grid values must be finite and >= 0");
    if (i > 0 && !(m_grid[i] > m_grid[i - 1]))
      throw ParameterError("m grid must be strictly increasing");
  }
}

void check_fractions(std::span<const double> fractions) {
  if (fractions.empty()) throw ParameterError("no drive fractions given");
  for (double f : fractions) {
    if (!(std::isfinite(f) && f >= 0.0)) throw ParameterError("drive fractions must be >= 0");
    if (f >= 1.0)
      throw InstabilityError("drive fraction " + short_number(f) +
                             " is at or beyond the instability threshold");
  }
}

void check_omega_grid(std::span<const double> grid) {
  if (grid.empty()) throw ParameterError("frequency grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) throw ParameterError("frequency grid values must be finite");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw ParameterError("frequency grid must be strictly increasing");
  }
}

void common_metadata(SweepTable& t, std::span<const double> m_grid,
                     std::span<const double> fractions) {
  t.set_metadata("version", kVersion);
  t.set_metadata("m_min", short_number(m_grid.front()));
  t.set_metadata("m_max", short_number(m_grid.back()));
  t.set_metadata("m_points", std::to_string(m_grid.size()));
  t.set_metadata("fractions", join(fractions));
}

}  // namespace

std::vector<double> default_fractions() { return {0.0, 0.5, 0.75}; }

std::vector<double> uniform_grid(double lo, double hi, int n) {
  if (n < 1) throw ParameterError("grid needs at least one point");
  if (!(std::isfinite(lo) && std::isfinite(hi))) throw ParameterError("grid bounds must be finite");
  std::vector<double> g(static_cast<std::size_t>(n));
  if (n == 1) {
    g[0] = lo;
    return g;
  }
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  g.back() = hi;
  return g;
}

std::vector<double> default_m_grid() { return uniform_grid(0.0, kDefaultMMax, kDefaultMSteps); }

SweepTable fig1_dataset(std::span<const double> m_grid, std::span<const double> fractions) {
  check_m_grid(m_grid);
  check_fractions(fractions);
  std::vector<Column> cols{{"m", ""}};
  for (double f : fractions) {
    cols.push_back({"s_minus_db_f" + short_number(f), "dB"});
    cols.push_back({"s_plus_db_f" + short_number(f), "dB"});
  }
  SweepTable t(std::move(cols));
  common_metadata(t, m_grid, fractions);
  t.set_metadata("quantity", "zero-frequency squeezing/antisqueezing of the harmonic output");
  for (double m : m_grid) {
    std::vector<double> row{m};
    for (double f : fractions) {
      const auto ex = zero_frequency_extrema(OperatingPoint::from_fraction(m, f));
      row.push_back(db_from_linear(ex.s_minus_0));
      row.push_back(db_from_linear(ex.s_plus_0));
    }
    t.add_row(std::move(row));
  }
  return t;
}

SweepTable fig2_dataset(std::span<const double> m_grid, std::span<const double> fractions,
                        const PowerCalibration& cal) {
  check_m_grid(m_grid);
  check_fractions(fractions);
  std::vector<Column> cols{{"m", ""}};
  for (double f : fractions) cols.push_back({"p_out_mw_f" + short_number(f), "mW"});
  SweepTable t(std::move(cols));
  common_metadata(t, m_grid, fractions);
  t.set_metadata("quantity", "classical harmonic output power");
  t.set_metadata("power_calibration_mw", short_number(cal.c));
  for (double m : m_grid) {
    std::vector<double> row{m};
    for (double f : fractions) row.push_back(output_power(OperatingPoint::from_fraction(m, f), cal));
    t.add_row(std::move(row));
  }
  return t;
}

SweepTable spectrum_sweep(const OperatingPoint& point, std::span<const double> omega_grid,
                          bool with_oracle, double phi, const PhysicalParams& params) {
  require_stable(point);
  check_omega_grid(omega_grid);
  std::vector<Column> cols{{"omega_tilde", ""}, {"s_minus", ""}, {"s_plus", ""},
                           {"theta_s", "rad"}};
  if (with_oracle) {
    cols.push_back({"oracle_s_minus", ""});
    cols.push_back({"oracle_s_plus", ""});
    cols.push_back({"relative_deviation", ""});
  }
  SweepTable t(std::move(cols));
  t.set_metadata("version", kVersion);
  t.set_metadata("m", short_number(point.m()));
  t.set_metadata("eta_in", short_number(point.eta_in()));
  t.set_metadata("phi", short_number(phi));
  t.set_metadata("omega_points", std::to_string(omega_grid.size()));

  std::optional<LinearResponseSystem> sys;
  if (with_oracle) {
    t.set_metadata("gamma_c", short_number(params.gamma_c()));
    t.set_metadata("gamma_s", short_number(params.gamma_s()));
    t.set_metadata("mu", short_number(params.mu()));
    const Realization r = realize(params, point, phi);
    sys = build_system(params, r.steady, r.drive);
  }
  for (double w : omega_grid) {
    const SpectrumSample s = spectrum(point, w, phi);
    std::vector<double> row{w, s.s_minus, s.s_plus, s.theta_s};
    if (sys) {
      const OracleSpectrum o = oracle_spectrum(*sys, w, OutputMode::harmonic);
      row.push_back(o.s_minus);
      row.push_back(o.s_plus);
      row.push_back(std::max(std::abs(o.s_minus - s.s_minus) / s.s_minus,
                             std::abs(o.s_plus - s.s_plus) / s.s_plus));
    }
    t.add_row(std::move(row));
  }
  return t;
}

}  // namespace shgsq
