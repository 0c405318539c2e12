// Command-line front end: steady states, stability, spectra, figure tables
// and the oracle cross-check, emitted as CSV or JSON tables.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shgsq/errors.hpp"
#include "shgsq/model.hpp"
#include "shgsq/oracle.hpp"
#include "shgsq/spectra.hpp"
#include "shgsq/steady_state.hpp"
#include "shgsq/sweep.hpp"
#include "shgsq/table.hpp"

namespace {

using namespace shgsq;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr double kOracleTolerance = 1e-10;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PointFlags {
  std::optional<double> m, eta, fraction;
  std::optional<double> gamma_c, gamma_s, mu, alpha_in, beta_in;
  double phi = 0.0;

  bool any_scaled() const { return m || eta || fraction; }
  bool any_physical() const { return gamma_c || gamma_s || mu || alpha_in || beta_in; }
};

struct OutputFlags {
  std::string format = "csv";
  std::string path;
};

struct Resolved {
  PhysicalParams params{1.0, 0.0, 1.0};
  OperatingPoint point{0.0, 0.0};
  std::optional<DriveConfig> drive;
  std::optional<SteadyState> steady;
  bool physical = false;
};

void add_point_flags(CLI::App* cmd, PointFlags& f, bool scaled, bool physical) {
  if (scaled) {
    cmd->add_option("--m", f.m, "Scaled intracavity photon number m = mu n / gamma");
    auto* eta = cmd->add_option("--eta", f.eta, "Scaled harmonic drive eta_in");
    auto* frac = cmd->add_option("--fraction", f.fraction, "Harmonic drive as eta_in / (1 + m)");
    eta->excludes(frac);
  }
  if (physical) {
    cmd->add_option("--gamma-c", f.gamma_c, "Input coupling rate (1/s)");
    cmd->add_option("--gamma-s", f.gamma_s, "Intracavity loss rate (1/s)");
    cmd->add_option("--mu", f.mu, "Two-photon coupling rate (1/s)");
    cmd->add_option("--alpha-in", f.alpha_in, "Fundamental drive amplitude");
    cmd->add_option("--beta-in", f.beta_in, "Harmonic drive amplitude");
  }
  cmd->add_option("--phi", f.phi, "Fundamental drive phase (rad)")->capture_default_str();
}

void add_output_flags(CLI::App* cmd, OutputFlags& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", o.path, "Write to PATH instead of standard output");
}

Resolved resolve(const PointFlags& f) {
  if (f.any_scaled() && f.any_physical())
    throw UsageError("scaled flags (--m/--eta/--fraction) cannot be mixed with physical flags");
  Resolved r;
  if (f.any_physical()) {
    if (!f.gamma_c || !f.mu || !f.alpha_in)
      throw UsageError("physical mode needs --gamma-c, --mu and --alpha-in");
    r.physical = true;
    r.params = PhysicalParams(*f.gamma_c, f.gamma_s.value_or(0.0), *f.mu);
    r.drive = DriveConfig::in_phase(*f.alpha_in, f.phi, f.beta_in.value_or(0.0));
    r.steady = solve_intracavity(r.params, *r.drive);
    r.point = scale(r.params, *r.steady, *r.drive);
    return r;
  }
  if (!f.m) throw UsageError("an operating point needs --m (or the physical flags)");
  r.point = f.fraction ? OperatingPoint::from_fraction(*f.m, *f.fraction)
                       : OperatingPoint(*f.m, f.eta.value_or(0.0));
  return r;
}

void emit(const SweepTable& t, const OutputFlags& o) {
  const std::string text = o.format == "json" ? to_json(t) : to_csv(t);
  if (o.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + o.path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + o.path);
}

std::vector<double> omega_grid(double omega_max, int steps) {
  if (omega_max == 0.0) return {0.0};
  if (!(omega_max > 0.0)) throw ParameterError("--omega-max must be >= 0");
  if (steps < 2) throw ParameterError("--omega-steps must be >= 2");
  return uniform_grid(0.0, omega_max, steps);
}

SweepTable steady_state_table(const Resolved& r) {
  SweepTable t({{"alpha_amp", "sqrt(photons)"}, {"alpha_phase", "rad"}, {"n", "photons"},
                {"residual", ""}, {"m", ""}, {"eta_in", ""}});
  t.set_metadata("version", kVersion);
  t.add_row({r.steady->alpha_amp, r.steady->alpha_phase, r.steady->n(), r.steady->residual,
             r.point.m(), r.point.eta_in()});
  return t;
}

SweepTable stability_table(const Resolved& r) {
  const StabilityReport s = eigenvalues_closed(r.params, r.point);
  const char* unit = r.physical ? "1/s" : "gamma";
  SweepTable t({{"m", ""}, {"eta_in", ""}, {"lambda_minus", unit}, {"lambda_plus", unit},
                {"stable", ""}, {"fraction", ""}, {"margin", ""}});
  t.set_metadata("version", kVersion);
  t.add_row({r.point.m(), r.point.eta_in(), s.lambda_minus, s.lambda_plus, s.stable ? 1.0 : 0.0,
             s.fraction, s.margin});
  return t;
}

SweepTable random_oracle_check(std::uint64_t seed, int samples, double& worst) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SweepTable t({{"sample", ""}, {"gamma_c", "1/s"}, {"gamma_s", "1/s"}, {"mu", "1/s"}, {"m", ""},
                {"eta_in", ""}, {"omega_tilde", ""}, {"relative_deviation", ""}});
  t.set_metadata("version", kVersion);
  t.set_metadata("seed", std::to_string(seed));
  worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const PhysicalParams params(0.1 + 9.9 * unit(rng), 5.0 * unit(rng), 1e-3 + 10.0 * unit(rng));
    const double m = 50.0 * unit(rng);
    const OperatingPoint point(m, (1.0 + m) * unit(rng));
    const double w = 100.0 * unit(rng);
    const double phi = kPi * (2.0 * unit(rng) - 1.0);
    const double err = compare_with_closed_form(params, point, std::span(&w, 1), phi);
    worst = std::max(worst, err);
    t.add_row({static_cast<double>(i), params.gamma_c(), params.gamma_s(), params.mu(), m,
               point.eta_in(), w, err});
  }
  return t;
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const InstabilityError*>(&e)) return "instability";
  if (dynamic_cast<const ParameterError*>(&e)) return "parameter";
  if (dynamic_cast<const ConsistencyError*>(&e)) return "consistency";
  if (dynamic_cast<const NumericError*>(&e)) return "numeric";
  return "runtime";
}

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Squeezing and output power of a singly resonant doubler driven in both modes",
               "shgsq"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  PointFlags pf;
  OutputFlags of;
  double omega_max = 10.0;
  int omega_steps = 101;
  bool with_oracle = false;
  double m_max = kDefaultMMax;
  int m_steps = kDefaultMSteps;
  std::vector<double> fractions = default_fractions();
  double power_cal = PowerCalibration::kDefaultMilliwatts;
  std::uint64_t seed = 1;
  int samples = 1000;

  auto* steady_cmd = app.add_subcommand("steady-state", "Solve the classical fixed point");
  add_point_flags(steady_cmd, pf, false, true);
  add_output_flags(steady_cmd, of);

  auto* stability_cmd = app.add_subcommand("stability", "Drift eigenvalues and stability");
  add_point_flags(stability_cmd, pf, true, true);
  add_output_flags(stability_cmd, of);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Harmonic squeezing spectra");
  add_point_flags(spectrum_cmd, pf, true, true);
  add_output_flags(spectrum_cmd, of);
  spectrum_cmd->add_option("--omega-max", omega_max, "Largest omega/gamma (0: single row)")
      ->capture_default_str();
  spectrum_cmd->add_option("--omega-steps", omega_steps, "Frequency points")->capture_default_str();
  spectrum_cmd->add_flag("--oracle", with_oracle, "Append the linear-response cross-check");

  auto add_fig_flags = [&](CLI::App* cmd) {
    cmd->add_option("--m-max", m_max, "Largest m")->capture_default_str();
    cmd->add_option("--m-steps", m_steps, "Number of m points")->capture_default_str();
    cmd->add_option("--fractions", fractions, "Drive fractions eta_in/(1+m)")
        ->delimiter(',')
        ->capture_default_str();
    add_output_flags(cmd, of);
  };
  auto* fig1_cmd = app.add_subcommand("fig1", "Zero-frequency squeezing/antisqueezing vs m");
  add_fig_flags(fig1_cmd);
  auto* fig2_cmd = app.add_subcommand("fig2", "Classical harmonic output power vs m");
  add_fig_flags(fig2_cmd);
  fig2_cmd->add_option("--power-calibration", power_cal, "mW per scaled unit squared")
      ->capture_default_str();

  auto* check_cmd = app.add_subcommand(
      "oracle-check", "Compare the closed-form spectra with the linear-response oracle");
  add_point_flags(check_cmd, pf, true, false);
  add_output_flags(check_cmd, of);
  check_cmd->add_option("--omega-max", omega_max, "Largest omega/gamma")->capture_default_str();
  check_cmd->add_option("--omega-steps", omega_steps, "Frequency points")
      ->default_val(21)
      ->capture_default_str();
  check_cmd->add_option("--seed", seed, "Seed for the randomized sweep")->capture_default_str();
  check_cmd->add_option("--samples", samples, "Randomized points when no --m is given")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*steady_cmd) {
      emit(steady_state_table(resolve(pf)), of);
    } else if (*stability_cmd) {
      emit(stability_table(resolve(pf)), of);
    } else if (*spectrum_cmd) {
      const Resolved r = resolve(pf);
      const auto grid = omega_grid(omega_max, omega_steps);
      emit(spectrum_sweep(r.point, grid, with_oracle, pf.phi, r.params), of);
    } else if (*fig1_cmd || *fig2_cmd) {
      const auto grid = uniform_grid(0.0, m_max, m_steps);
      emit(*fig1_cmd ? fig1_dataset(grid, fractions)
                     : fig2_dataset(grid, fractions, PowerCalibration(power_cal)),
           of);
    } else if (*check_cmd) {
      double worst = 0.0;
      if (pf.any_scaled()) {
        const Resolved r = resolve(pf);
        const auto grid = omega_grid(omega_max, omega_steps);
        worst = compare_with_closed_form(r.params, r.point, grid, pf.phi);
        SweepTable t({{"m", ""}, {"eta_in", ""}, {"omega_points", ""}, {"max_relative_error", ""}});
        t.set_metadata("version", kVersion);
        t.add_row({r.point.m(), r.point.eta_in(), static_cast<double>(grid.size()), worst});
        emit(t, of);
      } else {
        if (samples < 1) throw UsageError("--samples must be >= 1");
        emit(random_oracle_check(seed, samples, worst), of);
      }
      std::fprintf(stderr, "max_relative_error=%.17g tolerance=%g\n", worst, kOracleTolerance);
      if (!(worst <= kOracleTolerance)) {
        std::fprintf(stderr, "error kind=tolerance: oracle deviation %.3g exceeds %g\n", worst,
                     kOracleTolerance);
        return kExitDomain;
      }
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error kind=usage: %s\n", one_line(e.what()).c_str());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error kind=%s: %s\n", error_kind(e), one_line(e.what()).c_str());
    return kExitDomain;
  }
  return 0;
}
