#include <catch_amalgamated.hpp>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "shgsq/errors.hpp"
#include "shgsq/steady_state.hpp"
#include "support.hpp"

using namespace shgsq;
using shgsq::testing::rel_err;
using shgsq::testing::Sampler;

TEST_CASE("required pump on the in-phase family") {
  const PhysicalParams unit(1.0, 0.0, 1.0);
  CHECK(required_pump(unit, 0.0, 0.0) == 0.0);
  CHECK(required_pump(unit, 0.0, 3.0) == 0.0);
  CHECK(rel_err(required_pump(unit, 1.0, 0.0), 2.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(rel_err(required_pump(unit, 1.0, 0.5), 3.0 / std::sqrt(2.0)) < 1e-15);
  CHECK_THROWS_AS(required_pump(unit, -1.0, 0.0), ParameterError);
  CHECK_THROWS_AS(required_pump(unit, 1.0, -1.0), ParameterError);
}

TEST_CASE("intracavity amplitude solve") {
  const PhysicalParams unit(1.0, 0.0, 1.0);
  auto s = solve_intracavity(unit, DriveConfig::in_phase(0.0, 0.0, 0.0));
  CHECK(s.alpha_amp == 0.0);
  CHECK(s.n() == 0.0);

  s = solve_intracavity(unit, DriveConfig::in_phase(std::sqrt(2.0), 0.0, 0.0));
  CHECK(rel_err(s.alpha_amp, 1.0) < 1e-14);
  CHECK(s.n() == s.alpha_amp * s.alpha_amp);
  CHECK(std::abs(s.residual) < 1e-14);

  s = solve_intracavity(unit, DriveConfig::in_phase(1.0, 2.5, 0.0));
  CHECK(s.alpha_phase == 2.5);
  s = solve_intracavity(unit, DriveConfig::in_phase(1.0, 4.0, 0.0));
  CHECK(s.alpha_phase == Catch::Approx(4.0 - 2.0 * kPi));
}

TEST_CASE("pump and intracavity amplitude round-trip") {
  Sampler s;
  for (int i = 0; i < 2000; ++i) {
    const PhysicalParams params = s.params();
    const double n = s.log_uniform(1e-8, 1e6);
    const double beta = s.uniform(0.0, 1.0) < 0.2 ? 0.0 : s.log_uniform(1e-4, 1e4);
    const double phi = s.uniform(-kPi, kPi);
    const DriveConfig drive = DriveConfig::in_phase(required_pump(params, n, beta), phi, beta);
    const SteadyState st = solve_intracavity(params, drive);
    INFO("sample " << i << " n=" << n);
    CHECK(rel_err(st.alpha_amp, std::sqrt(n)) < 1e-9);
    CHECK(std::abs(st.residual) <= residual_tolerance(drive));
    CHECK(st.alpha_amp >= 0.0);
  }
}

TEST_CASE("extreme drives still converge to the single non-negative root") {
  const PhysicalParams p(1e-3, 0.0, 1e2);
  for (double a : {1e-12, 1e-3, 1.0, 1e6, 1e12}) {
    const auto drive = DriveConfig::in_phase(a, 0.0, 0.0);
    const SteadyState st = solve_intracavity(p, drive);
    CHECK(std::abs(st.residual) <= residual_tolerance(drive));
  }
}

TEST_CASE("drift matrix entries") {
  const PhysicalParams unit(1.0, 0.0, 1.0);
  auto r = realize(unit, OperatingPoint(0.0, 0.0));
  auto dm = drift_matrix(unit, r.steady, r.drive);
  CHECK(dm(0, 0) == Complex(-1.0, 0.0));
  CHECK(dm(1, 1) == Complex(-1.0, 0.0));
  CHECK(std::abs(dm(0, 1)) == 0.0);

  r = realize(unit, OperatingPoint(2.5, 0.0));
  dm = drift_matrix(unit, r.steady, r.drive);
  CHECK(rel_err(dm(0, 0).real(), -6.0) < 1e-14);
  CHECK(rel_err(dm(0, 1).real(), -2.5) < 1e-14);
  CHECK(std::abs(dm(0, 1).imag()) < 1e-14);
  CHECK(dm.conjugate_swap_symmetric());

  // phi = 0: off-diagonal is -(mu n + 2 sqrt(mu)|beta_in|), real and negative.
  const PhysicalParams p(0.7, 0.4, 2.0);
  r = realize(p, OperatingPoint(3.0, 1.2));
  dm = drift_matrix(p, r.steady, r.drive);
  const double expected = -(p.mu() * r.steady.n() + 2.0 * std::sqrt(p.mu()) * r.drive.beta_in_amp());
  CHECK(rel_err(dm(0, 1).real(), expected) < 1e-14);
  CHECK(std::abs(dm(0, 1).imag()) < 1e-14 * std::abs(expected));
}

TEST_CASE("drift matrix conjugate-swap symmetry for random inputs") {
  Sampler s;
  for (int i = 0; i < 500; ++i) {
    const PhysicalParams params = s.params();
    const auto r = realize(params, s.stable_point(), s.uniform(-kPi, kPi));
    CHECK(drift_matrix(params, r.steady, r.drive).conjugate_swap_symmetric());
  }
}

TEST_CASE("drift matrix refuses a stale steady state") {
  const PhysicalParams unit(1.0, 0.0, 1.0);
  const auto r = realize(unit, OperatingPoint(2.5, 1.0));
  const DriveConfig other = DriveConfig::in_phase(r.drive.alpha_in_amp() * 1.01, 0.0,
                                                  r.drive.beta_in_amp());
  CHECK_THROWS_AS(drift_matrix(unit, r.steady, other), ConsistencyError);
  CHECK_THROWS_AS(drift_matrix(PhysicalParams(2.0, 0.0, 1.0), r.steady, r.drive), ConsistencyError);
  SteadyState rotated = r.steady;
  rotated.alpha_phase = 0.3;
  CHECK_THROWS_AS(drift_matrix(unit, rotated, r.drive), ConsistencyError);
}

TEST_CASE("closed-form eigenvalues") {
  const PhysicalParams unit(1.0, 0.0, 1.0);
  auto rep = eigenvalues_closed(unit, OperatingPoint(0.0, 0.0));
  CHECK(rep.lambda_minus == -1.0);
  CHECK(rep.lambda_plus == -1.0);
  CHECK(rep.stable);

  rep = eigenvalues_closed(unit, OperatingPoint(2.5, 1.75));
  CHECK(rep.lambda_minus == -10.25);
  CHECK(rep.lambda_plus == -1.75);
  CHECK(rep.fraction == 0.5);
  CHECK(rep.margin == 0.5);

  rep = eigenvalues_closed(PhysicalParams(1.5, 0.5, 3.0), OperatingPoint(2.5, 1.75));
  CHECK(rep.lambda_minus == -20.5);
  CHECK(rep.lambda_plus == -3.5);

  for (double m : {0.0, 0.1, 2.5, 20.0, 1e3}) {
    rep = eigenvalues_closed(unit, OperatingPoint(m, 1.0 + m));
    CHECK(rep.lambda_plus == 0.0);
    CHECK_FALSE(rep.stable);
    CHECK(rep.lambda_minus <= rep.lambda_plus);
  }
}

TEST_CASE("stability classification matches the slow eigenvalue sign") {
  Sampler s;
  const PhysicalParams unit(1.0, 0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double m = s.uniform(0.0, 50.0);
    const OperatingPoint p(m, s.uniform(0.0, 2.0 * (1.0 + m)));
    const auto rep = eigenvalues_closed(unit, p);
    CHECK(rep.stable == (rep.lambda_plus < 0.0));
    CHECK(rep.stable == (rep.fraction < 1.0));
    CHECK(rep.lambda_minus <= rep.lambda_plus);
  }
}

TEST_CASE("numeric eigenvalues of the drift matrix") {
  const PhysicalParams unit(1.0, 0.0, 1.0);
  auto eig = [&](double m, double eta) {
    const auto r = realize(unit, OperatingPoint(m, eta));
    return eigenvalues_numeric(drift_matrix(unit, r.steady, r.drive));
  };
  auto e = eig(0.0, 0.0);
  CHECK(e.minus == Complex(-1.0, 0.0));
  CHECK(e.plus == Complex(-1.0, 0.0));

  e = eig(2.5, 1.75);
  CHECK(rel_err(e.minus.real(), -10.25) < 1e-14);
  CHECK(rel_err(e.plus.real(), -1.75) < 1e-14);

  e = eig(20.0, 10.5);
  CHECK(rel_err(e.minus.real(), -71.5) < 1e-14);
  CHECK(rel_err(e.plus.real(), -10.5) < 1e-14);
  CHECK(std::abs(e.plus.imag()) < 1e-12);
}

TEST_CASE("2x2 eigenvalues agree with a general eigen-solver") {
  Sampler s;
  for (int i = 0; i < 500; ++i) {
    DriftMatrix dm;
    Eigen::Matrix2cd em;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        dm(r, c) = Complex(s.uniform(-5.0, 5.0), s.uniform(-5.0, 5.0));
        em(r, c) = dm(r, c);
      }
    const EigenPair got = eigenvalues_numeric(dm);
    Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(em, false);
    auto ev = solver.eigenvalues();
    if (ev(1).real() < ev(0).real()) std::swap(ev(0), ev(1));
    CHECK(got.minus.real() <= got.plus.real());
    CHECK(std::abs(got.minus - ev(0)) < 1e-10);
    CHECK(std::abs(got.plus - ev(1)) < 1e-10);
  }
}

TEST_CASE("closed-form and numeric eigenvalues agree on the in-phase family") {
  Sampler s;
  for (int i = 0; i < 1000; ++i) {
    const PhysicalParams params = s.params();
    const double m = s.uniform(0.0, 50.0);
    const OperatingPoint p(m, s.uniform(0.0, 2.0 * (1.0 + m)));
    const auto r = realize(params, p, s.uniform(-kPi, kPi));
    const auto closed = eigenvalues_closed(params, p);
    const auto numeric = eigenvalues_numeric(drift_matrix(params, r.steady, r.drive));
    const double scale = params.gamma();
    INFO("m=" << p.m() << " eta=" << p.eta_in());
    CHECK(std::abs(numeric.minus.real() - closed.lambda_minus) <=
          1e-12 * std::max(std::abs(closed.lambda_minus), scale));
    CHECK(std::abs(numeric.plus.real() - closed.lambda_plus) <=
          1e-12 * std::max(std::abs(closed.lambda_plus), scale));
    CHECK(std::abs(numeric.plus.imag()) <= 1e-12 * scale);
  }
}
