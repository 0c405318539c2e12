#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "shgsq/errors.hpp"
#include "shgsq/model.hpp"
#include "shgsq/oracle.hpp"
#include "shgsq/spectra.hpp"
#include "shgsq/steady_state.hpp"
#include "shgsq/sweep.hpp"
#include "shgsq/table.hpp"

namespace py = pybind11;
using namespace shgsq;

namespace {

py::dict table_to_dict(const SweepTable& t) {
  py::dict d;
  py::dict meta;
  for (const auto& [k, v] : t.metadata()) meta[py::str(k)] = v;
  py::list cols;
  for (const auto& c : t.columns()) cols.append(py::make_tuple(c.name, c.unit));
  d["metadata"] = meta;
  d["columns"] = cols;
  d["rows"] = t.rows();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Squeezing spectra of a singly resonant doubler driven in both modes";
  m.attr("__version__") = kVersion;

  auto parameter_error = py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<InstabilityError>(m, "InstabilityError", parameter_error.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  py::class_<PhysicalParams>(m, "PhysicalParams")
      .def(py::init<double, double, double>(), py::arg("gamma_c"), py::arg("gamma_s"), py::arg("mu"))
      .def_property_readonly("gamma_c", &PhysicalParams::gamma_c)
      .def_property_readonly("gamma_s", &PhysicalParams::gamma_s)
      .def_property_readonly("mu", &PhysicalParams::mu)
      .def_property_readonly("gamma", &PhysicalParams::gamma);

  py::class_<DriveConfig>(m, "DriveConfig")
      .def(py::init<double, double, double, double>(), py::arg("alpha_in_amp"), py::arg("phi"),
           py::arg("beta_in_amp"), py::arg("varphi"))
      .def_static("in_phase", &DriveConfig::in_phase, py::arg("alpha_in_amp"), py::arg("phi"),
                  py::arg("beta_in_amp"))
      .def_property_readonly("alpha_in_amp", &DriveConfig::alpha_in_amp)
      .def_property_readonly("phi", &DriveConfig::phi)
      .def_property_readonly("beta_in_amp", &DriveConfig::beta_in_amp)
      .def_property_readonly("varphi", &DriveConfig::varphi);

  py::class_<OperatingPoint>(m, "OperatingPoint")
      .def(py::init<double, double>(), py::arg("m"), py::arg("eta_in"))
      .def_static("from_fraction", &OperatingPoint::from_fraction, py::arg("m"), py::arg("fraction"))
      .def_property_readonly("m", &OperatingPoint::m)
      .def_property_readonly("eta_in", &OperatingPoint::eta_in)
      .def_property_readonly("b", &OperatingPoint::b)
      .def_property_readonly("stability_fraction", &OperatingPoint::stability_fraction)
      .def_property_readonly("is_stable", &OperatingPoint::is_stable)
      .def("__repr__", [](const OperatingPoint& p) {
        return "OperatingPoint(m=" + std::to_string(p.m()) + ", eta_in=" + std::to_string(p.eta_in()) + ")";
      });

  py::class_<SteadyState>(m, "SteadyState")
      .def_readonly("alpha_amp", &SteadyState::alpha_amp)
      .def_readonly("alpha_phase", &SteadyState::alpha_phase)
      .def_readonly("residual", &SteadyState::residual)
      .def_property_readonly("n", &SteadyState::n);

  py::class_<StabilityReport>(m, "StabilityReport")
      .def_readonly("lambda_minus", &StabilityReport::lambda_minus)
      .def_readonly("lambda_plus", &StabilityReport::lambda_plus)
      .def_readonly("stable", &StabilityReport::stable)
      .def_readonly("fraction", &StabilityReport::fraction)
      .def_readonly("margin", &StabilityReport::margin);

  py::class_<SpectrumSample>(m, "SpectrumSample")
      .def_readonly("omega_tilde", &SpectrumSample::omega_tilde)
      .def_readonly("s_minus", &SpectrumSample::s_minus)
      .def_readonly("s_plus", &SpectrumSample::s_plus)
      .def_readonly("theta_s", &SpectrumSample::theta_s)
      .def_readonly("theta_a", &SpectrumSample::theta_a);

  py::class_<PowerCalibration>(m, "PowerCalibration")
      .def(py::init<double>(), py::arg("c") = PowerCalibration::kDefaultMilliwatts)
      .def_readonly("c", &PowerCalibration::c);

  py::class_<OracleSpectrum>(m, "OracleSpectrum")
      .def_readonly("omega_tilde", &OracleSpectrum::omega_tilde)
      .def_readonly("n_corr", &OracleSpectrum::n_corr)
      .def_readonly("a_corr", &OracleSpectrum::a_corr)
      .def_readonly("s_minus", &OracleSpectrum::s_minus)
      .def_readonly("s_plus", &OracleSpectrum::s_plus)
      .def_readonly("nu", &OracleSpectrum::nu);

  py::enum_<OutputMode>(m, "OutputMode")
      .value("harmonic", OutputMode::harmonic)
      .value("fundamental", OutputMode::fundamental);

  py::class_<LinearResponseSystem>(m, "LinearResponseSystem");

  m.def("scale", &scale, py::arg("params"), py::arg("steady"), py::arg("drive"));
  m.def("unscale", [](const PhysicalParams& p, const OperatingPoint& pt) {
    const auto r = unscale(p, pt);
    return py::make_tuple(r.n, r.beta_in_amp);
  }, py::arg("params"), py::arg("point"), "Returns (n, beta_in_amp).");
  m.def("db_from_linear", &db_from_linear, py::arg("s"));
  m.def("suppression_percent", &suppression_percent, py::arg("s"));

  m.def("required_pump", &required_pump, py::arg("params"), py::arg("n"), py::arg("beta_in_amp"));
  m.def("solve_intracavity", &solve_intracavity, py::arg("params"), py::arg("drive"));
  m.def("eigenvalues_closed", &eigenvalues_closed, py::arg("params"), py::arg("point"));
  m.def("eigenvalues_numeric", [](const PhysicalParams& p, const SteadyState& s, const DriveConfig& d) {
    const auto e = eigenvalues_numeric(drift_matrix(p, s, d));
    return py::make_tuple(e.minus, e.plus);
  }, py::arg("params"), py::arg("steady"), py::arg("drive"),
        "Eigenvalues of the drift matrix built from a steady state.");

  m.def("spectrum", &spectrum, py::arg("point"), py::arg("omega_tilde"), py::arg("phi") = 0.0);
  m.def("zero_frequency_extrema", [](const OperatingPoint& p) {
    const auto e = zero_frequency_extrema(p);
    return py::make_tuple(e.s_minus_0, e.s_plus_0);
  }, py::arg("point"));
  m.def("squeezed_phase", &squeezed_phase, py::arg("drive"));
  m.def("output_power", &output_power, py::arg("point"), py::arg("cal") = PowerCalibration{});

  m.def("build_system", &build_system, py::arg("params"), py::arg("steady"), py::arg("drive"));
  m.def("oracle_spectrum", &oracle_spectrum, py::arg("system"), py::arg("omega_tilde"),
        py::arg("mode") = OutputMode::harmonic);
  m.def("compare_with_closed_form", [](const OperatingPoint& p, const std::vector<double>& grid) {
    return compare_with_closed_form(p, grid);
  }, py::arg("point"), py::arg("omega_grid"));

  m.def("fig1_dataset", [](const std::vector<double>& m_grid, const std::vector<double>& fractions) {
    return table_to_dict(fig1_dataset(m_grid, fractions));
  }, py::arg("m_grid") = default_m_grid(), py::arg("fractions") = default_fractions());
  m.def("fig2_dataset", [](const std::vector<double>& m_grid, const std::vector<double>& fractions,
                           const PowerCalibration& cal) {
    return table_to_dict(fig2_dataset(m_grid, fractions, cal));
  }, py::arg("m_grid") = default_m_grid(), py::arg("fractions") = default_fractions(),
        py::arg("cal") = PowerCalibration{});
  m.def("spectrum_sweep", [](const OperatingPoint& p, const std::vector<double>& grid, bool oracle,
                             double phi) {
    return table_to_dict(spectrum_sweep(p, grid, oracle, phi));
  }, py::arg("point"), py::arg("omega_grid"), py::arg("with_oracle") = false, py::arg("phi") = 0.0);
}
