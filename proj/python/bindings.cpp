#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wsdirac/bound_states.hpp"
#include "wsdirac/errors.hpp"
#include "wsdirac/oracle.hpp"
#include "wsdirac/scattering.hpp"
#include "wsdirac/special_fn.hpp"
#include "wsdirac/supercriticality.hpp"

namespace py = pybind11;
using namespace wsdirac;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dirac scattering and bound states in a Woods-Saxon potential";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<PoleError>(m, "PoleError", error.ptr());
  py::register_exception<NonConvergence>(m, "NonConvergence", error.ptr());
  py::register_exception<DegenerateParameters>(m, "DegenerateParameters", error.ptr());
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<ThresholdError>(m, "ThresholdError", error.ptr());
  py::register_exception<OverflowError>(m, "OverflowError", error.ptr());
  py::register_exception<StiffnessError>(m, "StiffnessError", error.ptr());

  py::class_<PhysicalConfig>(m, "PhysicalConfig")
      .def(py::init([](double m0, double m1, double v0, double alpha, double half_width) {
             return PhysicalConfig{m0, m1, v0, alpha, half_width};
           }),
           py::arg("m0") = 0.4, py::arg("m1") = 0.0, py::arg("v0") = 1.2, py::arg("alpha") = 5.0,
           py::arg("half_width") = 10.0)
      .def_readwrite("m0", &PhysicalConfig::m0)
      .def_readwrite("m1", &PhysicalConfig::m1)
      .def_readwrite("v0", &PhysicalConfig::v0)
      .def_readwrite("alpha", &PhysicalConfig::alpha)
      .def_readwrite("half_width", &PhysicalConfig::half_width)
      .def("validate", &validate)
      .def("__repr__", [](const PhysicalConfig& c) {
        return "PhysicalConfig(m0=" + py::repr(py::float_(c.m0)).cast<std::string>() +
               ", m1=" + py::repr(py::float_(c.m1)).cast<std::string>() +
               ", v0=" + py::repr(py::float_(c.v0)).cast<std::string>() +
               ", alpha=" + py::repr(py::float_(c.alpha)).cast<std::string>() +
               ", half_width=" + py::repr(py::float_(c.half_width)).cast<std::string>() + ")";
      });

  py::enum_<ProblemKind>(m, "ProblemKind")
      .value("BARRIER", ProblemKind::Barrier)
      .value("WELL", ProblemKind::Well);
  py::enum_<MuBranch>(m, "MuBranch")
      .value("DECAYING", MuBranch::Decaying)
      .value("AS_PRINTED", MuBranch::AsPrinted);
  py::enum_<SweepVariable>(m, "SweepVariable")
      .value("ENERGY", SweepVariable::Energy)
      .value("V0", SweepVariable::V0)
      .value("ALPHA", SweepVariable::Alpha)
      .value("HALF_WIDTH", SweepVariable::HalfWidth);
  py::enum_<OracleMode>(m, "OracleMode")
      .value("REDUCED", OracleMode::Reduced)
      .value("FULL_COUPLED", OracleMode::FullCoupled)
      .value("FULL_WITH_MASS_DERIVATIVE", OracleMode::FullWithMassDerivative);

  py::class_<ScatteringResult>(m, "ScatteringResult")
      .def_readonly("energy", &ScatteringResult::energy)
      .def_readonly("ratio_left", &ScatteringResult::ratio_left)
      .def_readonly("ratio_right", &ScatteringResult::ratio_right)
      .def_readonly("reflection", &ScatteringResult::reflection)
      .def_readonly("transmission", &ScatteringResult::transmission)
      .def_readonly("unitarity_defect", &ScatteringResult::unitarity_defect)
      .def_readonly("evanescent", &ScatteringResult::evanescent);

  py::class_<Resonance>(m, "Resonance")
      .def_readonly("energy", &Resonance::energy)
      .def_readonly("residual", &Resonance::residual)
      .def_readonly("transmission", &Resonance::transmission);

  py::class_<BoundStateSpectrum>(m, "BoundStateSpectrum")
      .def_readonly("energies", &BoundStateSpectrum::energies)
      .def_readonly("residuals", &BoundStateSpectrum::residuals)
      .def_readonly("count", &BoundStateSpectrum::count)
      .def_readonly("tolerance", &BoundStateSpectrum::tolerance);

  py::class_<OracleScattering>(m, "OracleScattering")
      .def_readonly("reflection", &OracleScattering::reflection)
      .def_readonly("transmission", &OracleScattering::transmission);

  m.def("reflection_transmission", &reflection_transmission, py::arg("cfg"), py::arg("energy"));
  m.def(
      "amplitude_ratios",
      [](const PhysicalConfig& c, double e) {
        const AmplitudeRatios r = amplitude_ratios(c, e);
        return py::make_tuple(r.reflected, r.transmitted);
      },
      py::arg("cfg"), py::arg("energy"), "(L2/L1, R2/L1)");
  m.def(
      "sweep",
      [](const PhysicalConfig& c, SweepVariable var, double lo, double hi, int n, double energy) {
        // holes come back as None
        py::list out;
        for (const SweepPoint& p : sweep(c, energy, var, lo, hi, n)) {
          out.append(py::make_tuple(p.parameter, p.result ? py::cast(*p.result) : py::none()));
        }
        return out;
      },
      py::arg("cfg"), py::arg("variable"), py::arg("lo"), py::arg("hi"), py::arg("n_points"),
      py::arg("energy") = 0.0);
  m.def(
      "resonances",
      [](const PhysicalConfig& c, double lo, double hi, double tol) {
        ResonanceOptions o;
        o.tol = tol;
        return resonances(c, lo, hi, o);
      },
      py::arg("cfg"), py::arg("lo"), py::arg("hi"), py::arg("tol") = 1e-7);

  m.def("eigen_condition", &eigen_condition, py::arg("cfg"), py::arg("energy"),
        py::arg("branch") = MuBranch::Decaying);
  m.def(
      "find_bound_states",
      [](const PhysicalConfig& c, int n_grid, std::optional<double> tol, MuBranch branch) {
        return find_bound_states(c, BoundStateOptions{n_grid, tol, branch});
      },
      py::arg("cfg"), py::arg("n_grid") = 2000, py::arg("tol") = py::none(),
      py::arg("branch") = MuBranch::Decaying);

  m.def(
      "verify_equivalence",
      [](const PhysicalConfig& c) {
        py::list out;
        for (const LowMomentumReport& r : verify_equivalence(c)) {
          py::dict d;
          d["sign"] = r.sign == EnergySign::Plus ? "+" : "-";
          d["resonance_value"] = r.resonance_value;
          d["bound_value"] = r.bound_value;
          d["parameter_identity_ok"] = r.parameter_identity_ok;
          d["difference"] = r.difference;
          d["values_agree"] = r.values_agree;
          out.append(d);
        }
        return out;
      },
      py::arg("cfg"));

  m.def(
      "integrate_scattering",
      [](const PhysicalConfig& c, double e, OracleMode mode) {
        IntegrationSettings s;
        s.mode = mode;
        return integrate_scattering(c, e, s);
      },
      py::arg("cfg"), py::arg("energy"), py::arg("mode") = OracleMode::Reduced);
  m.def(
      "shooting_bound_states",
      [](const PhysicalConfig& c, int n_grid, OracleMode mode) {
        IntegrationSettings s;
        s.mode = mode;
        return shooting_bound_states(c, n_grid, s);
      },
      py::arg("cfg"), py::arg("n_grid") = 400, py::arg("mode") = OracleMode::Reduced);

  m.def("log_gamma", &special::log_gamma, py::arg("z"));
  m.def(
      "hyp2f1",
      [](Complex a, Complex b, Complex c, Complex x) { return special::hyp2f1({a, b, c}, x); },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"));
}
