// Python bindings for the wedge spontaneous-emission library.  Mirrors the
// C++ API one-to-one; domain errors surface as ValueError, the oracle's
// convergence failures as wedgese.NonConvergenceError.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wedgese/oracle.hpp"
#include "wedgese/rates.hpp"
#include "wedgese/scan.hpp"
#include "wedgese/specfun.hpp"
#include "wedgese/verify.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_wedgese, m) {
    m.doc() = "Spontaneous-emission rates for a dipole inside a conducting wedge";

    // Domain errors from argument validation read as ValueError in Python.
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const std::domain_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const std::invalid_argument& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });
    py::register_exception<wedgese::oracle::non_convergence_error>(m, "NonConvergenceError",
                                                                   PyExc_RuntimeError);
    py::register_exception<wedgese::oracle::truncation_error>(m, "TruncationError",
                                                              PyExc_RuntimeError);
    py::register_exception<wedgese::scan::io_error>(m, "IoError", PyExc_OSError);

    // ---- geometry and rates ----
    py::class_<wedgese::WedgeGeometry>(m, "WedgeGeometry")
        .def(py::init<int>(), py::arg("q"))
        .def_readonly("q", &wedgese::WedgeGeometry::q)
        .def("alpha", &wedgese::WedgeGeometry::alpha)
        .def("__repr__", [](const wedgese::WedgeGeometry& g) {
            return "WedgeGeometry(q=" + std::to_string(g.q) + ")";
        });

    py::class_<wedgese::AtomPosition>(m, "AtomPosition")
        .def(py::init<double, double>(), py::arg("x"), py::arg("phi"))
        .def_readonly("x", &wedgese::AtomPosition::x)
        .def_readonly("phi", &wedgese::AtomPosition::phi)
        .def("declination", &wedgese::AtomPosition::declination, py::arg("geom"));

    py::class_<wedgese::Transition>(m, "Transition")
        .def(py::init<double, double, double, double>(), py::arg("k_ab"),
             py::arg("gamma_free_rho"), py::arg("gamma_free_phi"), py::arg("gamma_free_z"))
        .def_readonly("k_ab", &wedgese::Transition::k_ab)
        .def_readonly("gamma_free_rho", &wedgese::Transition::gamma_free_rho)
        .def_readonly("gamma_free_phi", &wedgese::Transition::gamma_free_phi)
        .def_readonly("gamma_free_z", &wedgese::Transition::gamma_free_z);

    py::class_<wedgese::DipoleWeights>(m, "DipoleWeights")
        .def(py::init<double, double, double>(), py::arg("rho"), py::arg("phi"), py::arg("z"))
        .def_readonly("rho", &wedgese::DipoleWeights::rho)
        .def_readonly("phi", &wedgese::DipoleWeights::phi)
        .def_readonly("z", &wedgese::DipoleWeights::z);

    py::class_<wedgese::RateResult>(m, "RateResult")
        .def_readonly("braces_rho", &wedgese::RateResult::braces_rho)
        .def_readonly("braces_phi", &wedgese::RateResult::braces_phi)
        .def_readonly("braces_z", &wedgese::RateResult::braces_z)
        .def_readonly("norm_rho", &wedgese::RateResult::norm_rho)
        .def_readonly("norm_phi", &wedgese::RateResult::norm_phi)
        .def_readonly("norm_z", &wedgese::RateResult::norm_z)
        .def_readonly("norm_total", &wedgese::RateResult::norm_total);

    m.def("braces_rho", &wedgese::braces_rho, py::arg("geom"), py::arg("pos"));
    m.def("braces_phi", &wedgese::braces_phi, py::arg("geom"), py::arg("pos"));
    m.def("braces_z", &wedgese::braces_z, py::arg("geom"), py::arg("pos"));
    m.def("normalized_rates", &wedgese::normalized_rates, py::arg("geom"), py::arg("pos"),
          py::arg("weights"));
    m.def("free_space_rate", &wedgese::free_space_rate, py::arg("dipole_sq"), py::arg("k_ab"),
          py::arg("hbar"));
    m.def("emitted_power", &wedgese::emitted_power, py::arg("transitions"), py::arg("geom"),
          py::arg("rho"), py::arg("phi"), py::arg("hbar"), py::arg("c"));

    // ---- special functions ----
    m.def("g_parallel", &wedgese::specfun::g_parallel, py::arg("x"));
    m.def("g_perp", &wedgese::specfun::g_perp, py::arg("x"));
    m.def("h_phi", &wedgese::specfun::h_phi, py::arg("x"), py::arg("psi"));
    m.def("h_rho", &wedgese::specfun::h_rho, py::arg("x"), py::arg("psi"));
    m.def("bessel_j", &wedgese::specfun::bessel_j, py::arg("n"), py::arg("x"));
    m.def("bessel_j_prime", &wedgese::specfun::bessel_j_prime, py::arg("n"), py::arg("x"));
    m.def("bessel_j_array", &wedgese::specfun::bessel_j_array, py::arg("n_max"), py::arg("x"));

    // ---- mode-sum oracle ----
    py::enum_<wedgese::oracle::Polarization>(m, "Polarization")
        .value("rho", wedgese::oracle::Polarization::Rho)
        .value("phi", wedgese::oracle::Polarization::Phi)
        .value("z", wedgese::oracle::Polarization::Z);

    py::enum_<wedgese::oracle::ModeKind>(m, "ModeKind")
        .value("TM", wedgese::oracle::ModeKind::TM)
        .value("TE", wedgese::oracle::ModeKind::TE);

    py::enum_<wedgese::oracle::TrigKind>(m, "TrigKind")
        .value("sin2", wedgese::oracle::TrigKind::Sin2)
        .value("cos2", wedgese::oracle::TrigKind::Cos2);

    py::enum_<wedgese::oracle::SumFamily>(m, "SumFamily")
        .value("j_squared", wedgese::oracle::SumFamily::JSquared)
        .value("m2_j_squared", wedgese::oracle::SumFamily::MSquaredJSquared)
        .value("jprime_squared", wedgese::oracle::SumFamily::JPrimeSquared);

    py::class_<wedgese::oracle::QuadratureConfig>(m, "QuadratureConfig")
        .def(py::init([](int nodes, int m_margin, double tolerance) {
                 wedgese::oracle::QuadratureConfig cfg;
                 cfg.nodes = nodes;
                 cfg.m_margin = m_margin;
                 cfg.tolerance = tolerance;
                 return cfg;
             }),
             py::arg("nodes") = 400, py::arg("m_margin") = 40, py::arg("tolerance") = 1e-8)
        .def_readwrite("nodes", &wedgese::oracle::QuadratureConfig::nodes)
        .def_readwrite("m_margin", &wedgese::oracle::QuadratureConfig::m_margin)
        .def_readwrite("tolerance", &wedgese::oracle::QuadratureConfig::tolerance);

    py::class_<wedgese::oracle::ModeWeight>(m, "ModeWeight")
        .def_readonly("value", &wedgese::oracle::ModeWeight::value);

    m.def("mode_weight", &wedgese::oracle::mode_weight, py::arg("geom"), py::arg("pos"),
          py::arg("pol"), py::arg("m"), py::arg("kind"), py::arg("theta"));
    m.def("mode_sum_braces", &wedgese::oracle::mode_sum_braces, py::arg("geom"), py::arg("pos"),
          py::arg("pol"), py::arg("cfg") = wedgese::oracle::QuadratureConfig{});
    m.def("check_addition_theorem", &wedgese::oracle::check_addition_theorem, py::arg("q"),
          py::arg("arg"), py::arg("phi"), py::arg("trig"), py::arg("family"), py::arg("m_terms"));
    m.def("check_derivative_identity", &wedgese::oracle::check_derivative_identity, py::arg("n"),
          py::arg("x"));
    m.def("check_angular_reduction", &wedgese::oracle::check_angular_reduction, py::arg("mu"),
          py::arg("nu"), py::arg("a"));

    // ---- scans and CSV ----
    py::enum_<wedgese::scan::ScanMode>(m, "ScanMode")
        .value("point", wedgese::scan::ScanMode::Point)
        .value("radial", wedgese::scan::ScanMode::Radial)
        .value("angular", wedgese::scan::ScanMode::Angular)
        .value("bisector", wedgese::scan::ScanMode::Bisector)
        .value("surface", wedgese::scan::ScanMode::Surface);

    py::enum_<wedgese::scan::RateColumn>(m, "RateColumn")
        .value("rho", wedgese::scan::RateColumn::Rho)
        .value("phi", wedgese::scan::RateColumn::Phi)
        .value("z", wedgese::scan::RateColumn::Z)
        .value("total", wedgese::scan::RateColumn::Total);

    py::class_<wedgese::scan::Range>(m, "Range")
        .def(py::init([](double min, double max, int count) {
                 return wedgese::scan::Range{min, max, count};
             }),
             py::arg("min") = 0.0, py::arg("max") = 0.0, py::arg("count") = 1)
        .def_readwrite("min", &wedgese::scan::Range::min)
        .def_readwrite("max", &wedgese::scan::Range::max)
        .def_readwrite("count", &wedgese::scan::Range::count);

    py::class_<wedgese::scan::ScanSpec>(m, "ScanSpec")
        .def(py::init<>())
        .def_readwrite("q", &wedgese::scan::ScanSpec::q)
        .def_readwrite("mode", &wedgese::scan::ScanSpec::mode)
        .def_readwrite("x_range", &wedgese::scan::ScanSpec::x_range)
        .def_readwrite("phi_range", &wedgese::scan::ScanSpec::phi_range)
        .def_readwrite("polarizations", &wedgese::scan::ScanSpec::polarizations)
        .def_readwrite("weights", &wedgese::scan::ScanSpec::weights)
        .def_readwrite("output_path", &wedgese::scan::ScanSpec::output_path);

    py::class_<wedgese::scan::ScanRow>(m, "ScanRow")
        .def_readonly("x", &wedgese::scan::ScanRow::x)
        .def_readonly("phi", &wedgese::scan::ScanRow::phi)
        .def_readonly("rate_rho", &wedgese::scan::ScanRow::rate_rho)
        .def_readonly("rate_phi", &wedgese::scan::ScanRow::rate_phi)
        .def_readonly("rate_z", &wedgese::scan::ScanRow::rate_z)
        .def_readonly("rate_total", &wedgese::scan::ScanRow::rate_total);

    m.def("run_scan", &wedgese::scan::run_scan, py::arg("spec"), py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("figure_preset", &wedgese::scan::figure_preset, py::arg("id"), py::arg("q") = 0);
    m.def("write_csv", &wedgese::scan::write_csv, py::arg("rows"), py::arg("path"));
    m.def("csv_string", &wedgese::scan::csv_string, py::arg("rows"));

    // ---- verification ----
    py::enum_<wedgese::verify::Level>(m, "VerifyLevel")
        .value("fast", wedgese::verify::Level::Fast)
        .value("full", wedgese::verify::Level::Full);

    py::class_<wedgese::verify::CheckResult>(m, "CheckResult")
        .def_readonly("name", &wedgese::verify::CheckResult::name)
        .def_readonly("residual", &wedgese::verify::CheckResult::residual)
        .def_readonly("bound", &wedgese::verify::CheckResult::bound)
        .def_readonly("pass_", &wedgese::verify::CheckResult::pass)
        .def_readonly("note", &wedgese::verify::CheckResult::note);

    py::class_<wedgese::verify::Report>(m, "Report")
        .def_readonly("checks", &wedgese::verify::Report::checks)
        .def("all_pass", &wedgese::verify::Report::all_pass);

    m.def("run_verify", &wedgese::verify::run_verify, py::arg("level"),
          py::arg("oracle_nodes") = 400, py::call_guard<py::gil_scoped_release>());
}
