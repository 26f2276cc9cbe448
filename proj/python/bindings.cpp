// Python bindings for the main operations: closed-form phase predictions
// and config-driven two-arm simulation runs.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "abgrav/analytic.hpp"
#include "abgrav/runner.hpp"
#include "abgrav/solver.hpp"

namespace py = pybind11;

namespace {

abgrav::RedshiftMode parse_mode(const std::string& mode) {
    if (mode == "exact")
        return abgrav::RedshiftMode::Exact;
    if (mode == "weak_field")
        return abgrav::RedshiftMode::WeakField;
    throw abgrav::DomainError("mode must be 'exact' or 'weak_field'");
}

py::dict comparison_dict(const abgrav::PhaseComparison& cmp) {
    py::dict d;
    d["numeric_phase"] = cmp.numeric_phase;
    d["analytic_phase"] = cmp.analytic_phase;
    d["residual"] = cmp.residual();
    d["momentum_drift"] = cmp.momentum_drift;
    d["norm_drift"] = cmp.norm_drift;
    return d;
}

py::dict run_scenario(const std::string& config_text, bool richardson) {
    const auto config = abgrav::parse_config(config_text);
    const auto output = abgrav::simulate(config, richardson);
    py::dict d = comparison_dict(output.report.comparison);
    d["extracted_shift"] = output.fringes.extracted_shift;
    d["timing_seconds"] = output.report.timing_seconds;
    d["times"] = output.result.arm1.times;
    d["dphi"] = output.result.relative_phases;
    d["scenario"] = output.report.scenario_echo;
    if (output.report.convergence) {
        py::dict conv;
        conv["step"] = output.report.convergence->step;
        conv["residual_at_step"] = output.report.convergence->residual_at_step;
        conv["residual_at_half_step"] =
            output.report.convergence->residual_at_half_step;
        conv["ratio"] = output.report.convergence->ratio;
        d["convergence"] = conv;
    }
    return d;
}

py::dict compare_routes_py(const std::string& config_text) {
    const auto config = abgrav::parse_config(config_text);
    const auto cmp = abgrav::compare_routes(config);
    py::dict d;
    d["semi_covariant"] = comparison_dict(cmp.semi_covariant);
    d["proper_time"] = comparison_dict(cmp.proper_time);
    d["difference"] = cmp.difference;
    return d;
}

py::list sweep_py(const std::string& config_text, const std::string& parameter,
                  const std::vector<double>& values, std::size_t workers) {
    const auto config = abgrav::parse_config(config_text);
    const auto rows = abgrav::run_sweep(config, parameter, values, workers);
    py::list out;
    for (const auto& row : rows) {
        py::dict d;
        d["value"] = row.value;
        d["numeric_phase"] = row.numeric_phase;
        d["analytic_phase"] = row.analytic_phase;
        d["residual"] = row.residual;
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Electric Aharonov-Bohm phases and their weak-field "
              "Schwarzschild analog";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const abgrav::ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const abgrav::ValidationError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const abgrav::ConfigError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const abgrav::DomainError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const abgrav::Error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    py::class_<abgrav::Constants>(m, "Constants")
        .def(py::init<>())
        .def_readwrite("hbar", &abgrav::Constants::hbar)
        .def_readwrite("c", &abgrav::Constants::c)
        .def_readwrite("mass", &abgrav::Constants::mass)
        .def_readwrite("charge", &abgrav::Constants::charge)
        .def("rest_energy", &abgrav::Constants::rest_energy);

    m.def(
        "elevator_phase",
        [](double V1, double V2, double dwell, const abgrav::Constants& k) {
            return abgrav::analytic::elevator_phase(V1, V2, dwell, k);
        },
        py::arg("V1"), py::arg("V2"), py::arg("dwell"),
        py::arg("constants") = abgrav::Constants{});

    m.def(
        "newtonian_phase",
        [](double R1, double R2, double dwell, double M,
           const abgrav::Constants& k) {
            return abgrav::analytic::newtonian_phase(R1, R2, dwell, M, k);
        },
        py::arg("R1"), py::arg("R2"), py::arg("dwell"), py::arg("M"),
        py::arg("constants") = abgrav::Constants{});

    m.def(
        "redshift_factor",
        [](double M, double R, const std::string& mode,
           const abgrav::Constants& k) {
            return abgrav::analytic::redshift_factor(abgrav::MetricParams{M, R},
                                                     k, parse_mode(mode));
        },
        py::arg("M"), py::arg("R"), py::arg("mode") = "weak_field",
        py::arg("constants") = abgrav::Constants{});

    m.def(
        "proper_time_route_phase",
        [](double R1, double R2, double dwell, double M, double momentum,
           const abgrav::Constants& k, const std::string& mode) {
            return abgrav::analytic::proper_time_route_phase(
                R1, R2, dwell, M, momentum, k, parse_mode(mode));
        },
        py::arg("R1"), py::arg("R2"), py::arg("dwell"), py::arg("M"),
        py::arg("momentum") = 0.0,
        py::arg("constants") = abgrav::Constants{},
        py::arg("mode") = "weak_field");

    m.def(
        "semi_covariant_phase",
        [](double R1, double R2, double dwell, double M, double p_sq_mean,
           const abgrav::Constants& k, bool include_correction) {
            return abgrav::analytic::semi_covariant_phase(
                R1, R2, dwell, M, p_sq_mean, k, include_correction);
        },
        py::arg("R1"), py::arg("R2"), py::arg("dwell"), py::arg("M"),
        py::arg("p_sq_mean") = 0.0,
        py::arg("constants") = abgrav::Constants{},
        py::arg("include_correction") = true);

    m.def("wrap_to_pi", &abgrav::wrap_to_pi, py::arg("angle"));

    m.def("run_scenario", &run_scenario, py::arg("config_text"),
          py::arg("richardson") = false,
          "Run a two-arm scenario from config text; returns a result dict.");
    m.def("compare_routes", &compare_routes_py, py::arg("config_text"),
          "Run the semi-covariant and proper-time routes on one scenario.");
    m.def("sweep", &sweep_py, py::arg("config_text"), py::arg("parameter"),
          py::arg("values"), py::arg("workers") = 1,
          "Run one scenario over a parameter list; returns a list of rows.");
}
