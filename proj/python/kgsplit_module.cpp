// Python bindings for the kgsplit core: scheme catalog, lattice flows,
// evolution driver and the experiment harness.
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kgsplit/harness.hpp"
#include "kgsplit/io.hpp"

namespace py = pybind11;
using namespace kgsplit;

PYBIND11_MODULE(_kgsplit, m) {
    m.doc() = "splitting symplectic integrators for the disordered "
              "Klein-Gordon chain";

    py::enum_<StageKind>(m, "StageKind")
        .value("DriftA", StageKind::DriftA)
        .value("KickB", StageKind::KickB)
        .value("CorrectorC", StageKind::CorrectorC);

    py::class_<Stage>(m, "Stage")
        .def_readonly("kind", &Stage::kind)
        .def_readonly("coeff", &Stage::coeff);

    py::class_<Scheme>(m, "Scheme")
        .def_readonly("name", &Scheme::name)
        .def_readonly("order_label", &Scheme::order_label)
        .def_readonly("nominal_order", &Scheme::nominal_order)
        .def_readonly("stages", &Scheme::stages)
        .def("kicks_per_step", &Scheme::kicks_per_step)
        .def("__repr__", [](const Scheme& s) {
            return "<Scheme " + s.name + " order " + s.order_label + ">";
        });

    py::class_<ValidationCheck>(m, "ValidationCheck")
        .def_readonly("name", &ValidationCheck::name)
        .def_readonly("passed", &ValidationCheck::passed)
        .def_readonly("residual", &ValidationCheck::residual);

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("checks", &ValidationReport::checks)
        .def("ok", &ValidationReport::ok);

    m.def("catalog_names", [] { return catalog_names(); });
    m.def("catalog_scheme", [](const std::string& n) { return catalog_scheme(n); },
          py::arg("name"));
    m.def("yoshida_compose", &yoshida_compose, py::arg("scheme"));
    m.def("validate", &validate, py::arg("scheme"));

    py::class_<Lattice>(m, "Lattice")
        .def_readonly("eps", &Lattice::eps)
        .def_readonly("w", &Lattice::w)
        .def_readonly("seed", &Lattice::seed)
        .def("__len__", &Lattice::size);

    py::class_<State>(m, "State")
        .def(py::init(&State::zero), py::arg("n"))
        .def_readwrite("q", &State::q)
        .def_readwrite("p", &State::p);

    m.def("make_lattice", &make_lattice, py::arg("n"), py::arg("w"),
          py::arg("seed"));
    m.def("save_lattice", &save_lattice, py::arg("lattice"), py::arg("path"));
    m.def("load_lattice", &load_lattice, py::arg("path"));
    m.def("single_site_excitation", &single_site_excitation, py::arg("lattice"),
          py::arg("energy"));
    m.def("central_site_index", &central_site_index, py::arg("n"));
    m.def("total_energy", &total_energy);
    m.def("potential_energy", &potential_energy);
    m.def("kinetic_energy", &kinetic_energy);
    m.def("site_energies", [](const Lattice& lat, const State& st) {
        std::vector<double> h(lat.size());
        site_energies(lat, st, h);
        return h;
    });
    m.def("grad_b", [](const Lattice& lat, const std::vector<double>& q) {
        std::vector<double> g(q.size());
        grad_b(lat, q, g);
        return g;
    });
    m.def("flow_a", [](State& st, double s) { flow_a(st, s); });
    m.def("flow_b", [](const Lattice& lat, State& st, double s) {
        flow_b(lat, st, s);
    });
    m.def("flow_corrector", [](const Lattice& lat, State& st, double s) {
        flow_corrector(lat, st, s);
    });

    py::class_<WorkCounter>(m, "WorkCounter")
        .def(py::init<>())
        .def_readonly("grad_evals", &WorkCounter::grad_evals)
        .def_readonly("corrector_evals", &WorkCounter::corrector_evals)
        .def_readonly("steps", &WorkCounter::steps);

    m.def("step",
          [](const Scheme& s, const Lattice& lat, State& st, double tau,
             WorkCounter& w) { step(s, lat, st, tau, w); },
          py::arg("scheme"), py::arg("lattice"), py::arg("state"),
          py::arg("tau"), py::arg("work"));

    py::class_<Diagnostics>(m, "Diagnostics")
        .def_readonly("t", &Diagnostics::t)
        .def_readonly("ree", &Diagnostics::ree)
        .def_readonly("m2", &Diagnostics::m2)
        .def_readonly("p", &Diagnostics::p)
        .def_readonly("ibar", &Diagnostics::ibar);

    m.def("diagnostics", &diagnostics, py::arg("lattice"), py::arg("state"),
          py::arg("e0"), py::arg("t"));

    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("scheme", &RunConfig::scheme)
        .def_readwrite("tau", &RunConfig::tau)
        .def_readwrite("sites", &RunConfig::sites)
        .def_readwrite("w", &RunConfig::w)
        .def_readwrite("seed", &RunConfig::seed)
        .def_readwrite("energy", &RunConfig::energy)
        .def_readwrite("t_end", &RunConfig::t_end)
        .def_readwrite("samples", &RunConfig::samples)
        .def_readwrite("out", &RunConfig::out);

    py::class_<ObservationRecord>(m, "ObservationRecord")
        .def_readonly("t", &ObservationRecord::t)
        .def_readonly("ree", &ObservationRecord::ree)
        .def_readonly("m2", &ObservationRecord::m2)
        .def_readonly("p", &ObservationRecord::p)
        .def_readonly("grad_evals", &ObservationRecord::grad_evals)
        .def_readonly("wall_seconds", &ObservationRecord::wall_seconds);

    py::class_<BenchRow>(m, "BenchRow")
        .def_readonly("scheme", &BenchRow::scheme)
        .def_readonly("tau", &BenchRow::tau)
        .def_readonly("max_ree", &BenchRow::max_ree)
        .def_readonly("final_m2", &BenchRow::final_m2)
        .def_readonly("final_p", &BenchRow::final_p)
        .def_readonly("wall_seconds", &BenchRow::wall_seconds)
        .def_readonly("grad_evals_per_unit_time",
                      &BenchRow::grad_evals_per_unit_time)
        .def_readonly("b_evals_per_unit_time", &BenchRow::b_evals_per_unit_time)
        .def_readonly("aborted", &BenchRow::aborted);

    py::class_<RunResult>(m, "RunResult")
        .def_readonly("records", &RunResult::records)
        .def_readonly("summary", &RunResult::summary);

    m.def("run_experiment", &run_experiment, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("calibrate_tau", &calibrate_tau, py::arg("scheme"), py::arg("lattice"),
          py::arg("target_ree") = 1e-5, py::arg("horizon") = 1e3,
          py::arg("energy") = 0.4, py::call_guard<py::gil_scoped_release>());
    m.def("measure_order",
          [](const Scheme& s, const Lattice& lat, std::vector<double> taus) {
              return measure_order(s, lat, taus);
          },
          py::arg("scheme"), py::arg("lattice"), py::arg("taus"),
          py::call_guard<py::gil_scoped_release>());
    m.def("default_order_taus", &default_order_taus);
    m.def("epsilon_scaling_probe", &epsilon_scaling_probe, py::arg("scheme"),
          py::arg("eps_scale"), py::arg("tau"), py::arg("horizon") = 0.3,
          py::arg("sites") = 32, py::arg("seed") = 99,
          py::call_guard<py::gil_scoped_release>());
    m.def("format_catalog_table", &format_catalog_table);
    m.def("format_csv", &format_csv);

    py::class_<BenchTable>(m, "BenchTable")
        .def_readonly("rows", &BenchTable::rows)
        .def_readonly("exclusive_timing", &BenchTable::exclusive_timing)
        .def("format", &BenchTable::format);
    m.def("bench_suite", &bench_suite, py::arg("configs"),
          py::call_guard<py::gil_scoped_release>());

    py::class_<ConfigFile>(m, "ConfigFile")
        .def_readonly("base", &ConfigFile::base)
        .def_readonly("runs", &ConfigFile::runs);
    m.def("parse_config", &parse_config, py::arg("text"));
    m.def("load_config", &load_config, py::arg("path"));
    m.def("serialize_config", &serialize_config, py::arg("config"));
}
