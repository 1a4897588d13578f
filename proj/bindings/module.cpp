#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cqg/report.hpp"

namespace py = pybind11;
using namespace cqg;

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact symbolic verification workbench for the coloured deformation";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    py::class_<SuiteConfig>(m, "SuiteConfig")
        .def(py::init<>())
        .def_readwrite("palette", &SuiteConfig::palette)
        .def_readwrite("c_plus", &SuiteConfig::c_plus)
        .def_readwrite("c_minus", &SuiteConfig::c_minus)
        .def_readwrite("order", &SuiteConfig::order)
        .def_readwrite("step_budget", &SuiteConfig::step_budget)
        .def_readwrite("rll_variants", &SuiteConfig::rll_variants)
        .def(
            "fix_colour",
            [](SuiteConfig& c, const std::string& name, const std::string& value) {
                c.fixed_colours[name] = Rational(value);
            },
            py::arg("name"), py::arg("value"),
            "pin a palette colour to an exact rational value")
        .def(
            "add_q_specialization",
            [](SuiteConfig& c, const std::string& value) {
                c.q_specializations.push_back(Rational(value));
            },
            py::arg("value"), "add an exact q value for numeric cross-evaluation")
        .def(
            "add_colour_specialization",
            [](SuiteConfig& c, const std::map<std::string, std::string>& assignment) {
                std::map<std::string, Rational> conv;
                for (const auto& [name, value] : assignment)
                    conv[name] = Rational(value);
                c.colour_specializations.push_back(conv);
            },
            py::arg("assignment"),
            "add a full colour assignment; the suite is re-run numerically under it");

    py::class_<ReportEntry>(m, "ReportEntry")
        .def_readonly("id", &ReportEntry::id)
        .def_readonly("status", &ReportEntry::status)
        .def_readonly("residual_terms", &ReportEntry::residual_terms)
        .def_readonly("anchor", &ReportEntry::anchor)
        .def_readonly("ms", &ReportEntry::ms)
        .def("__repr__", [](const ReportEntry& e) {
            return "<ReportEntry " + e.id + " " + e.status + ">";
        });

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("suite", &VerificationReport::suite)
        .def_readonly("config_hash", &VerificationReport::config_hash)
        .def_readonly("checks", &VerificationReport::checks)
        .def("gate_ok", &VerificationReport::gate_ok,
             "True when no gating check failed; reported entries never count");

    m.def("suite_names", [] { return suite_names(); },
          "registry order of the verification suites");
    m.def("parse_config", &parse_config, py::arg("path"),
          "load a key = value configuration file");
    m.def("config_hash", &config_hash, py::arg("config"),
          "stable fingerprint of everything that influences suite results");
    m.def("run_suite", &run_suite, py::arg("name"), py::arg("config"),
          "execute one suite (or 'all') and collect its checks");
    m.def("emit_report", &emit_report, py::arg("report"), py::arg("format"),
          "serialize a report as 'json' or 'text'");
    m.def(
        "render_relations",
        [](const SuiteConfig& cfg) { return render_relations(cfg.make_palette()); },
        py::arg("config"), "defining relations of the configured palette");
    m.def(
        "render_tables",
        [](const SuiteConfig& cfg) { return render_tables(cfg.make_palette()); },
        py::arg("config"), "the four calculus coefficient tables");
}
