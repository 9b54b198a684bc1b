#include "fairplan/compute.hpp"
#include "fairplan/ledger.hpp"
#include "fairplan/quantities.hpp"
#include "fairplan/report.hpp"
#include "fairplan/scenario_doc.hpp"
#include "fairplan/tables.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fairplan;

namespace {

scenario_document parse_or_throw(std::string const& text, py::handle error_type) {
    parse_result r = parse_scenario(text);
    if (!r.ok()) {
        py::list errors;
        std::string message;
        for (auto const& e : r.errors) {
            errors.append(py::make_tuple(e.path, e.line, e.message));
            if (!message.empty()) message += "\n";
            message += to_string(e);
        }
        py::object exc = error_type(message);
        exc.attr("errors") = errors;
        PyErr_SetObject(error_type.ptr(), exc.ptr());
        throw py::error_already_set();
    }
    return std::move(*r.document);
}

std::string pick(scenario_document const& doc, std::string const& name) {
    if (!name.empty()) return name;
    if (doc.scenarios.contains("FS+")) return "FS+";
    if (doc.scenarios.empty()) throw validation_error("document defines no scenarios");
    return doc.scenarios.begin()->first;
}

}

PYBIND11_MODULE(_fairplan, m) {
    m.doc() = "Resource planning engine";

    auto validation = py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<computation_error>(m, "ComputationError", PyExc_RuntimeError);
    m.attr("ScenarioError") = py::reinterpret_steal<py::object>(
        PyErr_NewException("fairplan._fairplan.ScenarioError", validation.ptr(), nullptr));

    py::class_<scenario_document>(m, "Document")
        .def_static(
            "parse",
            [](std::string const& text) {
                return parse_or_throw(text, py::module_::import("fairplan._fairplan").attr("ScenarioError"));
            },
            py::arg("text"))
        .def_property_readonly("experiments",
                               [](scenario_document const& d) {
                                   std::vector<std::string> names;
                                   for (auto const& [name, e] : d.experiments) names.push_back(name);
                                   return names;
                               })
        .def_property_readonly("scenarios",
                               [](scenario_document const& d) {
                                   std::vector<std::string> names;
                                   for (auto const& [name, s] : d.scenarios) names.push_back(name);
                                   return names;
                               })
        .def("emit", &emit_scenario)
        .def(
            "tables",
            [](scenario_document const& d, std::string const& table, std::string const& format) {
                report r;
                r.tables = build_tables(d, parse_table_kind(table));
                return emit_report(r, parse_report_format(format));
            },
            py::arg("table"), py::arg("format") = "markdown")
        .def(
            "aggregate",
            [](scenario_document const& d, std::string const& scenario, std::string const& format) {
                report r;
                r.tables = aggregate_tables(d, pick(d, scenario));
                return emit_report(r, parse_report_format(format));
            },
            py::arg("scenario") = "", py::arg("format") = "markdown")
        .def(
            "timeline",
            [](scenario_document const& d, std::string const& scenario, int from, int to, bool archive,
               std::string const& format) {
                report r;
                r.series = timeline_series(d, pick(d, scenario), year_range{from, to}, archive);
                return emit_report(r, parse_report_format(format));
            },
            py::arg("scenario") = "", py::arg("from_year") = 2028, py::arg("to_year") = 2040,
            py::arg("archive") = false, py::arg("format") = "markdown")
        .def(
            "report",
            [](scenario_document const& d, std::string const& format, int from, int to) {
                return emit_report(full_report(d, year_range{from, to}), parse_report_format(format));
            },
            py::arg("format"), py::arg("from_year") = 2028, py::arg("to_year") = 2040)
        .def(
            "tier0_fraction",
            [](scenario_document const& d, std::string const& scenario) {
                return tier0_minimum(d.resolve_scenario(pick(d, scenario))).fraction_of_total;
            },
            py::arg("scenario") = "")
        .def(
            "saturation_pb",
            [](scenario_document const& d, std::string const& scenario, int from, int to) {
                return storage_evolution(d.resolve_scenario(pick(d, scenario)), year_range{from, to}).saturation.bytes() /
                       1e15;
            },
            py::arg("scenario") = "", py::arg("from_year") = 2028, py::arg("to_year") = 2040);

    m.def(
        "validate",
        [](std::string const& text) {
            std::vector<py::tuple> out;
            for (auto const& e : parse_scenario(text).errors) {
                out.push_back(py::make_tuple(e.path, e.line, e.message));
            }
            return out;
        },
        py::arg("text"), "Located errors as (path, line, message); empty when the document is valid.");

    m.def(
        "convert_volume",
        [](double value, std::string const& unit_prefix, std::string const& convention) {
            return convert_volume(value, parse_prefix(unit_prefix), parse_byte_convention(convention)).bytes();
        },
        py::arg("value"), py::arg("prefix"), py::arg("convention") = "decimal", "Bytes for a prefixed value.");
    m.def(
        "hs06_scale_by_clock",
        [](double hs06, double ref_mhz, double target_mhz) {
            return hs06_scale_by_clock(compute_power::hs06(hs06), ref_mhz, target_mhz).value();
        },
        py::arg("hs06"), py::arg("reference_clock_mhz"), py::arg("target_clock_mhz"));
    m.def("online_reco_time", &online_reco_time, py::arg("l1_seconds"), py::arg("full_reco_factor"),
          py::arg("momentum_factor"));
    m.def("hs06_per_event", &hs06_per_event, py::arg("seconds_per_event"), py::arg("hs06_per_core"));
    m.def(
        "campaign_hs06",
        [](double events, double per_event, double days, double efficiency, int generations) {
            auto const r = campaign_hs06(campaign{events, per_event, days, efficiency, generations});
            return py::make_tuple(r.per_generation.value(), r.per_year.value());
        },
        py::arg("events"), py::arg("hs06_per_event"), py::arg("active_days"), py::arg("cpu_efficiency") = 1.0,
        py::arg("generations") = 1, "(per generation, per year) HS06.");
    m.def(
        "offline_total",
        [](double sim, double reco, double fraction) {
            return offline_total(compute_power::hs06(sim), compute_power::hs06(reco), fraction).value();
        },
        py::arg("simulation"), py::arg("reconstruction"), py::arg("analysis_fraction"));
    m.def(
        "reprocessed_accumulation",
        [](double annual, int generations, int taking, int years) {
            auto const s = reprocessed_accumulation(annual, generations, taking, years);
            return py::make_tuple(s.increase_tb, s.cumulative_tb);
        },
        py::arg("annual_tb"), py::arg("generations"), py::arg("data_taking_years"), py::arg("years"),
        "(yearly increase, cumulative) in TB.");
    m.attr("schema_version") = std::string(schema_version);
}
