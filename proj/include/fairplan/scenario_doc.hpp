#pragma once

#include "fairplan/beamline.hpp"
#include "fairplan/compute.hpp"
#include "fairplan/detector.hpp"
#include "fairplan/facility.hpp"
#include "fairplan/ledger.hpp"
#include "fairplan/trigger.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fairplan {

inline constexpr std::string_view schema_version = "1.0";

/// A problem found while reading a scenario document. `path` is a JSON
/// pointer; `line` is 1-based (0 when the document could not be tokenised
/// far enough to locate it).
struct located_error {
    std::string path;
    int line = 0;
    std::string message;
};

std::string to_string(located_error const& e);

struct machine_doc {
    int cores = 0;
    std::optional<double> clock_mhz;
    std::optional<double> hs06_total;
    std::optional<double> hs06_per_core;
    /// A sibling machine benchmarked at another clock; scaled by frequency.
    struct calibration {
        double hs06 = 0.0;
        double clock_mhz = 0.0;
    };
    std::optional<calibration> calibrated_from;
};

struct setup_doc {
    std::vector<detector_contribution> contributions;
    std::optional<double> peak_cap;
    std::optional<double> average_cap;
    double energy_scale_factor = 1.0;
    byte_convention convention = byte_convention::decimal;
};

struct transient_doc {
    double first_level_reduction = 1.0;
    double holding_days = 0.0;
};

struct run_doc {
    std::string setup;
    std::string machine_plan;
    double peak_rate = 0.0;
    double run_seconds = 0.0;
    std::vector<trigger_branch> branches;
    double compression_factor = 1.0;
    std::optional<double> noise_fraction;
    std::optional<double> gc_contingency;
    std::optional<double> archival_contingency;
    std::optional<transient_doc> transient;
};

struct online_compute_doc {
    std::string run;
    std::string machine;
    double l1_seconds_per_event = 0.0;
    double full_reco_factor = 1.0;
    double momentum_factor = 1.0;
};

struct offline_task_doc {
    double events = 0.0;
    double seconds_per_event = 0.0;
    std::string machine;
    double wall_days = 0.0;
    /// Budget adopted for aggregation when it differs from the derivation.
    std::optional<double> adopted_hs06;
};

struct offline_compute_doc {
    offline_task_doc simulation;
    offline_task_doc reconstruction;
    double analysis_fraction_of_simulation = 0.0;
};

struct campaign_doc {
    double events = 0.0;
    std::optional<double> seconds_per_event;
    std::vector<std::string> stages;  // names in processing_stages
    double hs06_per_core = 0.0;
    double active_days = 0.0;
    double cpu_efficiency = 1.0;
    int generations = 1;
};

struct event_stream_doc {
    double event_size = 0.0;
    prefix size_prefix = prefix::kilo;
    byte_convention convention = byte_convention::decimal;
    double event_rate = 0.0;
    double active_days = 0.0;
};

struct storage_class_doc {
    storage_class cls;               // start_year filled at resolution time
    std::optional<int> start_year;   // absolute; default = scenario start
};

struct phase_doc {
    compute_matrix compute;
    double online_days_per_year = 0.0;
    std::vector<storage_class_doc> storage;
    bandwidth_fields bandwidth;
};

struct experiment_doc {
    std::map<std::string, phase_doc> phases;
};

struct scenario_doc {
    std::string phase;
    int start_year = 0;
    std::vector<std::string> experiments;
    std::map<std::string, std::vector<day_window>> schedule;
    std::map<std::string, double> data_intensive_offline_fraction;
};

/// Declarative description of machine plans, detector setups, runs,
/// compute calibrations, campaigns and facility scenarios. Maps keep names
/// sorted so emission is deterministic.
struct scenario_document {
    std::string version{schema_version};
    std::map<std::string, machine_plan> machine_plans;
    std::map<std::string, setup_doc> setups;
    std::map<std::string, run_doc> runs;
    std::map<std::string, machine_doc> reference_machines;
    std::map<std::string, online_compute_doc> online_compute;
    std::map<std::string, offline_compute_doc> offline_compute;
    std::map<std::string, double> processing_stages;
    std::map<std::string, campaign_doc> campaigns;
    std::map<std::string, event_stream_doc> event_streams;
    std::map<std::string, experiment_doc> experiments;
    std::map<std::string, scenario_doc> scenarios;

    // Resolution into domain objects. Names must exist (the parser
    // guarantees this for parsed documents); unknown names throw
    // validation_error.
    fairplan::setup resolve_setup(std::string const& name) const;
    run_plan resolve_run(std::string const& name) const;
    reference_machine resolve_machine(std::string const& name) const;
    campaign resolve_campaign(std::string const& name) const;
    scenario resolve_scenario(std::string const& name) const;
};

struct parse_result {
    std::optional<scenario_document> document;
    std::vector<located_error> errors;

    bool ok() const noexcept { return document.has_value(); }
};

/// Total: never throws, whatever the bytes. On failure `document` is empty
/// and every problem found is listed.
parse_result parse_scenario(std::string_view text);

/// Canonical JSON (sorted keys, two-space indent, trailing newline).
std::string emit_scenario(scenario_document const& doc);

} // namespace fairplan
