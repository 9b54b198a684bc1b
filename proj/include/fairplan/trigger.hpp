#pragma once

#include "fairplan/beamline.hpp"
#include "fairplan/detector.hpp"
#include "fairplan/quantities.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fairplan {

/// One software-trigger branch running in parallel with the others on the
/// same sustained stream.
struct trigger_branch {
    std::string name;
    double selectivity = 1.0;       // physics data reduction, >= 1
    double random_reduction = 1.0;  // unbiased suppression, >= 1
    /// Pass-through annotation; not derived by the engine.
    std::optional<double> equivalent_events;

    double total_reduction() const noexcept { return selectivity * random_reduction; }
};

struct run_plan {
    std::string name;
    fairplan::setup setup;
    duration run_seconds;
    rate_profile profile;
    std::vector<trigger_branch> branches;
    /// Global compression gain applied to stored volume; 1 means none.
    double compression_factor = 1.0;

    void validate() const;
};

rate sustained_data_rate(run_plan const& run);

struct branch_output {
    data_volume volume;
    double stored_events = 0.0;
};

branch_output branch_storage(run_plan const& run, trigger_branch const& branch);

struct storage_row {
    std::string run;
    std::string setup;
    duration run_seconds;
    rate sustained;
    trigger_branch branch;
    data_volume volume;
    double stored_events = 0.0;
};

struct storage_plan {
    std::vector<storage_row> rows;
    data_volume total;
    duration total_run_seconds;
};

storage_plan annual_storage_plan(std::vector<run_plan> const& runs);

struct archival_rates {
    rate average;
    rate peak;
};

archival_rates archival_bandwidth(run_plan const& run, double contingency);

struct transient_requirements {
    data_volume volume;
    rate write_bandwidth;
    rate read_bandwidth;
};

/// Delayed-filtering buffer. The held volume is sized from the in-spill
/// rate, the write/read bandwidth from the sustained rate.
transient_requirements transient_filter_requirements(run_plan const& run,
                                                     double first_level_reduction,
                                                     double holding_days);

} // namespace fairplan
