#pragma once

#include "fairplan/quantities.hpp"

#include <optional>

namespace fairplan {

/// Accelerator operating assumptions for one experiment cave.
struct machine_plan {
    double machine_hours_per_year = 0.0;
    double cave_share = 1.0;       // (0, 1]
    double competing_days = 0.0;   // whole days taken by other users of the cave
    double duty_cycle = 1.0;       // (0, 1]
    double peak_to_average = 1.0;  // >= 1
    double operational_efficiency = 1.0;

    void validate() const;
};

struct rate_caps {
    std::optional<rate> average;
    std::optional<rate> peak;
};

/// Peak (10 us), in-spill average (ms) and duty-cycle sustained (10 s) rates.
struct rate_profile {
    rate peak;
    rate average;
    rate sustained;
};

duration annual_beam_seconds(machine_plan const& plan);

/// average = min(peak / p2a, avg cap); sustained = average * duty cycle.
/// The peak cap (e.g. a readout-limited detector) clamps the peak before
/// averaging.
rate_profile make_rate_profile(rate peak, machine_plan const& plan, rate_caps const& caps = {});

} // namespace fairplan
