#include "fairplan/beamline.hpp"

#include <algorithm>
#include <cmath>

namespace fairplan {

void machine_plan::validate() const {
    require_non_negative(machine_hours_per_year, "machine_hours_per_year");
    require_fraction(cave_share, "cave_share");
    require_non_negative(competing_days, "competing_days");
    require_fraction(duty_cycle, "duty_cycle");
    require_fraction(operational_efficiency, "operational_efficiency");
    if (!std::isfinite(peak_to_average) || peak_to_average < 1.0) {
        throw validation_error("peak_to_average must be >= 1");
    }
    if (competing_days * 24.0 > machine_hours_per_year * cave_share) {
        throw validation_error("competing experiments use more than the cave's beam time");
    }
}

duration annual_beam_seconds(machine_plan const& plan) {
    plan.validate();
    double const hours = plan.machine_hours_per_year * plan.cave_share - plan.competing_days * 24.0;
    return duration::hours(hours * plan.operational_efficiency);
}

rate_profile make_rate_profile(rate peak, machine_plan const& plan, rate_caps const& caps) {
    plan.validate();
    if (peak.dimension() != rate_dimension::events_per_second || peak.value() <= 0.0) {
        throw validation_error("peak interaction rate must be a positive event rate");
    }
    double peak_value = peak.value();
    if (caps.peak) {
        peak_value = std::min(peak_value, caps.peak->value());
    }
    double average = peak_value / plan.peak_to_average;
    if (caps.average) {
        average = std::min(average, caps.average->value());
    }
    return rate_profile{
        rate::events_per_second(peak_value),
        rate::events_per_second(average),
        rate::events_per_second(average * plan.duty_cycle),
    };
}

} // namespace fairplan
