#include "fairplan/detector.hpp"

#include <cmath>

namespace fairplan {

void setup::validate() const {
    if (name.empty()) {
        throw validation_error("setup name must not be empty");
    }
    require_fraction(energy_scale_factor, "energy_scale_factor");
    for (auto const& c : contributions) {
        require_non_negative(c.messages_per_event, "messages_per_event of " + c.name);
        if (c.bytes_per_message <= 0) {
            throw validation_error("bytes_per_message of " + c.name + " must be positive");
        }
    }
}

data_volume event_size(setup const& s) {
    s.validate();
    double bytes = 0.0;
    for (auto const& c : s.contributions) {
        bytes += c.messages_per_event * c.bytes_per_message;
    }
    return data_volume::bytes(bytes * s.energy_scale_factor, s.convention);
}

rate inspill_data_rate(setup const& s, rate_profile const& profile) {
    return data_rate(profile.average, event_size(s));
}

link_bandwidth gc_bandwidth_requirement(rate base, double noise_fraction, double contingency) {
    if (base.dimension() != rate_dimension::bytes_per_second) {
        throw validation_error("link bandwidth needs a data rate");
    }
    require_non_negative(noise_fraction, "noise_fraction");
    if (!std::isfinite(contingency) || contingency < 1.0) {
        throw validation_error("contingency must be >= 1");
    }
    rate const upper = base * (1.0 + noise_fraction);
    return link_bandwidth{upper, upper * contingency};
}

} // namespace fairplan
