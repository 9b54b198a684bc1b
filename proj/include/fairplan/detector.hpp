#pragma once

#include "fairplan/beamline.hpp"
#include "fairplan/quantities.hpp"

#include <string>
#include <vector>

namespace fairplan {

struct detector_contribution {
    std::string name;
    double messages_per_event = 0.0;
    int bytes_per_message = 0;
};

/// A named combination of detector systems read out together.
struct setup {
    std::string name;
    std::vector<detector_contribution> contributions;
    rate_caps caps;
    double energy_scale_factor = 1.0;
    byte_convention convention = byte_convention::decimal;

    void validate() const;
};

/// Raw event size: sum of messages x bytes, scaled by the energy factor.
/// Micro-slice / time-slice container overhead is not included.
data_volume event_size(setup const& s);

/// Average in-spill event rate x event size. No duty-cycle averaging happens
/// upstream of the compute centre, so this is what the links must carry.
rate inspill_data_rate(setup const& s, rate_profile const& profile);

struct link_bandwidth {
    rate upper_limit;  // base x (1 + noise)
    rate requirement;  // upper_limit x contingency
};

link_bandwidth gc_bandwidth_requirement(rate base, double noise_fraction, double contingency);

} // namespace fairplan
