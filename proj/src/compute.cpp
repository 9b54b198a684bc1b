#include "fairplan/compute.hpp"

#include <cmath>
#include <numeric>

namespace fairplan {

namespace {
constexpr double seconds_per_day = 86400.0;
}

reference_machine reference_machine::from_total(std::string name, int cores, compute_power total,
                                                double clock_mhz) {
    if (cores <= 0) {
        throw validation_error("reference machine needs a positive core count");
    }
    reference_machine m{std::move(name), cores, total, clock_mhz, total / cores};
    m.validate();
    return m;
}

reference_machine reference_machine::from_per_core(std::string name, int cores, compute_power per_core,
                                                   double clock_mhz) {
    if (cores <= 0) {
        throw validation_error("reference machine needs a positive core count");
    }
    reference_machine m{std::move(name), cores, per_core * cores, clock_mhz, per_core};
    m.validate();
    return m;
}

void reference_machine::validate() const {
    if (cores <= 0) {
        throw validation_error("reference machine '" + name + "' needs a positive core count");
    }
    require_non_negative(clock_mhz, "clock_mhz");
    double const implied = hs06_per_core.value() * cores;
    double const total = hs06_total.value();
    if (total > 0.0 && std::abs(implied - total) > 0.02 * total) {
        throw validation_error("reference machine '" + name + "': hs06_per_core x cores disagrees with hs06_total");
    }
}

double chain_seconds_per_event(std::span<processing_stage const> stages) {
    return std::accumulate(stages.begin(), stages.end(), 0.0, [](double acc, processing_stage const& s) {
        return acc + require_positive(s.seconds_per_event, "stage time of " + s.name);
    });
}

void campaign::validate() const {
    require_non_negative(events, "campaign events");
    require_non_negative(hs06_per_event, "hs06_per_event");
    require_positive(active_days, "active_days");
    require_fraction(cpu_efficiency, "cpu_efficiency");
    if (generations < 1) {
        throw validation_error("generations must be >= 1");
    }
}

double online_reco_time(double l1_seconds, double full_reco_factor, double momentum_factor) {
    require_positive(l1_seconds, "l1 time");
    require_positive(full_reco_factor, "full reconstruction factor");
    require_positive(momentum_factor, "momentum factor");
    return l1_seconds * full_reco_factor / momentum_factor;
}

online_requirement online_compute_requirement(rate sustained, double seconds_per_event,
                                              reference_machine const& machine) {
    if (sustained.dimension() != rate_dimension::events_per_second) {
        throw validation_error("online requirement needs an event rate");
    }
    require_positive(seconds_per_event, "time per event");
    machine.validate();
    online_requirement r;
    r.cores = sustained.value() * seconds_per_event;
    r.nodes = r.cores / machine.cores;
    r.nodes_ceiled = std::ceil(r.nodes);
    r.hs06 = machine.hs06_total * r.nodes;
    return r;
}

double hs06_per_event(double seconds_per_event, double hs06_per_core) {
    return require_non_negative(seconds_per_event, "time per event") *
           require_non_negative(hs06_per_core, "hs06_per_core");
}

campaign_requirement campaign_hs06(campaign const& c) {
    c.validate();
    double const wall = c.active_days * seconds_per_day * c.cpu_efficiency;
    compute_power const per_gen = compute_power::hs06(c.events * c.hs06_per_event / wall);
    return campaign_requirement{per_gen, per_gen * c.generations};
}

core_requirement simulation_compute_requirement(double events, double seconds_per_event,
                                                reference_machine const& machine, double wall_days) {
    require_non_negative(events, "events");
    require_non_negative(seconds_per_event, "time per event");
    require_positive(wall_days, "wall_days");
    machine.validate();
    double const cores = events * seconds_per_event / (wall_days * seconds_per_day);
    return core_requirement{cores, machine.hs06_per_core * cores};
}

compute_power offline_total(compute_power simulation, compute_power reconstruction,
                            double analysis_fraction_of_simulation) {
    require_non_negative(analysis_fraction_of_simulation, "analysis fraction");
    return simulation + reconstruction + simulation * analysis_fraction_of_simulation;
}

double analysis_fraction_for_simulation_share(compute_power simulation, compute_power reconstruction,
                                              double simulation_share) {
    require_fraction(simulation_share, "simulation share");
    require_positive(simulation.value(), "simulation compute");
    double const fraction = (1.0 - simulation_share) / simulation_share - reconstruction.value() / simulation.value();
    if (fraction < 0.0) {
        throw computation_error("reconstruction alone exceeds the non-simulation share");
    }
    return fraction;
}

} // namespace fairplan
