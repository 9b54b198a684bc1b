#pragma once

#include "fairplan/quantities.hpp"

#include <span>
#include <string>

namespace fairplan {

/// A benchmarked node type. `hs06_per_core` and `hs06_total` are kept
/// consistent by the factory functions.
struct reference_machine {
    std::string name;
    int cores = 0;
    compute_power hs06_total;
    double clock_mhz = 0.0;
    compute_power hs06_per_core;

    static reference_machine from_total(std::string name, int cores, compute_power total, double clock_mhz = 0.0);
    static reference_machine from_per_core(std::string name, int cores, compute_power per_core, double clock_mhz = 0.0);

    /// Cores > 0 and per-core x cores within 2% of the total.
    void validate() const;
};

struct processing_stage {
    std::string name;
    double seconds_per_event = 0.0;
};

/// Sum of stage times; stages compose additively.
double chain_seconds_per_event(std::span<processing_stage const> stages);

struct campaign {
    double events = 0.0;
    double hs06_per_event = 0.0;  // HS06 x s
    double active_days = 0.0;
    double cpu_efficiency = 1.0;
    int generations = 1;

    void validate() const;
};

/// Online per-event time from a measured tracking time, a full-reconstruction
/// multiplier and a beam-momentum speed-up.
double online_reco_time(double l1_seconds, double full_reco_factor, double momentum_factor);

struct online_requirement {
    double cores = 0.0;
    double nodes = 0.0;        // fractional
    double nodes_ceiled = 0.0;
    compute_power hs06;        // from the fractional node count
};

online_requirement online_compute_requirement(rate sustained, double seconds_per_event,
                                              reference_machine const& machine);

double hs06_per_event(double seconds_per_event, double hs06_per_core);

struct campaign_requirement {
    compute_power per_generation;
    compute_power per_year;
};

campaign_requirement campaign_hs06(campaign const& c);

struct core_requirement {
    double cores = 0.0;
    compute_power hs06;
};

core_requirement simulation_compute_requirement(double events, double seconds_per_event,
                                                reference_machine const& machine, double wall_days);

/// simulation + reconstruction + analysis, with analysis sized as a fraction
/// of simulation.
compute_power offline_total(compute_power simulation, compute_power reconstruction,
                            double analysis_fraction_of_simulation);

/// Inverse of offline_total: the analysis fraction at which simulation makes
/// up `simulation_share` of the total.
double analysis_fraction_for_simulation_share(compute_power simulation, compute_power reconstruction,
                                              double simulation_share);

} // namespace fairplan
