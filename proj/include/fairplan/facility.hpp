#pragma once

#include "fairplan/ledger.hpp"
#include "fairplan/quantities.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fairplan {

/// Experiment-owned clusters (I.*) and shared offline / online resources.
enum class compute_class { Ia, Ib, Ic, Id, IIa, IIb };

inline constexpr std::array<compute_class, 6> all_compute_classes{
    compute_class::Ia, compute_class::Ib, compute_class::Ic,
    compute_class::Id, compute_class::IIa, compute_class::IIb};

std::string_view to_string(compute_class c) noexcept;
compute_class parse_compute_class(std::string_view text);

struct compute_matrix {
    std::array<compute_power, 6> values{};

    compute_power& operator[](compute_class c) noexcept { return values[static_cast<std::size_t>(c)]; }
    compute_power operator[](compute_class c) const noexcept { return values[static_cast<std::size_t>(c)]; }
};

/// Links and archive rates as declared by the experiment (bytes/s).
struct bandwidth_fields {
    std::optional<double> fibers;
    std::optional<rate> to_compute_centre;
    std::optional<rate> to_permanent_peak;
    std::optional<rate> to_permanent_average;
};

struct experiment_requirement {
    std::string name;
    compute_matrix compute;
    double online_days_per_year = 0.0;
    /// Share of II.a work that must run next to the data. Required by
    /// tier0_minimum; absence is a configuration error, not zero.
    std::optional<double> data_intensive_offline_fraction;
    std::vector<storage_class> storage;
    bandwidth_fields bandwidth;
};

/// Inclusive day-of-year window, 1..365.
struct day_window {
    int first_day = 1;
    int last_day = 1;

    int days() const noexcept { return last_day - first_day + 1; }
};

inline constexpr int days_per_year = 365;

enum class scenario_kind { fs_plus, msvc_parallel, msvc_sequential, custom };

scenario_kind classify_scenario(std::string_view name) noexcept;

struct scenario {
    std::string name;
    std::vector<experiment_requirement> experiments;
    int start_year = 0;
    /// Experiments without an entry run days 1..online_days_per_year.
    std::map<std::string, std::vector<day_window>> schedule;

    scenario_kind kind() const noexcept { return classify_scenario(name); }
    void validate() const;
    std::vector<day_window> windows_for(experiment_requirement const& e) const;
};

struct compute_aggregate {
    compute_matrix totals;
    /// experiment name -> per-class share of the class total (0 when the
    /// class total is zero).
    std::map<std::string, std::array<double, 6>> shares;

    compute_power offline_total() const { return totals[compute_class::IIa]; }
    compute_power online_total() const { return totals[compute_class::IIb]; }
};

compute_aggregate aggregate_compute(scenario const& s);

struct online_profile {
    std::array<compute_power, days_per_year> demand{};  // index 0 is day 1
    compute_power maximum;
    int peak_day = 0;

    /// Demand averaged over the full year.
    compute_power annual_mean() const;
};

online_profile build_online_profile(scenario const& s);

struct tier0_estimate {
    compute_power hs06;
    compute_power total_capacity;  // II.a total + year-averaged online demand
    double fraction_of_total = 0.0;
};

/// Peak online demand plus the data-intensive share of offline work.
tier0_estimate tier0_minimum(scenario const& s);

/// The single data-intensive fraction that, applied to every experiment,
/// makes tier0_minimum reach `target_fraction` of total capacity.
double solve_uniform_data_intensive_fraction(scenario const& s, double target_fraction);

struct storage_evolution_result {
    disk_series total;
    std::map<std::string, disk_series> per_experiment;
    std::vector<data_volume> archive;
    data_volume saturation;

    /// Mean yearly archive growth between two horizon years.
    double archive_slope_tb_per_year(int from_year, int to_year) const;
};

storage_evolution_result storage_evolution(scenario const& s, year_range horizon);

} // namespace fairplan
