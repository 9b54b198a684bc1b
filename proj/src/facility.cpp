#include "fairplan/facility.hpp"

#include <set>

namespace fairplan {

std::string_view to_string(compute_class c) noexcept {
    switch (c) {
    case compute_class::Ia: return "I.a";
    case compute_class::Ib: return "I.b";
    case compute_class::Ic: return "I.c";
    case compute_class::Id: return "I.d";
    case compute_class::IIa: return "II.a";
    case compute_class::IIb: return "II.b";
    }
    return "I.a";
}

compute_class parse_compute_class(std::string_view text) {
    for (auto c : all_compute_classes) {
        if (to_string(c) == text) {
            return c;
        }
    }
    throw validation_error("unknown compute class '" + std::string(text) + "'");
}

scenario_kind classify_scenario(std::string_view name) noexcept {
    if (name == "FS+") return scenario_kind::fs_plus;
    if (name == "MSVc-parallel") return scenario_kind::msvc_parallel;
    if (name == "MSVc-sequential") return scenario_kind::msvc_sequential;
    return scenario_kind::custom;
}

void scenario::validate() const {
    std::set<std::string> names;
    for (auto const& e : experiments) {
        if (!names.insert(e.name).second) {
            throw validation_error("scenario '" + name + "' lists experiment '" + e.name + "' twice");
        }
        if (e.online_days_per_year < 0.0 || e.online_days_per_year > days_per_year) {
            throw validation_error("online_days_per_year of '" + e.name + "' must lie in [0, 365]");
        }
        if (e.data_intensive_offline_fraction) {
            double const f = *e.data_intensive_offline_fraction;
            if (!(f >= 0.0 && f <= 1.0)) {
                throw validation_error("data_intensive_offline_fraction of '" + e.name + "' must lie in [0, 1]");
            }
        }
    }
    for (auto const& [exp, windows] : schedule) {
        if (!names.contains(exp)) {
            throw validation_error("schedule of scenario '" + name + "' names unknown experiment '" + exp + "'");
        }
        for (auto const& w : windows) {
            if (w.first_day < 1 || w.last_day > days_per_year || w.first_day > w.last_day) {
                throw validation_error("schedule window of '" + exp + "' must lie within days 1..365");
            }
        }
    }
}

std::vector<day_window> scenario::windows_for(experiment_requirement const& e) const {
    if (auto it = schedule.find(e.name); it != schedule.end()) {
        return it->second;
    }
    int const days = static_cast<int>(e.online_days_per_year);
    if (days <= 0) {
        return {};
    }
    return {day_window{1, days}};
}

compute_aggregate aggregate_compute(scenario const& s) {
    s.validate();
    compute_aggregate agg;
    for (auto const& e : s.experiments) {
        for (auto c : all_compute_classes) {
            agg.totals[c] += e.compute[c];
        }
    }
    for (auto const& e : s.experiments) {
        std::array<double, 6> share{};
        for (auto c : all_compute_classes) {
            double const total = agg.totals[c].value();
            share[static_cast<std::size_t>(c)] = total > 0.0 ? e.compute[c].value() / total : 0.0;
        }
        agg.shares[e.name] = share;
    }
    return agg;
}

compute_power online_profile::annual_mean() const {
    double sum = 0.0;
    for (auto const& d : demand) {
        sum += d.value();
    }
    return compute_power::hs06(sum / days_per_year);
}

online_profile build_online_profile(scenario const& s) {
    s.validate();
    online_profile p;
    for (auto const& e : s.experiments) {
        compute_power const online = e.compute[compute_class::IIb];
        std::array<bool, days_per_year> active{};
        for (auto const& w : s.windows_for(e)) {
            for (int d = w.first_day; d <= w.last_day; ++d) {
                active[static_cast<std::size_t>(d - 1)] = true;
            }
        }
        for (std::size_t d = 0; d < active.size(); ++d) {
            if (active[d]) {
                p.demand[d] += online;
            }
        }
    }
    for (std::size_t d = 0; d < p.demand.size(); ++d) {
        if (p.demand[d].value() > p.maximum.value()) {
            p.maximum = p.demand[d];
            p.peak_day = static_cast<int>(d) + 1;
        }
    }
    return p;
}

namespace {

struct tier0_parts {
    compute_power peak_online;
    compute_power online_mean;
    compute_power offline_total;
};

tier0_parts tier0_inputs(scenario const& s) {
    online_profile const p = build_online_profile(s);
    compute_aggregate const agg = aggregate_compute(s);
    return tier0_parts{p.maximum, p.annual_mean(), agg.offline_total()};
}

} // namespace

tier0_estimate tier0_minimum(scenario const& s) {
    tier0_parts const parts = tier0_inputs(s);
    compute_power data_intensive;
    for (auto const& e : s.experiments) {
        if (!e.data_intensive_offline_fraction) {
            throw computation_error("experiment '" + e.name + "' in scenario '" + s.name +
                                    "' has no data_intensive_offline_fraction");
        }
        data_intensive += e.compute[compute_class::IIa] * *e.data_intensive_offline_fraction;
    }
    tier0_estimate t;
    t.hs06 = parts.peak_online + data_intensive;
    t.total_capacity = parts.offline_total + parts.online_mean;
    t.fraction_of_total = t.total_capacity.value() > 0.0 ? t.hs06.value() / t.total_capacity.value() : 0.0;
    return t;
}

double solve_uniform_data_intensive_fraction(scenario const& s, double target_fraction) {
    require_fraction(target_fraction, "target Tier0 fraction");
    tier0_parts const parts = tier0_inputs(s);
    double const total = parts.offline_total.value() + parts.online_mean.value();
    if (parts.offline_total.value() <= 0.0) {
        throw computation_error("scenario '" + s.name + "' has no offline capacity to apportion");
    }
    double const f = (target_fraction * total - parts.peak_online.value()) / parts.offline_total.value();
    if (f < 0.0 || f > 1.0) {
        throw computation_error("target Tier0 fraction is unreachable with a uniform data-intensive share");
    }
    return f;
}

double storage_evolution_result::archive_slope_tb_per_year(int from_year, int to_year) const {
    year_range const years = total.years;
    if (from_year >= to_year || from_year < years.from || to_year > years.to) {
        throw validation_error("archive slope years must be ordered and inside the horizon");
    }
    double const a = to_tb(archive[static_cast<std::size_t>(from_year - years.from)]);
    double const b = to_tb(archive[static_cast<std::size_t>(to_year - years.from)]);
    return (b - a) / (to_year - from_year);
}

storage_evolution_result storage_evolution(scenario const& s, year_range horizon) {
    s.validate();
    storage_evolution_result r;
    std::vector<storage_class> all;
    for (auto const& e : s.experiments) {
        r.per_experiment.emplace(e.name, ledger_series(e.storage, horizon));
        all.insert(all.end(), e.storage.begin(), e.storage.end());
    }
    r.total = ledger_series(all, horizon);
    r.archive = archive_series(all, horizon);
    r.saturation = r.total.peak();
    return r;
}

} // namespace fairplan
