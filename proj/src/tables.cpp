#include "fairplan/tables.hpp"

#include "fairplan/beamline.hpp"
#include "fairplan/compute.hpp"
#include "fairplan/detector.hpp"
#include "fairplan/facility.hpp"
#include "fairplan/trigger.hpp"

#include <cctype>
#include <cmath>

namespace fairplan {

namespace {

constexpr double giga = 1e9;
constexpr double peta = 1e15;

std::string unit_for(prefix p, byte_convention c) {
    static constexpr std::string_view dec[] = {"B", "kB", "MB", "GB", "TB", "PB"};
    static constexpr std::string_view bin[] = {"B", "KiB", "MiB", "GiB", "TiB", "PiB"};
    auto const i = static_cast<std::size_t>(p);
    return std::string(c == byte_convention::binary ? bin[i] : dec[i]);
}

cell text(std::string s) { return cell::str(std::move(s)); }
cell blank() { return cell::str(""); }
cell in(double v) { return cell::input(v); }
cell out(double v) { return cell::derived(v); }

std::vector<run_plan> resolve_runs(scenario_document const& doc) {
    std::vector<run_plan> runs;
    for (auto const& [name, r] : doc.runs) {
        runs.push_back(doc.resolve_run(name));
    }
    return runs;
}

std::vector<table> event_size_tables(scenario_document const& doc) {
    if (doc.setups.empty()) {
        return {};
    }
    table t{"event-sizes", "Raw event sizes", "setup / system",
            {{"messages", ""}, {"bytes per message", "B"}, {"event size", "kB"}}, {}};
    for (auto const& [name, d] : doc.setups) {
        setup const s = doc.resolve_setup(name);
        for (auto const& c : s.contributions) {
            double const bytes = c.messages_per_event * c.bytes_per_message * s.energy_scale_factor;
            t.rows.push_back({name + "/" + c.name, {in(c.messages_per_event), in(c.bytes_per_message), out(bytes / 1e3)}});
        }
        t.rows.push_back({name + "/total", {blank(), blank(), out(event_size(s).bytes() / 1e3)}});
    }
    return {t};
}

std::vector<table> data_rate_tables(scenario_document const& doc) {
    if (doc.runs.empty()) {
        return {};
    }
    table rates{"data-rates", "Raw data rates to the compute centre", "run",
                {{"setup", ""},
                 {"peak rate", "1/s"},
                 {"average rate", "1/s"},
                 {"sustained rate", "1/s"},
                 {"event size", "kB"},
                 {"data rate to compute centre", "GB/s"},
                 {"sustained data rate", "GB/s"}},
                {}};
    table links{"link-bandwidth", "Bandwidth from the experiment", "run",
                {{"base rate", "GB/s"}, {"noise fraction", ""}, {"upper limit", "GB/s"}, {"contingency", ""},
                 {"requirement", "GB/s"}},
                {}};
    table archive{"archival-bandwidth", "Bandwidth to permanent storage", "run",
                  {{"contingency", ""}, {"average", "GB/s"}, {"peak", "GB/s"}}, {}};
    for (auto const& [name, r] : doc.runs) {
        run_plan const run = doc.resolve_run(name);
        rate const inspill = inspill_data_rate(run.setup, run.profile);
        rates.rows.push_back({name,
                              {text(r.setup), out(run.profile.peak.value()), out(run.profile.average.value()),
                               out(run.profile.sustained.value()), out(event_size(run.setup).bytes() / 1e3),
                               out(inspill.value() / giga), out(sustained_data_rate(run).value() / giga)}});
        if (r.noise_fraction || r.gc_contingency) {
            double const noise = r.noise_fraction.value_or(0.0);
            double const contingency = r.gc_contingency.value_or(1.0);
            link_bandwidth const bw = gc_bandwidth_requirement(inspill, noise, contingency);
            links.rows.push_back({name,
                                  {out(inspill.value() / giga), in(noise), out(bw.upper_limit.value() / giga),
                                   in(contingency), out(bw.requirement.value() / giga)}});
        }
        if (r.archival_contingency) {
            archival_rates const a = archival_bandwidth(run, *r.archival_contingency);
            archive.rows.push_back(
                {name, {in(*r.archival_contingency), out(a.average.value() / giga), out(a.peak.value() / giga)}});
        }
    }
    std::vector<table> out_tables{rates};
    if (!links.rows.empty()) out_tables.push_back(links);
    if (!archive.rows.empty()) out_tables.push_back(archive);
    return out_tables;
}

std::vector<table> storage_plan_tables(scenario_document const& doc) {
    if (doc.runs.empty()) {
        return {};
    }
    storage_plan const plan = annual_storage_plan(resolve_runs(doc));
    table t{"storage-plan", "Annual raw data storage volume", "run / trigger",
            {{"setup", ""},
             {"run time", "s"},
             {"sustained data rate", "GB/s"},
             {"trigger", ""},
             {"selectivity", ""},
             {"rand. red.", ""},
             {"storage", "PB"},
             {"stored events", ""},
             {"equiv. events", ""}},
            {}};
    for (auto const& row : plan.rows) {
        t.rows.push_back({row.run + "/" + row.branch.name,
                          {text(row.setup), in(row.run_seconds.seconds()), out(row.sustained.value() / giga),
                           text(row.branch.name), in(row.branch.selectivity), in(row.branch.random_reduction),
                           out(row.volume.bytes() / peta), out(row.stored_events),
                           row.branch.equivalent_events ? in(*row.branch.equivalent_events) : blank()}});
    }
    t.rows.push_back({"sum",
                      {blank(), out(plan.total_run_seconds.seconds()), blank(), blank(), blank(), blank(),
                       out(plan.total.bytes() / peta), blank(), blank()}});

    table transient{"transient-storage", "Transient storage for delayed filtering", "run",
                    {{"first-level reduction", ""},
                     {"holding time", "d"},
                     {"volume", "PB"},
                     {"write bandwidth", "GB/s"},
                     {"read bandwidth", "GB/s"}},
                    {}};
    for (auto const& [name, r] : doc.runs) {
        if (!r.transient) continue;
        transient_requirements const req =
            transient_filter_requirements(doc.resolve_run(name), r.transient->first_level_reduction,
                                          r.transient->holding_days);
        transient.rows.push_back({name,
                                  {in(r.transient->first_level_reduction), in(r.transient->holding_days),
                                   out(req.volume.bytes() / peta), out(req.write_bandwidth.value() / giga),
                                   out(req.read_bandwidth.value() / giga)}});
    }
    std::vector<table> tables{t};
    if (!transient.rows.empty()) tables.push_back(transient);
    return tables;
}

std::vector<table> compute_tables(scenario_document const& doc) {
    std::vector<table> tables;
    if (!doc.reference_machines.empty()) {
        table m{"reference-machines", "Reference machines", "machine",
                {{"cores", ""}, {"clock", "MHz"}, {"HS06 total", "HS06"}, {"HS06 per core", "HS06"}}, {}};
        for (auto const& [name, d] : doc.reference_machines) {
            reference_machine const r = doc.resolve_machine(name);
            m.rows.push_back({name,
                              {in(r.cores), d.clock_mhz ? in(*d.clock_mhz) : blank(), out(r.hs06_total.value()),
                               out(r.hs06_per_core.value())}});
        }
        tables.push_back(std::move(m));
    }
    if (!doc.online_compute.empty()) {
        table t{"online-compute", "Online compute requirement", "entry",
                {{"run", ""},
                 {"time per event", "ms"},
                 {"sustained rate", "1/s"},
                 {"cores", ""},
                 {"nodes", ""},
                 {"nodes (ceiled)", ""},
                 {"HS06", "HS06"}},
                {}};
        for (auto const& [name, o] : doc.online_compute) {
            run_plan const run = doc.resolve_run(o.run);
            double const t_event = online_reco_time(o.l1_seconds_per_event, o.full_reco_factor, o.momentum_factor);
            online_requirement const req =
                online_compute_requirement(run.profile.sustained, t_event, doc.resolve_machine(o.machine));
            t.rows.push_back({name,
                              {text(o.run), out(t_event * 1e3), out(run.profile.sustained.value()), out(req.cores),
                               out(req.nodes), out(req.nodes_ceiled), out(req.hs06.value())}});
        }
        tables.push_back(std::move(t));
    }
    if (!doc.offline_compute.empty()) {
        table t{"offline-compute", "Offline compute requirement", "entry / task",
                {{"events", ""},
                 {"time per event", "s"},
                 {"wall time", "d"},
                 {"cores", ""},
                 {"derived", "HS06"},
                 {"adopted", "HS06"}},
                {}};
        for (auto const& [name, o] : doc.offline_compute) {
            auto task_row = [&](std::string const& label, offline_task_doc const& task) {
                core_requirement const req = simulation_compute_requirement(
                    task.events, task.seconds_per_event, doc.resolve_machine(task.machine), task.wall_days);
                double const adopted = task.adopted_hs06.value_or(req.hs06.value());
                t.rows.push_back({name + "/" + label,
                                  {in(task.events), in(task.seconds_per_event), in(task.wall_days), out(req.cores),
                                   out(req.hs06.value()), task.adopted_hs06 ? in(adopted) : out(adopted)}});
                return compute_power::hs06(adopted);
            };
            compute_power const sim = task_row("simulation", o.simulation);
            compute_power const reco = task_row("reconstruction", o.reconstruction);
            compute_power const analysis = sim * o.analysis_fraction_of_simulation;
            t.rows.push_back({name + "/analysis",
                              {blank(), blank(), blank(), blank(), blank(), out(analysis.value())}});
            t.rows.push_back({name + "/total",
                              {blank(), blank(), blank(), blank(), blank(),
                               out(offline_total(sim, reco, o.analysis_fraction_of_simulation).value())}});
        }
        tables.push_back(std::move(t));
    }
    return tables;
}

std::vector<table> campaign_tables(scenario_document const& doc) {
    if (doc.campaigns.empty()) {
        return {};
    }
    table t{"campaign-hs06", "Compute requirement per campaign", "campaign",
            {{"events", ""},
             {"time per event", "s"},
             {"HS06 per event", "HS06 s"},
             {"active days", "d"},
             {"CPU efficiency", ""},
             {"generations", ""},
             {"per generation", "HS06"},
             {"per year", "HS06"}},
            {}};
    for (auto const& [name, d] : doc.campaigns) {
        campaign const c = doc.resolve_campaign(name);
        campaign_requirement const req = campaign_hs06(c);
        double const seconds = c.hs06_per_event / d.hs06_per_core;
        t.rows.push_back({name,
                          {in(c.events), d.seconds_per_event ? in(seconds) : out(seconds), out(c.hs06_per_event),
                           in(c.active_days), in(c.cpu_efficiency), in(c.generations),
                           out(req.per_generation.value()), out(req.per_year.value())}});
    }
    return {t};
}

std::vector<table> file_size_tables(scenario_document const& doc) {
    if (doc.event_streams.empty()) {
        return {};
    }
    table t{"file-sizes", "Data volume per event, second and year", "stream",
            {{"per event", ""}, {"per event unit", ""}, {"per second", ""}, {"per second unit", ""},
             {"per year", ""}, {"per year unit", ""}},
            {}};
    for (auto const& [name, s] : doc.event_streams) {
        data_volume const per_event = convert_volume(s.event_size, s.size_prefix, s.convention);
        double const per_second = per_event.bytes() * s.event_rate;
        double const per_year = per_second * s.active_days * 86400.0;
        auto scaled = [&](double bytes, prefix p) { return bytes / prefix_factor(p, s.convention); };
        t.rows.push_back({name,
                          {in(s.event_size), text(unit_for(s.size_prefix, s.convention)),
                           out(scaled(per_second, prefix::mega)), text(unit_for(prefix::mega, s.convention) + "/s"),
                           out(scaled(per_year, prefix::tera)), text(unit_for(prefix::tera, s.convention))}});
    }
    return {t};
}

std::string slug(std::string const& s) {
    std::string out;
    for (char c : s) {
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-') ? c : (c == '+' ? 'p' : '-');
    }
    return out;
}

} // namespace

table_kind parse_table_kind(std::string_view text) {
    for (auto k : all_table_kinds) {
        if (to_string(k) == text) {
            return k;
        }
    }
    throw validation_error("unknown table '" + std::string(text) + "'");
}

std::string_view to_string(table_kind k) noexcept {
    switch (k) {
    case table_kind::event_sizes: return "event-sizes";
    case table_kind::data_rates: return "data-rates";
    case table_kind::storage_plan: return "storage-plan";
    case table_kind::compute: return "compute";
    case table_kind::panda_hs06: return "panda-hs06";
    case table_kind::file_sizes: return "file-sizes";
    }
    return "event-sizes";
}

std::vector<table> build_tables(scenario_document const& doc, table_kind kind) {
    switch (kind) {
    case table_kind::event_sizes: return event_size_tables(doc);
    case table_kind::data_rates: return data_rate_tables(doc);
    case table_kind::storage_plan: return storage_plan_tables(doc);
    case table_kind::compute: return compute_tables(doc);
    case table_kind::panda_hs06: return campaign_tables(doc);
    case table_kind::file_sizes: return file_size_tables(doc);
    }
    return {};
}

std::vector<table> aggregate_tables(scenario_document const& doc, std::string const& scenario_name) {
    scenario const s = doc.resolve_scenario(scenario_name);
    compute_aggregate const agg = aggregate_compute(s);
    std::string const id = slug(scenario_name);

    std::vector<column> class_columns;
    for (auto c : all_compute_classes) {
        class_columns.push_back({std::string(to_string(c)), "HS06"});
    }
    table matrix{"compute-matrix-" + id, "Compute classes (" + scenario_name + ")", "experiment", class_columns, {}};
    std::vector<column> share_columns;
    for (auto c : all_compute_classes) {
        share_columns.push_back({std::string(to_string(c)), ""});
    }
    table shares{"compute-shares-" + id, "Share of class totals (" + scenario_name + ")", "experiment",
                 share_columns, {}};
    for (auto const& e : s.experiments) {
        table_row row{e.name, {}};
        table_row share{e.name, {}};
        for (auto c : all_compute_classes) {
            row.cells.push_back(in(e.compute[c].value()));
            share.cells.push_back(out(agg.shares.at(e.name)[static_cast<std::size_t>(c)]));
        }
        matrix.rows.push_back(std::move(row));
        shares.rows.push_back(std::move(share));
    }
    table_row total{"total", {}};
    for (auto c : all_compute_classes) {
        total.cells.push_back(out(agg.totals[c].value()));
    }
    matrix.rows.push_back(std::move(total));

    online_profile const profile = build_online_profile(s);
    tier0_estimate const t0 = tier0_minimum(s);
    table tier0{"tier0-" + id, "Tier0 minimum (" + scenario_name + ")", "scenario",
                {{"peak online demand", "HS06"},
                 {"peak day", ""},
                 {"online annual mean", "HS06"},
                 {"II.a total", "HS06"},
                 {"II.b total", "HS06"},
                 {"Tier0 minimum", "HS06"},
                 {"total capacity", "HS06"},
                 {"Tier0 fraction", "%"}},
                {}};
    tier0.rows.push_back({scenario_name,
                          {out(profile.maximum.value()), out(profile.peak_day), out(profile.annual_mean().value()),
                           out(agg.offline_total().value()), out(agg.online_total().value()), out(t0.hs06.value()),
                           out(t0.total_capacity.value()), out(t0.fraction_of_total * 100.0)}});
    return {matrix, shares, tier0};
}

std::vector<series_block> timeline_series(scenario_document const& doc, std::string const& scenario_name,
                                          year_range horizon, bool archive) {
    if (horizon.size() <= 0) {
        throw validation_error("timeline needs from <= to");
    }
    scenario const s = doc.resolve_scenario(scenario_name);
    storage_evolution_result const evo = storage_evolution(s, horizon);
    std::string const id = slug(scenario_name);
    std::vector<int> years;
    for (int y = horizon.from; y <= horizon.to; ++y) {
        years.push_back(y);
    }
    auto to_pb = [](std::vector<data_volume> const& v) {
        std::vector<double> out_values;
        for (auto const& x : v) {
            out_values.push_back(to_tb(x) / 1e3);
        }
        return out_values;
    };
    series_block disk{"disk-" + id, "Disk storage by experiment (" + scenario_name + ")", "PB", years, {}};
    for (auto const& e : s.experiments) {
        disk.series.emplace_back(e.name, to_pb(evo.per_experiment.at(e.name).stacked));
    }
    disk.series.emplace_back("total", to_pb(evo.total.stacked));
    std::vector<series_block> blocks{disk};
    if (archive) {
        series_block a{"archive-" + id, "Cumulative archive (" + scenario_name + ")", "PB", years, {}};
        a.series.emplace_back("archive", to_pb(evo.archive));
        blocks.push_back(std::move(a));
    }
    return blocks;
}

report full_report(scenario_document const& doc, year_range horizon) {
    report r;
    r.title = "Scenario report";
    for (auto k : all_table_kinds) {
        for (auto& t : build_tables(doc, k)) {
            r.tables.push_back(std::move(t));
        }
    }
    if (!doc.scenarios.empty()) {
        table summary{"storage-summary", "Storage evolution summary", "scenario",
                      {{"start year", ""}, {"saturation", "PB"}, {"archive at end", "PB"}, {"archive growth", "PB/yr"}},
                      {}};
        for (auto const& [name, sd] : doc.scenarios) {
            for (auto& t : aggregate_tables(doc, name)) {
                r.tables.push_back(std::move(t));
            }
            storage_evolution_result const evo = storage_evolution(doc.resolve_scenario(name), horizon);
            double const end_archive = evo.archive.empty() ? 0.0 : to_tb(evo.archive.back()) / 1e3;
            double const growth = horizon.to > horizon.from
                                      ? evo.archive_slope_tb_per_year(horizon.from, horizon.to) / 1e3
                                      : 0.0;
            summary.rows.push_back(
                {name, {in(sd.start_year), out(to_tb(evo.saturation) / 1e3), out(end_archive), out(growth)}});
            for (auto& b : timeline_series(doc, name, horizon, true)) {
                r.series.push_back(std::move(b));
            }
        }
        r.tables.push_back(std::move(summary));
    }
    return r;
}

} // namespace fairplan
