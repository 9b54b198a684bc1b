#include "fairplan/scenario_doc.hpp"

#include "json_locate.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <set>

namespace fairplan {

using nlohmann::json;
using detail::pointer_join;

std::string to_string(located_error const& e) {
    std::string out = e.path.empty() ? std::string("/") : e.path;
    if (e.line > 0) {
        out += " (line " + std::to_string(e.line) + ")";
    }
    return out + ": " + e.message;
}

namespace {

constexpr int min_year = 1900;
constexpr int max_year = 2300;

class issue_sink {
public:
    explicit issue_sink(std::map<std::string, int> const& lines) : lines_(lines) {}

    void add(std::string const& path, std::string message) {
        errors_.push_back(located_error{path, line_of(path), std::move(message)});
    }

    int line_of(std::string path) const {
        while (true) {
            if (auto it = lines_.find(path); it != lines_.end()) {
                return it->second;
            }
            if (path.empty()) {
                return 0;
            }
            path.erase(path.rfind('/'));
        }
    }

    bool empty() const noexcept { return errors_.empty(); }
    std::vector<located_error>& errors() noexcept { return errors_; }

private:
    std::map<std::string, int> const& lines_;
    std::vector<located_error> errors_;
};

/// Reads fields from one JSON object, remembering which keys it consumed so
/// unknown keys can be reported.
class object_reader {
public:
    object_reader(json const& node, std::string path, issue_sink& sink)
        : node_(node), path_(std::move(path)), sink_(sink) {
        if (!node_.is_object()) {
            sink_.add(path_, "expected an object");
            valid_ = false;
        }
    }

    bool valid() const noexcept { return valid_; }
    std::string const& path() const noexcept { return path_; }
    std::string at(std::string_view key) const { return pointer_join(path_, key); }

    json const* find(std::string const& key, bool required) {
        if (!valid_) {
            return nullptr;
        }
        seen_.insert(key);
        auto it = node_.find(key);
        if (it == node_.end()) {
            if (required) {
                sink_.add(path_, "missing " + key);
            }
            return nullptr;
        }
        return &*it;
    }

    std::optional<double> number(std::string const& key, bool required) {
        json const* v = find(key, required);
        if (v == nullptr) {
            return std::nullopt;
        }
        if (!v->is_number()) {
            sink_.add(at(key), "expected a number");
            return std::nullopt;
        }
        double const d = v->get<double>();
        if (!std::isfinite(d)) {
            sink_.add(at(key), "expected a finite number");
            return std::nullopt;
        }
        return d;
    }

    double number_or(std::string const& key, double fallback) { return number(key, false).value_or(fallback); }

    double required_number(std::string const& key) { return number(key, true).value_or(0.0); }

    std::optional<int> integer(std::string const& key, bool required, int lo, int hi) {
        json const* v = find(key, required);
        if (v == nullptr) {
            return std::nullopt;
        }
        if (!v->is_number_integer()) {
            sink_.add(at(key), "expected an integer");
            return std::nullopt;
        }
        auto const i = v->get<std::int64_t>();
        if (i < lo || i > hi) {
            sink_.add(at(key), "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
            return std::nullopt;
        }
        return static_cast<int>(i);
    }

    std::optional<std::string> string(std::string const& key, bool required) {
        json const* v = find(key, required);
        if (v == nullptr) {
            return std::nullopt;
        }
        if (!v->is_string()) {
            sink_.add(at(key), "expected a string");
            return std::nullopt;
        }
        return v->get<std::string>();
    }

    std::optional<bool> boolean(std::string const& key) {
        json const* v = find(key, false);
        if (v == nullptr) {
            return std::nullopt;
        }
        if (!v->is_boolean()) {
            sink_.add(at(key), "expected true or false");
            return std::nullopt;
        }
        return v->get<bool>();
    }

    json const* array(std::string const& key, bool required) {
        json const* v = find(key, required);
        if (v != nullptr && !v->is_array()) {
            sink_.add(at(key), "expected an array");
            return nullptr;
        }
        return v;
    }

    json const* object(std::string const& key, bool required) {
        json const* v = find(key, required);
        if (v != nullptr && !v->is_object()) {
            sink_.add(at(key), "expected an object");
            return nullptr;
        }
        return v;
    }

    /// Reports every key not consumed by one of the accessors above.
    void finish() {
        if (!valid_) {
            return;
        }
        for (auto it = node_.begin(); it != node_.end(); ++it) {
            if (!seen_.contains(it.key())) {
                sink_.add(at(it.key()), "unknown key '" + it.key() + "'");
            }
        }
    }

    issue_sink& sink() noexcept { return sink_; }

private:
    json const& node_;
    std::string path_;
    issue_sink& sink_;
    std::set<std::string> seen_;
    bool valid_ = true;
};

template <typename T, typename F>
void read_named_section(object_reader& top, std::string const& key, std::map<std::string, T>& out, F read_one) {
    json const* section = top.object(key, false);
    if (section == nullptr) {
        return;
    }
    std::string const base = top.at(key);
    for (auto it = section->begin(); it != section->end(); ++it) {
        if (it.key().empty()) {
            top.sink().add(base, "names must not be empty");
            continue;
        }
        out[it.key()] = read_one(*it, pointer_join(base, it.key()), top.sink());
    }
}

std::optional<byte_convention> read_convention(object_reader& r, std::string const& key) {
    auto s = r.string(key, false);
    if (!s) {
        return std::nullopt;
    }
    try {
        return parse_byte_convention(*s);
    } catch (validation_error const& e) {
        r.sink().add(r.at(key), e.what());
        return std::nullopt;
    }
}

machine_plan read_machine_plan(json const& node, std::string const& path, issue_sink& sink) {
    object_reader r(node, path, sink);
    machine_plan p;
    p.machine_hours_per_year = r.required_number("machine_hours_per_year");
    p.cave_share = r.number_or("cave_share", 1.0);
    p.competing_days = r.number_or("competing_days", 0.0);
    p.duty_cycle = r.number_or("duty_cycle", 1.0);
    p.peak_to_average = r.number_or("peak_to_average", 1.0);
    p.operational_efficiency = r.number_or("operational_efficiency", 1.0);
    r.finish();
    if (r.valid()) {
        try {
            p.validate();
        } catch (validation_error const& e) {
            sink.add(path, e.what());
        }
    }
    return p;
}

setup_doc read_setup(json const& node, std::string const& path, issue_sink& sink) {
    object_reader r(node, path, sink);
    setup_doc s;
    if (json const* list = r.array("contributions", true)) {
        std::size_t i = 0;
        for (auto const& item : *list) {
            object_reader c(item, pointer_join(r.at("contributions"), std::to_string(i++)), sink);
            detector_contribution d;
            d.name = c.string("name", true).value_or("");
            d.messages_per_event = c.required_number("messages_per_event");
            d.bytes_per_message = c.integer("bytes_per_message", true, 1, 1 << 20).value_or(1);
            if (d.messages_per_event < 0.0) {
                sink.add(c.at("messages_per_event"), "must be >= 0");
            }
            c.finish();
            s.contributions.push_back(std::move(d));
        }
    }
    if (json const* caps = r.object("rate_caps", false)) {
        object_reader c(*caps, r.at("rate_caps"), sink);
        s.peak_cap = c.number("peak", false);
        s.average_cap = c.number("average", false);
        c.finish();
    }
    s.energy_scale_factor = r.number_or("energy_scale_factor", 1.0);
    s.convention = read_convention(r, "byte_convention").value_or(byte_convention::decimal);
    r.finish();
    return s;
}

run_doc read_run(json const& node, std::string const& path, issue_sink& sink) {
    object_reader r(node, path, sink);
    run_doc run;
    run.setup = r.string("setup", true).value_or("");
    run.machine_plan = r.string("machine_plan", true).value_or("");
    run.peak_rate = r.required_number("peak_rate");
    run.run_seconds = r.required_number("run_seconds");
    if (json const* list = r.array("branches", true)) {
        std::size_t i = 0;
        for (auto const& item : *list) {
            object_reader b(item, pointer_join(r.at("branches"), std::to_string(i++)), sink);
            trigger_branch br;
            br.name = b.string("name", true).value_or("");
            br.selectivity = b.number_or("selectivity", 1.0);
            br.random_reduction = b.number_or("random_reduction", 1.0);
            br.equivalent_events = b.number("equivalent_events", false);
            b.finish();
            run.branches.push_back(std::move(br));
        }
    }
    run.compression_factor = r.number_or("compression_factor", 1.0);
    run.noise_fraction = r.number("noise_fraction", false);
    run.gc_contingency = r.number("gc_contingency", false);
    run.archival_contingency = r.number("archival_contingency", false);
    if (json const* t = r.object("transient_filter", false)) {
        object_reader tr(*t, r.at("transient_filter"), sink);
        transient_doc td;
        td.first_level_reduction = tr.required_number("first_level_reduction");
        td.holding_days = tr.required_number("holding_days");
        tr.finish();
        run.transient = td;
    }
    r.finish();
    return run;
}

machine_doc read_machine(json const& node, std::string const& path, issue_sink& sink) {
    object_reader r(node, path, sink);
    machine_doc m;
    m.cores = r.integer("cores", true, 1, 1 << 24).value_or(1);
    m.clock_mhz = r.number("clock_mhz", false);
    m.hs06_total = r.number("hs06_total", false);
    m.hs06_per_core = r.number("hs06_per_core", false);
    if (json const* cal = r.object("calibrated_from", false)) {
        object_reader c(*cal, r.at("calibrated_from"), sink);
        machine_doc::calibration k;
        k.hs06 = c.required_number("hs06");
        k.clock_mhz = c.required_number("clock_mhz");
        c.finish();
        m.calibrated_from = k;
    }
    r.finish();
    if (r.valid() && !m.hs06_total && !m.hs06_per_core && !m.calibrated_from) {
        sink.add(path, "needs one of hs06_total, hs06_per_core or calibrated_from");
    }
    if (m.calibrated_from && !m.clock_mhz) {
        sink.add(path, "calibrated_from needs clock_mhz");
    }
    return m;
}

online_compute_doc read_online(json const& node, std::string const& path, issue_sink& sink) {
    object_reader r(node, path, sink);
    online_compute_doc o;
    o.run = r.string("run", true).value_or("");
    o.machine = r.string("machine", true).value_or("");
    o.l1_seconds_per_event = r.required_number("l1_seconds_per_event");
    o.full_reco_factor = r.number_or("full_reco_factor", 1.0);
    o.momentum_factor = r.number_or("momentum_factor", 1.0);
    r.finish();
    return o;
}

offline_task_doc read_offline_task(json const& node, std::string const& path, issue_sink& sink) {
    object_reader r(node, path, sink);
    offline_task_doc t;
    t.events = r.required_number("events");
    t.seconds_per_event = r.required_number("seconds_per_event");
    t.machine = r.string("machine", true).value_or("");
    t.wall_days = r.required_number("wall_days");
    t.adopted_hs06 = r.number("adopted_hs06", false);
    r.finish();
    return t;
}

offline_compute_doc read_offline(json const& node, std::string const& path, issue_sink& sink) {
    object_reader r(node, path, sink);
    offline_compute_doc o;
    if (json const* s = r.object("simulation", true)) {
        o.simulation = read_offline_task(*s, r.at("simulation"), sink);
    }
    if (json const* s = r.object("reconstruction", true)) {
        o.reconstruction = read_offline_task(*s, r.at("reconstruction"), sink);
    }
    o.analysis_fraction_of_simulation = r.number_or("analysis_fraction_of_simulation", 0.0);
    r.finish();
    return o;
}

std::vector<std::string> read_string_list(object_reader& r, std::string const& key, bool required) {
    std::vector<std::string> out;
    json const* list = r.array(key, required);
    if (list == nullptr) {
        return out;
    }
    std::size_t i = 0;
    for (auto const& item : *list) {
        if (!item.is_string()) {
            r.sink().add(pointer_join(r.at(key), std::to_string(i)), "expected a string");
        } else {
            out.push_back(item.get<std::string>());
        }
        ++i;
    }
    return out;
}

campaign_doc read_campaign(json const& node, std::string const& path, issue_sink& sink) {
    object_reader r(node, path, sink);
    campaign_doc c;
    c.events = r.required_number("events");
    c.seconds_per_event = r.number("seconds_per_event", false);
    c.stages = read_string_list(r, "stages", false);
    c.hs06_per_core = r.required_number("hs06_per_core");
    c.active_days = r.required_number("active_days");
    c.cpu_efficiency = r.number_or("cpu_efficiency", 1.0);
    c.generations = r.integer("generations", false, 1, 1000).value_or(1);
    r.finish();
    if (r.valid() && !c.seconds_per_event && c.stages.empty()) {
        sink.add(path, "needs seconds_per_event or stages");
    }
    return c;
}

event_stream_doc read_stream(json const& node, std::string const& path, issue_sink& sink) {
    object_reader r(node, path, sink);
    event_stream_doc s;
    s.event_size = r.required_number("event_size");
    if (auto p = r.string("prefix", false)) {
        try {
            s.size_prefix = parse_prefix(*p);
        } catch (validation_error const& e) {
            sink.add(r.at("prefix"), e.what());
        }
    }
    s.convention = read_convention(r, "byte_convention").value_or(byte_convention::decimal);
    s.event_rate = r.required_number("event_rate");
    s.active_days = r.required_number("active_days");
    r.finish();
    return s;
}

storage_class_doc read_storage_class(json const& node, std::string const& path, issue_sink& sink) {
    object_reader r(node, path, sink);
    storage_class_doc d;
    storage_class& c = d.cls;
    c.name = r.string("name", true).value_or("");
    if (auto k = r.string("kind", true)) {
        try {
            c.kind = parse_storage_kind(*k);
        } catch (validation_error const& e) {
            sink.add(r.at("kind"), e.what());
        }
    }
    bool const plateau = c.kind == storage_kind::transient || c.kind == storage_kind::volatile_scratch;
    std::string const amount_key = plateau ? "capacity_tb" : "inflow_tb_per_year";
    if (json const* by_year = r.array("inflow_tb_by_year", false)) {
        std::size_t i = 0;
        for (auto const& v : *by_year) {
            if (!v.is_number()) {
                sink.add(pointer_join(r.at("inflow_tb_by_year"), std::to_string(i)), "expected a number");
            } else {
                c.inflow_tb_by_year.push_back(v.get<double>());
            }
            ++i;
        }
        r.find(amount_key, false) != nullptr ? sink.add(r.at(amount_key), "conflicts with inflow_tb_by_year")
                                             : void();
    } else {
        c.inflow_tb_per_year = r.required_number(amount_key);
    }
    if (json const* ret = r.find("retention_years", false)) {
        if (ret->is_string() && ret->get<std::string>() == "permanent") {
            c.retention_years.reset();
        } else if (ret->is_number_integer() && ret->get<std::int64_t>() >= 1 && ret->get<std::int64_t>() <= 1000) {
            c.retention_years = static_cast<int>(ret->get<std::int64_t>());
        } else {
            sink.add(r.at("retention_years"), "expected a positive integer or \"permanent\"");
        }
    }
    d.start_year = r.integer("start_year", false, min_year, max_year);
    c.end_year = r.integer("end_year", false, min_year, max_year);
    c.convention = read_convention(r, "byte_convention").value_or(byte_convention::decimal);
    c.archived = r.boolean("archived").value_or(false);
    c.copies = r.integer("copies", false, 1, 100).value_or(1);
    if (json const* rep = r.object("reprocessing", false)) {
        object_reader rr(*rep, r.at("reprocessing"), sink);
        reprocessing p;
        p.generations = rr.integer("generations", true, 1, 100).value_or(1);
        p.data_taking_years = rr.integer("data_taking_years", true, 1, 1000).value_or(1);
        rr.finish();
        c.reprocessed = p;
    }
    r.finish();
    if (d.start_year && c.end_year && *c.end_year < *d.start_year) {
        sink.add(r.at("end_year"), "must not precede start_year");
    }
    for (double v : c.inflow_tb_by_year) {
        if (v < 0.0) {
            sink.add(r.at("inflow_tb_by_year"), "inflows must be >= 0");
            break;
        }
    }
    if (c.inflow_tb_per_year < 0.0) {
        sink.add(r.at(amount_key), "must be >= 0");
    }
    return d;
}

phase_doc read_phase(json const& node, std::string const& path, issue_sink& sink) {
    object_reader r(node, path, sink);
    phase_doc p;
    if (json const* comp = r.object("compute", true)) {
        object_reader cr(*comp, r.at("compute"), sink);
        for (auto c : all_compute_classes) {
            std::string const key(to_string(c));
            double const v = cr.number_or(key, 0.0);
            if (v < 0.0) {
                sink.add(cr.at(key), "must be >= 0");
            } else {
                p.compute[c] = compute_power::hs06(v);
            }
        }
        cr.finish();
    }
    p.online_days_per_year = r.number_or("online_days_per_year", 0.0);
    if (p.online_days_per_year < 0.0 || p.online_days_per_year > days_per_year) {
        sink.add(r.at("online_days_per_year"), "must lie in [0, 365]");
    }
    if (json const* list = r.array("storage", false)) {
        std::size_t i = 0;
        std::set<std::string> names;
        for (auto const& item : *list) {
            std::string const item_path = pointer_join(r.at("storage"), std::to_string(i++));
            storage_class_doc d = read_storage_class(item, item_path, sink);
            if (!d.cls.name.empty() && !names.insert(d.cls.name).second) {
                sink.add(item_path, "duplicate storage class '" + d.cls.name + "'");
            }
            p.storage.push_back(std::move(d));
        }
    }
    if (json const* bw = r.object("bandwidth", false)) {
        object_reader br(*bw, r.at("bandwidth"), sink);
        auto mb = [&](std::string const& key) -> std::optional<rate> {
            auto v = br.number(key, false);
            if (!v) {
                return std::nullopt;
            }
            if (*v < 0.0) {
                sink.add(br.at(key), "must be >= 0");
                return std::nullopt;
            }
            return rate::bytes_per_second(*v * 1e6);
        };
        p.bandwidth.fibers = br.number("fibers", false);
        p.bandwidth.to_compute_centre = mb("to_compute_centre_mb_s");
        p.bandwidth.to_permanent_peak = mb("to_permanent_peak_mb_s");
        p.bandwidth.to_permanent_average = mb("to_permanent_average_mb_s");
        br.finish();
    }
    r.finish();
    return p;
}

experiment_doc read_experiment(json const& node, std::string const& path, issue_sink& sink) {
    object_reader r(node, path, sink);
    experiment_doc e;
    if (json const* phases = r.object("phases", true)) {
        for (auto it = phases->begin(); it != phases->end(); ++it) {
            e.phases[it.key()] = read_phase(*it, pointer_join(r.at("phases"), it.key()), sink);
        }
    }
    r.finish();
    return e;
}

scenario_doc read_scenario(json const& node, std::string const& path, issue_sink& sink) {
    object_reader r(node, path, sink);
    scenario_doc s;
    s.phase = r.string("phase", true).value_or("");
    s.start_year = r.integer("start_year", true, min_year, max_year).value_or(min_year);
    s.experiments = read_string_list(r, "experiments", true);
    if (json const* sched = r.object("schedule", false)) {
        for (auto it = sched->begin(); it != sched->end(); ++it) {
            std::string const p = pointer_join(r.at("schedule"), it.key());
            if (!it->is_array()) {
                sink.add(p, "expected an array of [first_day, last_day] windows");
                continue;
            }
            std::vector<day_window> windows;
            std::size_t i = 0;
            for (auto const& w : *it) {
                std::string const wp = pointer_join(p, std::to_string(i++));
                if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() || !w[1].is_number_integer()) {
                    sink.add(wp, "expected [first_day, last_day]");
                    continue;
                }
                auto const a = w[0].get<std::int64_t>();
                auto const b = w[1].get<std::int64_t>();
                if (a < 1 || b > days_per_year || a > b) {
                    sink.add(wp, "window must lie within days 1..365 and be ordered");
                    continue;
                }
                windows.push_back(day_window{static_cast<int>(a), static_cast<int>(b)});
            }
            s.schedule[it.key()] = std::move(windows);
        }
    }
    if (json const* fr = r.object("data_intensive_offline_fraction", false)) {
        for (auto it = fr->begin(); it != fr->end(); ++it) {
            std::string const p = pointer_join(r.at("data_intensive_offline_fraction"), it.key());
            if (!it->is_number() || it->get<double>() < 0.0 || it->get<double>() > 1.0) {
                sink.add(p, "expected a fraction in [0, 1]");
                continue;
            }
            s.data_intensive_offline_fraction[it.key()] = it->get<double>();
        }
    }
    r.finish();
    return s;
}

void check_reference(issue_sink& sink, std::string const& path, std::string const& name,
                     std::string_view what, bool exists) {
    if (!name.empty() && !exists) {
        sink.add(path, "unresolved reference: no " + std::string(what) + " named '" + name + "'");
    }
}

void cross_check(scenario_document const& doc, issue_sink& sink) {
    for (auto const& [name, run] : doc.runs) {
        std::string const p = "/runs/" + name;
        check_reference(sink, p + "/setup", run.setup, "setup", doc.setups.contains(run.setup));
        check_reference(sink, p + "/machine_plan", run.machine_plan, "machine plan",
                        doc.machine_plans.contains(run.machine_plan));
    }
    for (auto const& [name, o] : doc.online_compute) {
        std::string const p = "/online_compute/" + name;
        check_reference(sink, p + "/run", o.run, "run", doc.runs.contains(o.run));
        check_reference(sink, p + "/machine", o.machine, "reference machine", doc.reference_machines.contains(o.machine));
    }
    for (auto const& [name, o] : doc.offline_compute) {
        std::string const p = "/offline_compute/" + name;
        check_reference(sink, p + "/simulation/machine", o.simulation.machine, "reference machine",
                        doc.reference_machines.contains(o.simulation.machine));
        check_reference(sink, p + "/reconstruction/machine", o.reconstruction.machine, "reference machine",
                        doc.reference_machines.contains(o.reconstruction.machine));
    }
    for (auto const& [name, c] : doc.campaigns) {
        for (std::size_t i = 0; i < c.stages.size(); ++i) {
            check_reference(sink, "/campaigns/" + name + "/stages/" + std::to_string(i), c.stages[i],
                            "processing stage", doc.processing_stages.contains(c.stages[i]));
        }
    }
    for (auto const& [name, s] : doc.scenarios) {
        std::string const p = "/scenarios/" + name;
        std::set<std::string> members;
        for (std::size_t i = 0; i < s.experiments.size(); ++i) {
            std::string const& e = s.experiments[i];
            std::string const ep = p + "/experiments/" + std::to_string(i);
            if (!members.insert(e).second) {
                sink.add(ep, "experiment '" + e + "' listed twice");
            }
            auto it = doc.experiments.find(e);
            check_reference(sink, ep, e, "experiment", it != doc.experiments.end());
            if (it != doc.experiments.end() && !it->second.phases.contains(s.phase)) {
                sink.add(ep, "experiment '" + e + "' has no phase '" + s.phase + "'");
            }
        }
        for (auto const& [e, w] : s.schedule) {
            check_reference(sink, pointer_join(p + "/schedule", e), e, "scenario experiment", members.contains(e));
        }
        for (auto const& [e, f] : s.data_intensive_offline_fraction) {
            check_reference(sink, pointer_join(p + "/data_intensive_offline_fraction", e), e, "scenario experiment",
                            members.contains(e));
        }
    }
}

/// Domain-level invariants, checked by resolving every named object.
void domain_check(scenario_document const& doc, issue_sink& sink) {
    auto guard = [&](std::string const& path, auto&& fn) {
        try {
            fn();
        } catch (std::exception const& e) {
            sink.add(path, e.what());
        }
    };
    for (auto const& [name, s] : doc.setups) {
        guard("/setups/" + name, [&] { (void)doc.resolve_setup(name); });
    }
    for (auto const& [name, m] : doc.reference_machines) {
        guard("/reference_machines/" + name, [&] { (void)doc.resolve_machine(name); });
    }
    for (auto const& [name, r] : doc.runs) {
        guard("/runs/" + name, [&] {
            run_plan const run = doc.resolve_run(name);
            if (r.transient) {
                (void)transient_filter_requirements(run, r.transient->first_level_reduction, r.transient->holding_days);
            }
            (void)gc_bandwidth_requirement(rate::bytes_per_second(0.0), r.noise_fraction.value_or(0.0),
                                           r.gc_contingency.value_or(1.0));
            (void)archival_bandwidth(run, r.archival_contingency.value_or(1.0));
        });
    }
    for (auto const& [name, o] : doc.online_compute) {
        guard("/online_compute/" + name,
              [&] { (void)online_reco_time(o.l1_seconds_per_event, o.full_reco_factor, o.momentum_factor); });
    }
    for (auto const& [name, o] : doc.offline_compute) {
        guard("/offline_compute/" + name, [&] {
            for (auto const* t : {&o.simulation, &o.reconstruction}) {
                require_non_negative(t->events, "events");
                require_non_negative(t->seconds_per_event, "seconds_per_event");
                require_positive(t->wall_days, "wall_days");
                if (t->adopted_hs06) {
                    require_non_negative(*t->adopted_hs06, "adopted_hs06");
                }
            }
            require_non_negative(o.analysis_fraction_of_simulation, "analysis_fraction_of_simulation");
        });
    }
    for (auto const& [name, secs] : doc.processing_stages) {
        guard("/processing_stages/" + name, [&] { require_positive(secs, "stage time"); });
    }
    for (auto const& [name, c] : doc.campaigns) {
        guard("/campaigns/" + name, [&] { (void)doc.resolve_campaign(name); });
    }
    for (auto const& [name, s] : doc.event_streams) {
        guard("/event_streams/" + name, [&] {
            require_non_negative(s.event_size, "event_size");
            require_non_negative(s.event_rate, "event_rate");
            require_non_negative(s.active_days, "active_days");
        });
    }
    for (auto const& [name, s] : doc.scenarios) {
        guard("/scenarios/" + name, [&] { doc.resolve_scenario(name).validate(); });
    }
}

// --- emission -------------------------------------------------------------

json to_json(machine_plan const& p) {
    return json{{"machine_hours_per_year", p.machine_hours_per_year},
                {"cave_share", p.cave_share},
                {"competing_days", p.competing_days},
                {"duty_cycle", p.duty_cycle},
                {"peak_to_average", p.peak_to_average},
                {"operational_efficiency", p.operational_efficiency}};
}

json to_json(setup_doc const& s) {
    json j;
    json list = json::array();
    for (auto const& c : s.contributions) {
        list.push_back(json{{"name", c.name}, {"messages_per_event", c.messages_per_event},
                            {"bytes_per_message", c.bytes_per_message}});
    }
    j["contributions"] = std::move(list);
    if (s.peak_cap || s.average_cap) {
        json caps = json::object();
        if (s.peak_cap) caps["peak"] = *s.peak_cap;
        if (s.average_cap) caps["average"] = *s.average_cap;
        j["rate_caps"] = std::move(caps);
    }
    j["energy_scale_factor"] = s.energy_scale_factor;
    j["byte_convention"] = std::string(to_string(s.convention));
    return j;
}

json to_json(run_doc const& r) {
    json j{{"setup", r.setup},
           {"machine_plan", r.machine_plan},
           {"peak_rate", r.peak_rate},
           {"run_seconds", r.run_seconds},
           {"compression_factor", r.compression_factor}};
    json list = json::array();
    for (auto const& b : r.branches) {
        json bj{{"name", b.name}, {"selectivity", b.selectivity}, {"random_reduction", b.random_reduction}};
        if (b.equivalent_events) bj["equivalent_events"] = *b.equivalent_events;
        list.push_back(std::move(bj));
    }
    j["branches"] = std::move(list);
    if (r.noise_fraction) j["noise_fraction"] = *r.noise_fraction;
    if (r.gc_contingency) j["gc_contingency"] = *r.gc_contingency;
    if (r.archival_contingency) j["archival_contingency"] = *r.archival_contingency;
    if (r.transient) {
        j["transient_filter"] = json{{"first_level_reduction", r.transient->first_level_reduction},
                                     {"holding_days", r.transient->holding_days}};
    }
    return j;
}

json to_json(machine_doc const& m) {
    json j{{"cores", m.cores}};
    if (m.clock_mhz) j["clock_mhz"] = *m.clock_mhz;
    if (m.hs06_total) j["hs06_total"] = *m.hs06_total;
    if (m.hs06_per_core) j["hs06_per_core"] = *m.hs06_per_core;
    if (m.calibrated_from) {
        j["calibrated_from"] = json{{"hs06", m.calibrated_from->hs06}, {"clock_mhz", m.calibrated_from->clock_mhz}};
    }
    return j;
}

json to_json(offline_task_doc const& t) {
    json j{{"events", t.events}, {"seconds_per_event", t.seconds_per_event}, {"machine", t.machine},
           {"wall_days", t.wall_days}};
    if (t.adopted_hs06) j["adopted_hs06"] = *t.adopted_hs06;
    return j;
}

json to_json(campaign_doc const& c) {
    json j{{"events", c.events}, {"hs06_per_core", c.hs06_per_core}, {"active_days", c.active_days},
           {"cpu_efficiency", c.cpu_efficiency}, {"generations", c.generations}};
    if (c.seconds_per_event) j["seconds_per_event"] = *c.seconds_per_event;
    if (!c.stages.empty()) j["stages"] = c.stages;
    return j;
}

json to_json(storage_class_doc const& d) {
    storage_class const& c = d.cls;
    bool const plateau = c.kind == storage_kind::transient || c.kind == storage_kind::volatile_scratch;
    json j{{"name", c.name}, {"kind", std::string(to_string(c.kind))},
           {"byte_convention", std::string(to_string(c.convention))}};
    if (!c.inflow_tb_by_year.empty()) {
        j["inflow_tb_by_year"] = c.inflow_tb_by_year;
    } else {
        j[plateau ? "capacity_tb" : "inflow_tb_per_year"] = c.inflow_tb_per_year;
    }
    if (c.retention_years) {
        j["retention_years"] = *c.retention_years;
    } else {
        j["retention_years"] = "permanent";
    }
    if (d.start_year) j["start_year"] = *d.start_year;
    if (c.end_year) j["end_year"] = *c.end_year;
    if (c.archived) j["archived"] = true;
    if (c.copies != 1) j["copies"] = c.copies;
    if (c.reprocessed) {
        j["reprocessing"] = json{{"generations", c.reprocessed->generations},
                                 {"data_taking_years", c.reprocessed->data_taking_years}};
    }
    return j;
}

json to_json(phase_doc const& p) {
    json compute = json::object();
    for (auto c : all_compute_classes) {
        compute[std::string(to_string(c))] = p.compute[c].value();
    }
    json storage = json::array();
    for (auto const& s : p.storage) {
        storage.push_back(to_json(s));
    }
    json j{{"compute", std::move(compute)}, {"online_days_per_year", p.online_days_per_year},
           {"storage", std::move(storage)}};
    json bw = json::object();
    if (p.bandwidth.fibers) bw["fibers"] = *p.bandwidth.fibers;
    auto mb = [](std::optional<rate> const& r) { return r->value() / 1e6; };
    if (p.bandwidth.to_compute_centre) bw["to_compute_centre_mb_s"] = mb(p.bandwidth.to_compute_centre);
    if (p.bandwidth.to_permanent_peak) bw["to_permanent_peak_mb_s"] = mb(p.bandwidth.to_permanent_peak);
    if (p.bandwidth.to_permanent_average) bw["to_permanent_average_mb_s"] = mb(p.bandwidth.to_permanent_average);
    if (!bw.empty()) j["bandwidth"] = std::move(bw);
    return j;
}

json to_json(scenario_doc const& s) {
    json j{{"phase", s.phase}, {"start_year", s.start_year}, {"experiments", s.experiments}};
    if (!s.schedule.empty()) {
        json sched = json::object();
        for (auto const& [e, windows] : s.schedule) {
            json list = json::array();
            for (auto const& w : windows) {
                list.push_back(json::array({w.first_day, w.last_day}));
            }
            sched[e] = std::move(list);
        }
        j["schedule"] = std::move(sched);
    }
    if (!s.data_intensive_offline_fraction.empty()) {
        j["data_intensive_offline_fraction"] = s.data_intensive_offline_fraction;
    }
    return j;
}

template <typename T, typename F>
json section(std::map<std::string, T> const& items, F convert) {
    json j = json::object();
    for (auto const& [name, item] : items) {
        j[name] = convert(item);
    }
    return j;
}

} // namespace

parse_result parse_scenario(std::string_view text) {
    parse_result result;
    detail::located_json parsed;
    try {
        parsed = detail::parse_located(text);
    } catch (std::exception const& e) {
        result.errors.push_back(located_error{"", 0, std::string("syntax error: ") + e.what()});
        return result;
    }
    if (!parsed.ok) {
        result.errors.push_back(located_error{"", parsed.error_line, "syntax error: " + parsed.error});
        return result;
    }
    issue_sink sink(parsed.lines);
    for (auto const& [path, key] : parsed.duplicate_keys) {
        sink.add(path, "duplicate key '" + key + "'");
    }

    scenario_document doc;
    try {
        object_reader top(parsed.root, "", sink);
        if (top.valid()) {
            if (auto v = top.string("schema_version", false)) {
                if (*v != schema_version) {
                    sink.add("/schema_version", "unsupported schema_version '" + *v + "' (expected " +
                                                    std::string(schema_version) + ")");
                }
                doc.version = *v;
            } else if (parsed.root.contains("schema_version")) {
                // type error already reported
            } else {
                sink.add("", "missing schema_version");
            }
            read_named_section(top, "machine_plans", doc.machine_plans, read_machine_plan);
            read_named_section(top, "setups", doc.setups, read_setup);
            read_named_section(top, "runs", doc.runs, read_run);
            read_named_section(top, "reference_machines", doc.reference_machines, read_machine);
            read_named_section(top, "online_compute", doc.online_compute, read_online);
            read_named_section(top, "offline_compute", doc.offline_compute, read_offline);
            read_named_section(top, "processing_stages", doc.processing_stages,
                               [](json const& node, std::string const& path, issue_sink& s) {
                                   if (!node.is_number()) {
                                       s.add(path, "expected seconds per event");
                                       return 0.0;
                                   }
                                   return node.get<double>();
                               });
            read_named_section(top, "campaigns", doc.campaigns, read_campaign);
            read_named_section(top, "event_streams", doc.event_streams, read_stream);
            read_named_section(top, "experiments", doc.experiments, read_experiment);
            read_named_section(top, "scenarios", doc.scenarios, read_scenario);
            top.finish();
        }
        if (sink.empty()) {
            cross_check(doc, sink);
        }
        if (sink.empty()) {
            domain_check(doc, sink);
        }
    } catch (std::exception const& e) {
        sink.add("", std::string("internal error while reading document: ") + e.what());
    }

    if (sink.empty()) {
        result.document = std::move(doc);
    } else {
        result.errors = std::move(sink.errors());
    }
    return result;
}

std::string emit_scenario(scenario_document const& doc) {
    json j = json::object();
    j["schema_version"] = doc.version;
    j["machine_plans"] = section(doc.machine_plans, [](auto const& v) { return to_json(v); });
    j["setups"] = section(doc.setups, [](auto const& v) { return to_json(v); });
    j["runs"] = section(doc.runs, [](auto const& v) { return to_json(v); });
    j["reference_machines"] = section(doc.reference_machines, [](auto const& v) { return to_json(v); });
    j["online_compute"] = section(doc.online_compute, [](online_compute_doc const& o) {
        return json{{"run", o.run}, {"machine", o.machine}, {"l1_seconds_per_event", o.l1_seconds_per_event},
                    {"full_reco_factor", o.full_reco_factor}, {"momentum_factor", o.momentum_factor}};
    });
    j["offline_compute"] = section(doc.offline_compute, [](offline_compute_doc const& o) {
        return json{{"simulation", to_json(o.simulation)}, {"reconstruction", to_json(o.reconstruction)},
                    {"analysis_fraction_of_simulation", o.analysis_fraction_of_simulation}};
    });
    j["processing_stages"] = section(doc.processing_stages, [](double v) { return json(v); });
    j["campaigns"] = section(doc.campaigns, [](auto const& v) { return to_json(v); });
    j["event_streams"] = section(doc.event_streams, [](event_stream_doc const& s) {
        return json{{"event_size", s.event_size}, {"prefix", std::string(to_string(s.size_prefix))},
                    {"byte_convention", std::string(to_string(s.convention))}, {"event_rate", s.event_rate},
                    {"active_days", s.active_days}};
    });
    j["experiments"] = section(doc.experiments, [](experiment_doc const& e) {
        return json{{"phases", section(e.phases, [](auto const& p) { return to_json(p); })}};
    });
    j["scenarios"] = section(doc.scenarios, [](auto const& v) { return to_json(v); });
    return j.dump(2) + "\n";
}

// --- resolution -----------------------------------------------------------

namespace {

template <typename Map>
auto const& lookup(Map const& m, std::string const& name, std::string_view what) {
    auto it = m.find(name);
    if (it == m.end()) {
        throw validation_error("unknown " + std::string(what) + " '" + name + "'");
    }
    return it->second;
}

} // namespace

setup scenario_document::resolve_setup(std::string const& name) const {
    setup_doc const& d = lookup(setups, name, "setup");
    setup s;
    s.name = name;
    s.contributions = d.contributions;
    if (d.peak_cap) s.caps.peak = rate::events_per_second(*d.peak_cap);
    if (d.average_cap) s.caps.average = rate::events_per_second(*d.average_cap);
    s.energy_scale_factor = d.energy_scale_factor;
    s.convention = d.convention;
    s.validate();
    return s;
}

run_plan scenario_document::resolve_run(std::string const& name) const {
    run_doc const& d = lookup(runs, name, "run");
    machine_plan const& plan = lookup(machine_plans, d.machine_plan, "machine plan");
    run_plan run;
    run.name = name;
    run.setup = resolve_setup(d.setup);
    run.run_seconds = duration::seconds(d.run_seconds);
    run.profile = make_rate_profile(rate::events_per_second(d.peak_rate), plan, run.setup.caps);
    run.branches = d.branches;
    run.compression_factor = d.compression_factor;
    run.validate();
    return run;
}

reference_machine scenario_document::resolve_machine(std::string const& name) const {
    machine_doc const& d = lookup(reference_machines, name, "reference machine");
    double const clock = d.clock_mhz.value_or(0.0);
    if (d.calibrated_from) {
        compute_power const ref = compute_power::hs06(d.calibrated_from->hs06);
        compute_power const total = hs06_scale_by_clock(ref, d.calibrated_from->clock_mhz, clock);
        return reference_machine::from_total(name, d.cores, total, clock);
    }
    if (d.hs06_total && d.hs06_per_core) {
        reference_machine m{name, d.cores, compute_power::hs06(*d.hs06_total), clock,
                            compute_power::hs06(*d.hs06_per_core)};
        m.validate();
        return m;
    }
    if (d.hs06_total) {
        return reference_machine::from_total(name, d.cores, compute_power::hs06(*d.hs06_total), clock);
    }
    return reference_machine::from_per_core(name, d.cores, compute_power::hs06(d.hs06_per_core.value_or(0.0)), clock);
}

campaign scenario_document::resolve_campaign(std::string const& name) const {
    campaign_doc const& d = lookup(campaigns, name, "campaign");
    double seconds = 0.0;
    if (d.seconds_per_event) {
        seconds = require_non_negative(*d.seconds_per_event, "seconds_per_event");
    } else {
        std::vector<processing_stage> stages;
        for (auto const& s : d.stages) {
            stages.push_back(processing_stage{s, lookup(processing_stages, s, "processing stage")});
        }
        seconds = chain_seconds_per_event(stages);
    }
    campaign c;
    c.events = d.events;
    c.hs06_per_event = hs06_per_event(seconds, d.hs06_per_core);
    c.active_days = d.active_days;
    c.cpu_efficiency = d.cpu_efficiency;
    c.generations = d.generations;
    c.validate();
    return c;
}

scenario scenario_document::resolve_scenario(std::string const& name) const {
    scenario_doc const& d = lookup(scenarios, name, "scenario");
    scenario s;
    s.name = name;
    s.start_year = d.start_year;
    s.schedule = d.schedule;
    for (auto const& e : d.experiments) {
        experiment_doc const& ed = lookup(experiments, e, "experiment");
        phase_doc const& p = lookup(ed.phases, d.phase, "phase of " + e);
        experiment_requirement req;
        req.name = e;
        req.compute = p.compute;
        req.online_days_per_year = p.online_days_per_year;
        if (auto it = d.data_intensive_offline_fraction.find(e); it != d.data_intensive_offline_fraction.end()) {
            req.data_intensive_offline_fraction = it->second;
        }
        for (auto const& sd : p.storage) {
            storage_class c = sd.cls;
            c.start_year = sd.start_year.value_or(d.start_year);
            c.validate();
            req.storage.push_back(std::move(c));
        }
        req.bandwidth = p.bandwidth;
        s.experiments.push_back(std::move(req));
    }
    return s;
}

} // namespace fairplan
