#include "fairplan/trigger.hpp"

#include <cmath>

namespace fairplan {

namespace {

void validate_branch(trigger_branch const& b) {
    if (!std::isfinite(b.selectivity) || b.selectivity < 1.0) {
        throw validation_error("selectivity of branch '" + b.name + "' must be >= 1");
    }
    if (!std::isfinite(b.random_reduction) || b.random_reduction < 1.0) {
        throw validation_error("random_reduction of branch '" + b.name + "' must be >= 1");
    }
}

} // namespace

void run_plan::validate() const {
    setup.validate();
    if (run_seconds.seconds() <= 0.0) {
        throw validation_error("run '" + name + "' needs a positive run time");
    }
    if (branches.empty()) {
        throw validation_error("run '" + name + "' needs at least one trigger branch");
    }
    for (auto const& b : branches) {
        validate_branch(b);
    }
    if (!std::isfinite(compression_factor) || compression_factor < 1.0) {
        throw validation_error("compression_factor must be >= 1");
    }
}

rate sustained_data_rate(run_plan const& run) {
    return data_rate(run.profile.sustained, event_size(run.setup));
}

branch_output branch_storage(run_plan const& run, trigger_branch const& branch) {
    run.validate();
    validate_branch(branch);
    data_volume const size = event_size(run.setup);
    data_volume const raw = volume_over(sustained_data_rate(run), run.run_seconds, run.setup.convention);
    data_volume const stored = raw / (branch.total_reduction() * run.compression_factor);
    double const events = size.bytes() > 0.0 ? stored.bytes() / size.bytes() : 0.0;
    return branch_output{stored, events};
}

storage_plan annual_storage_plan(std::vector<run_plan> const& runs) {
    if (runs.empty()) {
        throw validation_error("storage plan needs at least one run");
    }
    storage_plan plan;
    plan.total = data_volume::bytes(0.0, runs.front().setup.convention);
    for (auto const& run : runs) {
        run.validate();
        rate const sustained = sustained_data_rate(run);
        for (auto const& b : run.branches) {
            branch_output const out = branch_storage(run, b);
            plan.rows.push_back(storage_row{run.name, run.setup.name, run.run_seconds, sustained, b,
                                            out.volume, out.stored_events});
            plan.total += out.volume;
        }
        plan.total_run_seconds = plan.total_run_seconds + run.run_seconds;
    }
    return plan;
}

archival_rates archival_bandwidth(run_plan const& run, double contingency) {
    run.validate();
    if (!std::isfinite(contingency) || contingency < 1.0) {
        throw validation_error("archival contingency must be >= 1");
    }
    rate const sustained = sustained_data_rate(run);
    rate average = rate::bytes_per_second(0.0);
    for (auto const& b : run.branches) {
        average += sustained / (b.total_reduction() * run.compression_factor);
    }
    return archival_rates{average, average * contingency};
}

transient_requirements transient_filter_requirements(run_plan const& run,
                                                     double first_level_reduction,
                                                     double holding_days) {
    run.validate();
    if (!(first_level_reduction >= 1.0)) {
        throw validation_error("first-level reduction must be >= 1");
    }
    require_positive(holding_days, "holding_days");
    if (std::isinf(first_level_reduction)) {
        auto const zero = rate::bytes_per_second(0.0);
        return transient_requirements{data_volume::bytes(0.0, run.setup.convention), zero, zero};
    }
    rate const held = inspill_data_rate(run.setup, run.profile) / first_level_reduction;
    rate const write = sustained_data_rate(run) / first_level_reduction;
    return transient_requirements{
        volume_over(held, duration::days(holding_days), run.setup.convention),
        write,
        write,
    };
}

} // namespace fairplan
