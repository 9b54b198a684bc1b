#include "fairplan/trigger.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace fairplan;

namespace {

constexpr double pb = 1e15;

rate_profile profile(double average) {
    return rate_profile{rate::events_per_second(2 * average), rate::events_per_second(average),
                        rate::events_per_second(0.75 * average)};
}

run_plan hadron_run() {
    run_plan r;
    r.name = "hadron";
    r.setup = setup{"hadron", {{"STS", 5395, 4}, {"TRD", 1810, 12}, {"TOF", 670, 8}}, {}, 1.0, byte_convention::decimal};
    r.run_seconds = duration::seconds(2.75e6);
    r.profile = profile(5e6);
    r.branches = {trigger_branch{"physics", 200, 1, 1e12}, trigger_branch{"min. bias", 1, 200, 0.5e12}};
    return r;
}

run_plan electron_run() {
    run_plan r;
    r.name = "electron";
    // 73.4 kB per event is the published total; exact message counts live in the scenario file
    r.setup = setup{"electron", {{"all", 73400, 1}}, {}, 1.0, byte_convention::decimal};
    r.run_seconds = duration::seconds(2.75e6);
    r.profile = profile(1e5);
    r.branches = {trigger_branch{"min. bias", 1, 1, std::nullopt}};
    return r;
}

}

TEST_SUITE("trigger") {

TEST_CASE("sustained data rate") {
    CHECK(sustained_data_rate(hadron_run()).value() == doctest::Approx(182.5e9).epsilon(1e-3));
    CHECK(sustained_data_rate(electron_run()).value() == doctest::Approx(5.505e9).epsilon(1e-3));
}

TEST_CASE("branch storage") {
    auto const run = hadron_run();
    auto const out = branch_storage(run, run.branches[0]);
    CHECK(out.volume.bytes() / pb == doctest::Approx(2.509).epsilon(1e-3));
    CHECK(out.stored_events == doctest::Approx(out.volume.bytes() / 48660.0));
    auto const e = electron_run();
    CHECK(branch_storage(e, e.branches[0]).volume.bytes() / pb == doctest::Approx(15.14).epsilon(1e-3));
}

TEST_CASE("no reduction stores the raw stream") {
    auto run = hadron_run();
    trigger_branch all{"all", 1, 1, std::nullopt};
    CHECK(branch_storage(run, all).volume.bytes() ==
          doctest::Approx(sustained_data_rate(run).value() * run.run_seconds.seconds()));
}

TEST_CASE("compression divides stored volume") {
    auto run = hadron_run();
    double const plain = branch_storage(run, run.branches[0]).volume.bytes();
    run.compression_factor = 1.25;
    CHECK(branch_storage(run, run.branches[0]).volume.bytes() == doctest::Approx(plain / 1.25));
}

TEST_CASE("annual storage plan sums its rows") {
    auto const plan = annual_storage_plan({hadron_run(), electron_run()});
    REQUIRE(plan.rows.size() == 3);
    double sum = 0;
    for (auto const& r : plan.rows) sum += r.volume.bytes();
    CHECK(plan.total.bytes() == sum);
    CHECK(plan.total_run_seconds.seconds() == doctest::Approx(5.5e6));
    CHECK(plan.rows[0].branch.equivalent_events == 1e12);

    auto const single = annual_storage_plan({electron_run()});
    CHECK(single.total.bytes() / pb == doctest::Approx(15.0).epsilon(0.02));
}

TEST_CASE("run validation") {
    auto run = hadron_run();
    run.branches.clear();
    CHECK_THROWS_AS(annual_storage_plan({run}), validation_error);
    CHECK_THROWS_AS(annual_storage_plan({}), validation_error);
    run = hadron_run();
    run.run_seconds = duration::seconds(0);
    CHECK_THROWS_AS(run.validate(), validation_error);
    run = hadron_run();
    run.branches[0].selectivity = 0.5;
    CHECK_THROWS_AS(run.validate(), validation_error);
}

TEST_CASE("archival bandwidth") {
    auto const e = archival_bandwidth(electron_run(), 1.5);
    CHECK(e.average.value() == doctest::Approx(5.505e9).epsilon(1e-3));
    CHECK(e.peak.value() == doctest::Approx(8.26e9).epsilon(1e-3));

    auto const h = archival_bandwidth(hadron_run(), 1.0);
    double const by_branch = sustained_data_rate(hadron_run()).value() / 200.0 * 2.0;
    CHECK(h.average.value() == doctest::Approx(by_branch));
    CHECK(h.average.value() == doctest::Approx(1.83e9).epsilon(0.005));
    CHECK(h.peak.value() == h.average.value());
}

TEST_CASE("transient filtering buffer") {
    auto const t = transient_filter_requirements(hadron_run(), 10, 7);
    CHECK(t.volume.bytes() / pb == doctest::Approx(14.72).epsilon(1e-3));
    CHECK(t.write_bandwidth.value() == doctest::Approx(18.25e9).epsilon(1e-3));
    CHECK(t.read_bandwidth.value() == t.write_bandwidth.value());

    auto const none = transient_filter_requirements(hadron_run(), std::numeric_limits<double>::infinity(), 7);
    CHECK(none.volume.bytes() == 0.0);
    CHECK_THROWS_AS(transient_filter_requirements(hadron_run(), 0.5, 7), validation_error);
    CHECK_THROWS_AS(transient_filter_requirements(hadron_run(), 10, 0), validation_error);
}

}
