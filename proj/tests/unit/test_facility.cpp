#include "fairplan/facility.hpp"

#include <doctest.h>

using namespace fairplan;

namespace {

experiment_requirement exp(std::string name, double iia, double iib, double days, std::optional<double> f = 0.5) {
    experiment_requirement e;
    e.name = std::move(name);
    e.compute[compute_class::IIa] = compute_power::hs06(iia);
    e.compute[compute_class::IIb] = compute_power::hs06(iib);
    e.online_days_per_year = days;
    e.data_intensive_offline_fraction = f;
    return e;
}

scenario make(std::vector<experiment_requirement> exps) {
    scenario s;
    s.name = "test";
    s.experiments = std::move(exps);
    s.start_year = 2028;
    return s;
}

}

TEST_SUITE("facility") {

TEST_CASE("compute class names") {
    CHECK(to_string(compute_class::IIa) == "II.a");
    CHECK(parse_compute_class("I.c") == compute_class::Ic);
    CHECK_THROWS_AS(parse_compute_class("III"), validation_error);
    CHECK(classify_scenario("FS+") == scenario_kind::fs_plus);
    CHECK(classify_scenario("MSVc-sequential") == scenario_kind::msvc_sequential);
    CHECK(classify_scenario("other") == scenario_kind::custom);
}

TEST_CASE("aggregation sums columns and reports shares") {
    auto const s = make({exp("CBM", 780e3, 980e3, 100), exp("NUSTAR", 70e3, 60e3, 180), exp("HADES", 36e3, 22e3, 30)});
    auto const agg = aggregate_compute(s);
    CHECK(agg.online_total().value() == doctest::Approx(1.062e6));
    CHECK(agg.offline_total().value() == doctest::Approx(886e3));
    CHECK(agg.shares.at("CBM")[static_cast<std::size_t>(compute_class::IIb)] == doctest::Approx(980.0 / 1062.0));
    CHECK(agg.shares.at("CBM")[static_cast<std::size_t>(compute_class::Ia)] == 0.0);
}

TEST_CASE("duplicate experiments and bad windows are rejected") {
    CHECK_THROWS_AS(aggregate_compute(make({exp("A", 1, 1, 10), exp("A", 1, 1, 10)})), validation_error);
    auto s = make({exp("A", 1, 1, 10)});
    s.schedule["A"] = {day_window{0, 10}};
    CHECK_THROWS_AS(s.validate(), validation_error);
    s.schedule["A"] = {day_window{300, 366}};
    CHECK_THROWS_AS(s.validate(), validation_error);
    s.schedule.clear();
    s.schedule["B"] = {day_window{1, 10}};
    CHECK_THROWS_AS(s.validate(), validation_error);
    auto bad = make({exp("A", 1, 1, 10, 1.5)});
    CHECK_THROWS_AS(bad.validate(), validation_error);
}

TEST_CASE("online profile of a single experiment") {
    auto const p = build_online_profile(make({exp("CBM", 0, 980e3, 100)}));
    CHECK(p.maximum.value() == 980e3);
    CHECK(p.peak_day == 1);
    CHECK(p.demand[99].value() == 980e3);
    CHECK(p.demand[100].value() == 0.0);
    CHECK(p.annual_mean().value() == doctest::Approx(980e3 * 100 / 365));
}

TEST_CASE("overlapping windows stack") {
    auto const p = build_online_profile(make({exp("CBM", 0, 980e3, 100), exp("NUSTAR", 0, 60e3, 180), exp("HADES", 0, 22e3, 30)}));
    CHECK(p.maximum.value() == doctest::Approx(1.062e6));
}

TEST_CASE("disjoint windows peak at the largest experiment") {
    auto s = make({exp("CBM", 0, 980e3, 100), exp("PANDA", 0, 750e3, 100)});
    s.schedule["PANDA"] = {day_window{101, 200}};
    auto const p = build_online_profile(s);
    CHECK(p.maximum.value() == 980e3);
    CHECK(p.demand[150].value() == 750e3);
}

TEST_CASE("Tier0 estimate") {
    auto s = make({exp("A", 1000, 500, 100, 0.2)});
    auto const t = tier0_minimum(s);
    double const mean = 500.0 * 100 / 365;
    CHECK(t.hs06.value() == doctest::Approx(500 + 200));
    CHECK(t.total_capacity.value() == doctest::Approx(1000 + mean));
    CHECK(t.fraction_of_total == doctest::Approx(700 / (1000 + mean)));
}

TEST_CASE("Tier0 upper bound with continuous online and full data-intensive share") {
    auto const t = tier0_minimum(make({exp("A", 1000, 500, 365, 1.0), exp("B", 300, 50, 365, 1.0)}));
    CHECK(t.fraction_of_total == doctest::Approx(1.0));
}

TEST_CASE("missing fraction is a configuration error") {
    CHECK_THROWS_AS(tier0_minimum(make({exp("A", 1000, 500, 100, std::nullopt)})), computation_error);
}

TEST_CASE("uniform fraction solver inverts the Tier0 estimate") {
    auto s = make({exp("A", 1000, 500, 100), exp("B", 400, 100, 200)});
    double const f = solve_uniform_data_intensive_fraction(s, 0.6);
    for (auto& e : s.experiments) e.data_intensive_offline_fraction = f;
    CHECK(tier0_minimum(s).fraction_of_total == doctest::Approx(0.6));
    CHECK_THROWS_AS(solve_uniform_data_intensive_fraction(s, 0.01), computation_error);
}

TEST_CASE("storage evolution") {
    auto a = exp("A", 0, 0, 0);
    storage_class raw;
    raw.name = "raw";
    raw.inflow_tb_per_year = 1000;
    raw.retention_years = 2;
    raw.start_year = 2028;
    raw.archived = true;
    a.storage = {raw};
    auto const r = storage_evolution(make({a}), {2028, 2032});
    CHECK(r.saturation.bytes() == doctest::Approx(2e15));
    CHECK(r.per_experiment.at("A").at(2030).bytes() == doctest::Approx(2e15));
    CHECK(r.archive_slope_tb_per_year(2028, 2031) == doctest::Approx(1000));
    CHECK_THROWS_AS(r.archive_slope_tb_per_year(2031, 2028), validation_error);

    auto const empty = storage_evolution(make({}), {2028, 2030});
    CHECK(empty.saturation.bytes() == 0.0);
    CHECK(empty.archive.back().bytes() == 0.0);
}

}
