#include "fairplan/detector.hpp"

#include <doctest.h>

using namespace fairplan;

namespace {

setup hadron() {
    return setup{"hadron", {{"STS", 5395, 4}, {"TRD", 1810, 12}, {"TOF", 670, 8}}, {}, 1.0, byte_convention::decimal};
}

setup muon() {
    return setup{"muon",
                 {{"STS", 5668, 4}, {"MUCH", 926, 4}, {"TRD", 55, 12}, {"TOF", 126, 8}},
                 {},
                 1.0,
                 byte_convention::decimal};
}

rate_profile profile(double average) {
    return rate_profile{rate::events_per_second(2 * average), rate::events_per_second(average),
                        rate::events_per_second(0.75 * average)};
}

}

TEST_SUITE("detector") {

TEST_CASE("event sizes from message tables") {
    CHECK(event_size(hadron()).bytes() == doctest::Approx(48660));
    CHECK(event_size(muon()).bytes() == doctest::Approx(28044));
    CHECK(event_size(setup{"empty", {}, {}, 1.0, byte_convention::decimal}).bytes() == 0.0);
}

TEST_CASE("energy scale factor") {
    auto s = hadron();
    s.energy_scale_factor = 0.7;
    CHECK(event_size(s).bytes() == doctest::Approx(0.7 * 48660));
    s.energy_scale_factor = 0.0;
    CHECK_THROWS_AS(s.validate(), validation_error);
    s.energy_scale_factor = 1.1;
    CHECK_THROWS_AS(event_size(s), validation_error);
}

TEST_CASE("setup validation") {
    auto s = hadron();
    s.name.clear();
    CHECK_THROWS_AS(s.validate(), validation_error);
    s = hadron();
    s.contributions[0].bytes_per_message = 0;
    CHECK_THROWS_AS(s.validate(), validation_error);
    s = hadron();
    s.contributions[0].messages_per_event = -1;
    CHECK_THROWS_AS(s.validate(), validation_error);
}

TEST_CASE("binary setups keep their convention") {
    auto s = hadron();
    s.convention = byte_convention::binary;
    CHECK(event_size(s).convention() == byte_convention::binary);
    CHECK(event_size(s).bytes() == doctest::Approx(48660));
}

TEST_CASE("in-spill data rate") {
    CHECK(inspill_data_rate(hadron(), profile(5e6)).value() == doctest::Approx(243.3e9));
    CHECK(inspill_data_rate(hadron(), profile(5e6)).value() == doctest::Approx(244e9).epsilon(0.005));
    CHECK(inspill_data_rate(muon(), profile(5e6)).value() == doctest::Approx(140e9).epsilon(0.005));
    CHECK(inspill_data_rate(muon(), profile(0)).value() == 0.0);
}

TEST_CASE("link bandwidth with noise and contingency") {
    auto const bw = gc_bandwidth_requirement(rate::bytes_per_second(244e9), 0.10, 1.5);
    CHECK(bw.upper_limit.value() == doctest::Approx(268.4e9));
    CHECK(bw.upper_limit.value() == doctest::Approx(270e9).epsilon(0.01));
    CHECK(gc_bandwidth_requirement(rate::bytes_per_second(270e9), 0.0, 1.5).requirement.value() ==
          doctest::Approx(405e9));
    auto const zero = gc_bandwidth_requirement(rate::bytes_per_second(0), 0.1, 1.5);
    CHECK(zero.upper_limit.value() == 0.0);
    CHECK(zero.requirement.value() == 0.0);
}

TEST_CASE("link bandwidth preconditions") {
    CHECK_THROWS_AS(gc_bandwidth_requirement(rate::bytes_per_second(1), -0.1, 1.5), validation_error);
    CHECK_THROWS_AS(gc_bandwidth_requirement(rate::bytes_per_second(1), 0.1, 0.9), validation_error);
    CHECK_THROWS_AS(gc_bandwidth_requirement(rate::events_per_second(1), 0.1, 1.5), validation_error);
}

}
