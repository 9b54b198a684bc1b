#include "fairplan/ledger.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace fairplan;

namespace {

constexpr double pb = 1e15;

storage_class cls(std::string name, double tb, std::optional<int> retention, int start) {
    storage_class c;
    c.name = std::move(name);
    c.inflow_tb_per_year = tb;
    c.retention_years = retention;
    c.start_year = start;
    return c;
}

}

TEST_SUITE("ledger") {

TEST_CASE("raw data with two-year retention") {
    auto const s = ledger_series({cls("raw", 22500, 2, 2028)}, {2028, 2032});
    CHECK(s.at(2028).bytes() / pb == doctest::Approx(22.5));
    for (int y = 2029; y <= 2032; ++y) {
        CHECK(s.at(y).bytes() / pb == doctest::Approx(45.0));
    }
}

TEST_CASE("permanent retention accumulates") {
    auto const s = ledger_series({cls("p", 7, std::nullopt, 2030)}, {2030, 2040});
    for (int y = 2030; y <= 2040; ++y) {
        CHECK(to_tb(s.at(y)) == doctest::Approx(7.0 * (y - 2030 + 1)));
    }
}

TEST_CASE("horizon before start is all zero") {
    auto const s = ledger_series({cls("late", 100, 3, 2050)}, {2028, 2040});
    for (auto const& v : s.stacked) CHECK(v.bytes() == 0.0);
    CHECK(s.peak().bytes() == 0.0);
}

TEST_CASE("empty horizon is rejected") {
    CHECK_THROWS_AS(ledger_series({}, {2030, 2029}), validation_error);
    CHECK_THROWS_AS(archive_series({}, {2030, 2029}), validation_error);
}

TEST_CASE("stacked equals the sum of classes") {
    auto const s = ledger_series({cls("a", 10, 2, 2028), cls("b", 3, std::nullopt, 2029)}, {2028, 2035});
    REQUIRE(s.per_class.size() == 2);
    for (std::size_t i = 0; i < s.stacked.size(); ++i) {
        CHECK(s.stacked[i].bytes() == s.per_class[0][i].bytes() + s.per_class[1][i].bytes());
    }
}

TEST_CASE("end year stops inflow but retained data drains") {
    auto c = cls("e", 10, 3, 2028);
    c.end_year = 2029;
    auto const s = ledger_series({c}, {2028, 2033});
    CHECK(to_tb(s.at(2029)) == doctest::Approx(20));
    CHECK(to_tb(s.at(2030)) == doctest::Approx(20));
    CHECK(to_tb(s.at(2031)) == doctest::Approx(10));
    CHECK(to_tb(s.at(2032)) == 0.0);
}

TEST_CASE("per-year inflow list") {
    auto c = cls("list", 0, std::nullopt, 2028);
    c.inflow_tb_by_year = {1, 2, 3};
    auto const s = ledger_series({c}, {2028, 2032});
    CHECK(to_tb(s.at(2030)) == doctest::Approx(6));
    CHECK(to_tb(s.at(2032)) == doctest::Approx(6));
}

TEST_CASE("transient and volatile kinds are a plateau") {
    auto t = cls("t", 14000, std::nullopt, 2028);
    t.kind = storage_kind::transient;
    auto const s = ledger_series({t}, {2027, 2040});
    CHECK(s.at(2027).bytes() == 0.0);
    CHECK(s.at(2028).bytes() / pb == doctest::Approx(14));
    CHECK(s.at(2040).bytes() / pb == doctest::Approx(14));
}

TEST_CASE("raw archive classes stay off disk") {
    auto a = cls("tape", 100, std::nullopt, 2028);
    a.kind = storage_kind::raw_archive;
    auto const s = ledger_series({a}, {2028, 2030});
    CHECK(s.per_class.empty());
    CHECK(s.at(2030).bytes() == 0.0);
    auto const arch = archive_series({a}, {2028, 2030});
    CHECK(to_tb(arch[2]) == doctest::Approx(300));
}

TEST_CASE("archive series") {
    CHECK(archive_series({}, {2028, 2030})[2].bytes() == 0.0);
    auto a = cls("one", 1000, 1, 2028);
    a.archived = true;
    a.copies = 2;
    auto const arch = archive_series({a}, {2028, 2032});
    CHECK(arch[4].bytes() / pb == doctest::Approx(5.0));
}

TEST_CASE("storage class validation") {
    CHECK_THROWS_AS(cls("r", 1, 0, 2028).validate(), validation_error);
    CHECK_THROWS_AS(cls("n", -1, 1, 2028).validate(), validation_error);
    auto c = cls("e", 1, 1, 2030);
    c.end_year = 2029;
    CHECK_THROWS_AS(c.validate(), validation_error);
    CHECK(parse_storage_kind("volatile") == storage_kind::volatile_scratch);
    CHECK_THROWS_AS(parse_storage_kind("tape"), validation_error);
}

TEST_CASE("reprocessed AOD accumulation") {
    auto const s = reprocessed_accumulation(560, 4, 10, 13);
    CHECK(s.increase_tb.front() == 560.0);
    CHECK(s.increase_tb[3] == 2240.0);
    CHECK(s.cumulative_tb.back() == 22400.0);
    CHECK(s.increase_tb == testing::brute_force_reprocessing(560, 4, 10, 13));
}

TEST_CASE("single generation degenerates to a permanent series") {
    auto const s = reprocessed_accumulation(50, 1, 20, 20);
    auto const plain = ledger_series({cls("p", 50, std::nullopt, 2000)}, {2000, 2019});
    for (int k = 0; k < 20; ++k) {
        CHECK(s.cumulative_tb[static_cast<std::size_t>(k)] == doctest::Approx(to_tb(plain.stacked[static_cast<std::size_t>(k)])));
    }
}

TEST_CASE("two generations over one data-taking year") {
    auto const s = reprocessed_accumulation(100, 2, 1, 3);
    CHECK(s.increase_tb == std::vector<double>{100, 100, 0});
    CHECK(s.cumulative_tb.back() == 200.0);
}

TEST_CASE("reprocessed class on the disk ledger") {
    auto c = cls("aod", 560, std::nullopt, 2032);
    c.kind = storage_kind::derived;
    c.reprocessed = reprocessing{4, 10};
    auto const s = ledger_series({c}, {2032, 2046});
    CHECK(to_tb(s.at(2032)) == doctest::Approx(560));
    CHECK(to_tb(s.at(2044)) == doctest::Approx(22400));
    CHECK(to_tb(s.at(2046)) == doctest::Approx(22400));
    CHECK_THROWS_AS(reprocessed_accumulation(1, 0, 1, 1), validation_error);
}

TEST_CASE("retention window matches a live-list oracle") {
    for (int r = 1; r <= 6; ++r) {
        auto const s = ledger_series({cls("x", 3, r, 2028)}, {2028, 2040});
        for (int y = 2028; y <= 2040; ++y) {
            CHECK(to_tb(s.at(y)) == doctest::Approx(testing::brute_force_usage(3, r, 2028, y)));
        }
    }
}

}
