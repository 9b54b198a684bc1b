#include "fairplan/scenario_doc.hpp"

#include "random.hpp"
#include "shipped.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>

using namespace fairplan;
using fairplan::testing::rng;

namespace {

constexpr int fuzz_cases = 10000;
constexpr int canonical_cases = 100;

std::string random_bytes(rng& g) {
    std::string s(static_cast<std::size_t>(g.integer(0, 256)), '\0');
    for (auto& c : s) c = static_cast<char>(g.integer(0, 255));
    return s;
}

// Damages a valid document so the parser sees plausible but broken JSON.
std::string mutate(rng& g, std::string s) {
    int const edits = g.integer(1, 8);
    for (int i = 0; i < edits && !s.empty(); ++i) {
        auto const at = static_cast<std::size_t>(g.integer(0, static_cast<int>(s.size()) - 1));
        switch (g.integer(0, 4)) {
        case 0: s[at] = static_cast<char>(g.integer(0, 255)); break;
        case 1: s.erase(at, static_cast<std::size_t>(g.integer(1, 64))); break;
        case 2: s.insert(at, 1, "{}[]\",:0-e."[g.integer(0, 10)]); break;
        case 3: s.resize(at); break;
        default: s.insert(at, s.substr(at, static_cast<std::size_t>(g.integer(1, 32)))); break;
        }
    }
    return s;
}

void scale(rng& g, double& v) { v *= g.uniform(0.5, 2.0); }

// A valid document built by perturbing the shipped one.
scenario_document random_document(rng& g) {
    scenario_document doc = testing::shipped();
    for (auto& [name, run] : doc.runs) {
        scale(g, run.peak_rate);
        scale(g, run.run_seconds);
        for (auto& b : run.branches) b.selectivity = g.uniform(1, 400);
    }
    for (auto& [name, s] : doc.setups) {
        for (auto& c : s.contributions) scale(g, c.messages_per_event);
        s.energy_scale_factor = g.uniform(0.1, 1.0);
    }
    for (auto& [name, c] : doc.campaigns) {
        scale(g, c.events);
        c.cpu_efficiency = g.uniform(0.5, 1.0);
        c.generations = g.integer(1, 6);
    }
    for (auto& [name, secs] : doc.processing_stages) scale(g, secs);
    for (auto& [name, e] : doc.experiments) {
        for (auto& [phase, p] : e.phases) {
            for (auto c : all_compute_classes) p.compute[c] = p.compute[c] * g.uniform(0.5, 2.0);
            for (auto& sc : p.storage) {
                scale(g, sc.cls.inflow_tb_per_year);
                if (sc.cls.retention_years) sc.cls.retention_years = g.integer(1, 10);
            }
        }
    }
    for (auto& [name, s] : doc.scenarios) {
        s.start_year = g.integer(2025, 2035);
        for (auto& [e, f] : s.data_intensive_offline_fraction) f = g.uniform(0, 1);
        if (g.coin() && s.experiments.size() > 1) {
            std::string const dropped = s.experiments.back();
            s.experiments.pop_back();
            s.schedule.erase(dropped);
            s.data_intensive_offline_fraction.erase(dropped);
        }
    }
    if (g.coin()) doc.event_streams.clear();
    return doc;
}

}

TEST_SUITE("fuzz") {

TEST_CASE("random bytes never crash the parser") {
    rng g(2024);
    int rejected = 0;
    for (int i = 0; i < fuzz_cases; ++i) {
        std::string const text = random_bytes(g);
        parse_result r;
        CHECK_NOTHROW(r = parse_scenario(text));
        if (!r.ok()) {
            ++rejected;
            CHECK_FALSE(r.errors.empty());
        }
    }
    CHECK(rejected == fuzz_cases);
}

TEST_CASE("mutated documents never crash the parser and every error has a path or line") {
    rng g(2025);
    std::string const base = testing::shipped_text();
    for (int i = 0; i < fuzz_cases; ++i) {
        std::string const text = mutate(g, base);
        parse_result r;
        CHECK_NOTHROW(r = parse_scenario(text));
        for (auto const& e : r.errors) {
            CHECK((!e.path.empty() || e.line > 0 || e.message.find("syntax error") == 0 ||
                   e.message.find("schema_version") != std::string::npos));
        }
    }
}

}

TEST_SUITE("canonical") {

TEST_CASE("emit and parse reach a fixpoint") {
    rng g(7);
    for (int i = 0; i < canonical_cases; ++i) {
        scenario_document const doc = random_document(g);
        // re-indent so the parser sees a non-canonical spelling first
        std::string const x = nlohmann::json::parse(emit_scenario(doc)).dump(g.integer(-1, 4));
        parse_result const first = parse_scenario(x);
        REQUIRE_MESSAGE(first.ok(), (first.ok() ? std::string() : to_string(first.errors.front())));
        std::string const canonical = emit_scenario(*first.document);
        parse_result const second = parse_scenario(canonical);
        REQUIRE(second.ok());
        CHECK(emit_scenario(*second.document) == canonical);
    }
}

}
