#pragma once

#include "fairplan/scenario_doc.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fairplan::testing {

inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string shipped_text() { return read_file(FAIRPLAN_SHIPPED_SCENARIO); }

inline scenario_document const& shipped() {
    static scenario_document const doc = [] {
        parse_result r = parse_scenario(shipped_text());
        if (!r.ok()) {
            throw std::runtime_error("shipped scenario does not parse: " + to_string(r.errors.front()));
        }
        return std::move(*r.document);
    }();
    return doc;
}

inline double rel_diff(double actual, double expected) {
    return expected == 0.0 ? actual : (actual - expected) / expected;
}

} // namespace fairplan::testing
