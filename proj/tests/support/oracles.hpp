#pragma once

#include <vector>

namespace fairplan::testing {

// Enumerates every (dataset year, generation) copy and credits it to the year it is produced.
inline std::vector<double> brute_force_reprocessing(double annual_tb, int generations, int data_taking_years,
                                                    int years) {
    std::vector<double> increase(static_cast<std::size_t>(years), 0.0);
    for (int taken = 1; taken <= data_taking_years; ++taken) {
        for (int gen = 0; gen < generations; ++gen) {
            int const produced = taken + gen;
            if (produced <= years) {
                increase[static_cast<std::size_t>(produced - 1)] += annual_tb;
            }
        }
    }
    return increase;
}

// Keeps a list of live yearly inflows and drops the ones older than the retention window.
inline double brute_force_usage(double inflow, int retention, int start, int year) {
    std::vector<int> live;
    for (int y = start; y <= year; ++y) {
        live.push_back(y);
        std::erase_if(live, [&](int produced) { return y - produced >= retention; });
    }
    return inflow * static_cast<double>(live.size());
}

} // namespace fairplan::testing
