#pragma once

#include "fairplan/ledger.hpp"
#include "fairplan/report.hpp"
#include "fairplan/scenario_doc.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace fairplan {

enum class table_kind { event_sizes, data_rates, storage_plan, compute, panda_hs06, file_sizes };

inline constexpr std::array<table_kind, 6> all_table_kinds{
    table_kind::event_sizes, table_kind::data_rates, table_kind::storage_plan,
    table_kind::compute,     table_kind::panda_hs06, table_kind::file_sizes};

/// Accepts the CLI spellings ("event-sizes", "storage-plan", ...).
table_kind parse_table_kind(std::string_view text);
std::string_view to_string(table_kind k) noexcept;

/// Tables for one kind. Sections absent from the document yield no tables.
std::vector<table> build_tables(scenario_document const& doc, table_kind kind);

/// Compute-class matrix, per-class shares and the Tier0 estimate. Throws
/// computation_error when a data-intensive fraction is missing.
std::vector<table> aggregate_tables(scenario_document const& doc, std::string const& scenario_name);

/// Stacked disk usage per experiment (PB) and, optionally, the cumulative
/// archive.
std::vector<series_block> timeline_series(scenario_document const& doc, std::string const& scenario_name,
                                          year_range horizon, bool archive);

/// Every table kind plus aggregation and timelines for every scenario.
report full_report(scenario_document const& doc, year_range horizon);

} // namespace fairplan
