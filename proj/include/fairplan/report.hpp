#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fairplan {

enum class report_format { csv, json, markdown };

/// Throws validation_error for anything but "csv", "json" or "markdown".
report_format parse_report_format(std::string_view text);
std::string_view to_string(report_format f) noexcept;

/// A table entry. Inputs echo scenario values and are printed exactly;
/// derived values are rounded for display in markdown.
struct cell {
    enum class kind { text, input, derived };

    kind type = kind::text;
    std::string text;
    double value = 0.0;

    static cell str(std::string s) { return cell{kind::text, std::move(s), 0.0}; }
    static cell input(double v) { return cell{kind::input, {}, v}; }
    static cell derived(double v) { return cell{kind::derived, {}, v}; }
};

struct column {
    std::string name;
    std::string unit;  // empty for dimensionless or text columns
};

struct table_row {
    std::string label;
    std::vector<cell> cells;  // one per column
};

struct table {
    std::string id;
    std::string title;
    std::string label_header;
    std::vector<column> columns;
    std::vector<table_row> rows;
};

/// Year-indexed values, one named series per entry.
struct series_block {
    std::string id;
    std::string title;
    std::string unit;
    std::vector<int> years;
    std::vector<std::pair<std::string, std::vector<double>>> series;
};

struct report {
    std::string title;
    std::vector<table> tables;
    std::vector<series_block> series;
};

/// At most four significant digits in fixed notation, trailing zeros dropped.
std::string format_derived(double v);
/// Shortest text that parses back to exactly `v`.
std::string format_exact(double v);

/// Deterministic rendering. CSV and JSON carry full precision; markdown is
/// meant for reading and rounds derived values.
std::string emit_report(report const& r, report_format f);

} // namespace fairplan
