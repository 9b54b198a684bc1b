#pragma once

#include "fairplan/quantities.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fairplan {

enum class storage_kind { raw_disk, raw_archive, simulation, derived, transient, volatile_scratch };

std::string_view to_string(storage_kind k) noexcept;
storage_kind parse_storage_kind(std::string_view text);

/// Datasets that are re-produced once per year after their first production,
/// with every generation kept on disk.
struct reprocessing {
    int generations = 1;
    int data_taking_years = 1;
};

/// An annual data inflow and how long it stays on disk.
///
/// Inflow is credited at the end of each calendar year. The production year
/// counts as the first retention year. Transient and volatile classes are a
/// constant plateau of `inflow_tb_per_year` terabytes over the operating
/// years. `raw_archive` classes only feed the archive series.
struct storage_class {
    std::string name;
    storage_kind kind = storage_kind::raw_disk;
    double inflow_tb_per_year = 0.0;
    /// Overrides the constant inflow when non-empty; entry i is year start+i.
    std::vector<double> inflow_tb_by_year;
    std::optional<int> retention_years;  // nullopt: permanent
    int start_year = 0;
    std::optional<int> end_year;
    byte_convention convention = byte_convention::decimal;
    /// Also counted in the cumulative archive series.
    bool archived = false;
    /// Copies kept at other sites; metadata only, never summed locally.
    int copies = 1;
    std::optional<reprocessing> reprocessed;

    void validate() const;
    /// Terabytes produced in `year` (0 outside the operating years).
    double inflow_tb(int year) const;
    bool operating(int year) const;
    bool feeds_disk() const noexcept { return kind != storage_kind::raw_archive; }
    bool feeds_archive() const noexcept { return kind == storage_kind::raw_archive || archived; }
};

struct year_range {
    int from = 0;
    int to = 0;  // inclusive

    int size() const noexcept { return to >= from ? to - from + 1 : 0; }
};

/// Disk usage sampled at each year boundary, per class and stacked.
struct disk_series {
    year_range years;
    std::vector<std::string> class_names;
    std::vector<std::vector<data_volume>> per_class;  // [class][year - from]
    std::vector<data_volume> stacked;

    data_volume at(int year) const;
    data_volume peak() const;
};

disk_series ledger_series(std::vector<storage_class> const& classes, year_range horizon);

struct accumulation_series {
    std::vector<double> increase_tb;    // per operating year, year 1 first
    std::vector<double> cumulative_tb;
};

/// Yearly increase and running total for `years` years of a reprocessed
/// dataset family (see `reprocessing`).
accumulation_series reprocessed_accumulation(double annual_tb, int generations, int data_taking_years,
                                             int years);

/// Cumulative archive volume per year; monotone non-decreasing.
std::vector<data_volume> archive_series(std::vector<storage_class> const& classes, year_range horizon);

double to_tb(data_volume v) noexcept;
data_volume from_tb(double tb, byte_convention c);

} // namespace fairplan
