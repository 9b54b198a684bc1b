#include "fairplan/ledger.hpp"

#include <algorithm>
#include <cmath>

namespace fairplan {

std::string_view to_string(storage_kind k) noexcept {
    switch (k) {
    case storage_kind::raw_disk: return "raw_disk";
    case storage_kind::raw_archive: return "raw_archive";
    case storage_kind::simulation: return "simulation";
    case storage_kind::derived: return "derived";
    case storage_kind::transient: return "transient";
    case storage_kind::volatile_scratch: return "volatile";
    }
    return "raw_disk";
}

storage_kind parse_storage_kind(std::string_view text) {
    for (auto k : {storage_kind::raw_disk, storage_kind::raw_archive, storage_kind::simulation,
                   storage_kind::derived, storage_kind::transient, storage_kind::volatile_scratch}) {
        if (to_string(k) == text) {
            return k;
        }
    }
    throw validation_error("unknown storage kind '" + std::string(text) + "'");
}

double to_tb(data_volume v) noexcept { return v.in(prefix::tera); }

data_volume from_tb(double tb, byte_convention c) { return convert_volume(tb, prefix::tera, c); }

void storage_class::validate() const {
    require_non_negative(inflow_tb_per_year, "inflow of " + name);
    for (double v : inflow_tb_by_year) {
        require_non_negative(v, "inflow of " + name);
    }
    if (retention_years && *retention_years < 1) {
        throw validation_error("retention of '" + name + "' must be >= 1 year or permanent");
    }
    if (end_year && *end_year < start_year) {
        throw validation_error("storage class '" + name + "' ends before it starts");
    }
    if (copies < 1) {
        throw validation_error("storage class '" + name + "' needs at least one copy");
    }
    if (reprocessed && (reprocessed->generations < 1 || reprocessed->data_taking_years < 1)) {
        throw validation_error("reprocessing of '" + name + "' needs generations and years >= 1");
    }
}

bool storage_class::operating(int year) const {
    if (year < start_year || (end_year && year > *end_year)) {
        return false;
    }
    if (!inflow_tb_by_year.empty()) {
        return year - start_year < static_cast<int>(inflow_tb_by_year.size());
    }
    return true;
}

double storage_class::inflow_tb(int year) const {
    if (!operating(year)) {
        return 0.0;
    }
    if (!inflow_tb_by_year.empty()) {
        return inflow_tb_by_year[static_cast<std::size_t>(year - start_year)];
    }
    return inflow_tb_per_year;
}

data_volume disk_series::at(int year) const {
    if (year < years.from || year > years.to) {
        return data_volume{};
    }
    return stacked[static_cast<std::size_t>(year - years.from)];
}

data_volume disk_series::peak() const {
    data_volume best;
    for (auto const& v : stacked) {
        if (v.bytes() > best.bytes()) {
            best = v;
        }
    }
    return best;
}

accumulation_series reprocessed_accumulation(double annual_tb, int generations, int data_taking_years,
                                             int years) {
    require_non_negative(annual_tb, "annual volume");
    if (generations < 1 || data_taking_years < 1) {
        throw validation_error("reprocessed accumulation needs generations and data-taking years >= 1");
    }
    accumulation_series s;
    double total = 0.0;
    for (int k = 1; k <= years; ++k) {
        // datasets taken in years t with t <= k <= t + generations - 1
        int const newest = std::min(k, data_taking_years);
        int const oldest = std::max(1, k - generations + 1);
        double const copies = std::max(0, newest - oldest + 1);
        double const increase = annual_tb * copies;
        total += increase;
        s.increase_tb.push_back(increase);
        s.cumulative_tb.push_back(total);
    }
    return s;
}

namespace {

double usage_tb(storage_class const& c, int year) {
    if (year < c.start_year) {
        return 0.0;
    }
    switch (c.kind) {
    case storage_kind::transient:
    case storage_kind::volatile_scratch:
        return c.inflow_tb(year);
    case storage_kind::raw_archive:
        return 0.0;
    default:
        break;
    }
    if (c.reprocessed) {
        int last = c.start_year + c.reprocessed->data_taking_years - 1;
        if (c.end_year) {
            last = std::min(last, *c.end_year);
        }
        int const taking = last - c.start_year + 1;
        if (taking < 1) {
            return 0.0;
        }
        int const elapsed = year - c.start_year + 1;
        auto const acc = reprocessed_accumulation(c.inflow_tb_per_year, c.reprocessed->generations, taking, elapsed);
        return acc.cumulative_tb.back();
    }
    int first = c.start_year;
    if (c.retention_years) {
        first = std::max(first, year - *c.retention_years + 1);
    }
    double sum = 0.0;
    for (int y = first; y <= year; ++y) {
        sum += c.inflow_tb(y);
    }
    return sum;
}

} // namespace

disk_series ledger_series(std::vector<storage_class> const& classes, year_range horizon) {
    if (horizon.size() == 0) {
        throw validation_error("ledger horizon is empty");
    }
    disk_series s;
    s.years = horizon;
    s.stacked.assign(static_cast<std::size_t>(horizon.size()), data_volume{});
    for (auto const& c : classes) {
        c.validate();
        if (!c.feeds_disk()) {
            continue;
        }
        std::vector<data_volume> row;
        row.reserve(static_cast<std::size_t>(horizon.size()));
        for (int y = horizon.from; y <= horizon.to; ++y) {
            data_volume const v = data_volume::bytes(from_tb(usage_tb(c, y), c.convention).bytes());
            row.push_back(v);
            s.stacked[static_cast<std::size_t>(y - horizon.from)] += v;
        }
        s.class_names.push_back(c.name);
        s.per_class.push_back(std::move(row));
    }
    return s;
}

std::vector<data_volume> archive_series(std::vector<storage_class> const& classes, year_range horizon) {
    if (horizon.size() == 0) {
        throw validation_error("archive horizon is empty");
    }
    std::vector<data_volume> out;
    out.reserve(static_cast<std::size_t>(horizon.size()));
    for (int y = horizon.from; y <= horizon.to; ++y) {
        double bytes = 0.0;
        for (auto const& c : classes) {
            c.validate();
            if (!c.feeds_archive()) {
                continue;
            }
            for (int p = c.start_year; p <= y; ++p) {
                bytes += from_tb(c.inflow_tb(p), c.convention).bytes();
            }
        }
        out.push_back(data_volume::bytes(bytes));
    }
    return out;
}

} // namespace fairplan
