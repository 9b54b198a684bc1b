#include "fairplan/report.hpp"

#include "fairplan/quantities.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <system_error>

namespace fairplan {

report_format parse_report_format(std::string_view text) {
    if (text == "csv") return report_format::csv;
    if (text == "json") return report_format::json;
    if (text == "markdown") return report_format::markdown;
    throw validation_error("unknown report format '" + std::string(text) + "' (expected csv, json or markdown)");
}

std::string_view to_string(report_format f) noexcept {
    switch (f) {
    case report_format::csv: return "csv";
    case report_format::json: return "json";
    case report_format::markdown: return "markdown";
    }
    return "csv";
}

std::string format_exact(double v) {
    if (v == 0.0) {
        return "0";
    }
    char buf[512];
    double const mag = std::fabs(v);
    // plain digits where that stays readable; both forms round-trip
    auto const fmt = (mag >= 1e-4 && mag < 1e17) ? std::chars_format::fixed : std::chars_format::general;
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, fmt);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

std::string format_derived(double v) {
    if (!std::isfinite(v)) {
        return format_exact(v);
    }
    if (v == 0.0) {
        return "0";
    }
    int const magnitude = static_cast<int>(std::floor(std::log10(std::fabs(v))));
    int decimals = 3 - magnitude;
    double shown = v;
    if (decimals < 0) {
        double const unit = std::pow(10.0, -decimals);
        shown = std::round(v / unit) * unit;
        decimals = 0;
    }
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, shown, std::chars_format::fixed, decimals);
    if (ec != std::errc{}) {
        return format_exact(v);
    }
    std::string s(buf, end);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    if (s == "-0") {
        s = "0";
    }
    return s;
}

namespace {

std::string csv_field(std::string const& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string md_text(std::string const& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') {
            out += "\\|";
        } else if (c == '\n' || c == '\r') {
            out += ' ';
        } else {
            out += c;
        }
    }
    return out;
}

std::string machine_text(cell const& c) { return c.type == cell::kind::text ? c.text : format_exact(c.value); }

std::string display_text(cell const& c) {
    switch (c.type) {
    case cell::kind::text: return c.text;
    case cell::kind::input: return format_exact(c.value);
    case cell::kind::derived: return format_derived(c.value);
    }
    return c.text;
}

std::string heading(column const& c) { return c.unit.empty() ? c.name : c.name + " [" + c.unit + "]"; }

std::string emit_csv(report const& r) {
    std::string out = "block,row,column,value,unit\n";
    auto line = [&out](std::string const& block, std::string const& row, std::string const& col,
                       std::string const& value, std::string const& unit) {
        out += csv_field(block) + ',' + csv_field(row) + ',' + csv_field(col) + ',' + csv_field(value) + ',' +
               csv_field(unit) + '\n';
    };
    for (auto const& t : r.tables) {
        for (auto const& row : t.rows) {
            for (std::size_t i = 0; i < t.columns.size() && i < row.cells.size(); ++i) {
                line(t.id, row.label, t.columns[i].name, machine_text(row.cells[i]), t.columns[i].unit);
            }
        }
    }
    for (auto const& s : r.series) {
        for (auto const& [name, values] : s.series) {
            for (std::size_t i = 0; i < s.years.size() && i < values.size(); ++i) {
                line(s.id, name, std::to_string(s.years[i]), format_exact(values[i]), s.unit);
            }
        }
    }
    return out;
}

std::string emit_json(report const& r) {
    using nlohmann::json;
    json tables = json::array();
    for (auto const& t : r.tables) {
        json columns = json::array();
        for (auto const& c : t.columns) {
            columns.push_back(json{{"name", c.name}, {"unit", c.unit}});
        }
        json rows = json::array();
        for (auto const& row : t.rows) {
            json cells = json::array();
            for (auto const& c : row.cells) {
                if (c.type == cell::kind::text) {
                    cells.push_back(c.text);
                } else {
                    cells.push_back(c.value);
                }
            }
            rows.push_back(json{{"label", row.label}, {"cells", std::move(cells)}});
        }
        tables.push_back(json{{"id", t.id}, {"title", t.title}, {"label_header", t.label_header},
                              {"columns", std::move(columns)}, {"rows", std::move(rows)}});
    }
    json series = json::array();
    for (auto const& s : r.series) {
        json list = json::array();
        for (auto const& [name, values] : s.series) {
            list.push_back(json{{"name", name}, {"values", values}});
        }
        series.push_back(json{{"id", s.id}, {"title", s.title}, {"unit", s.unit}, {"years", s.years},
                              {"series", std::move(list)}});
    }
    json doc{{"title", r.title}, {"tables", std::move(tables)}, {"series", std::move(series)}};
    return doc.dump(2) + "\n";
}

void md_table(std::string& out, std::vector<std::string> const& head, std::vector<std::vector<std::string>> const& rows) {
    auto line = [&out](std::vector<std::string> const& cells) {
        out += '|';
        for (auto const& c : cells) {
            out += ' ' + md_text(c) + " |";
        }
        out += '\n';
    };
    line(head);
    out += '|';
    for (std::size_t i = 0; i < head.size(); ++i) {
        out += " --- |";
    }
    out += '\n';
    for (auto const& row : rows) {
        line(row);
    }
}

std::string emit_markdown(report const& r) {
    std::string out;
    if (!r.title.empty()) {
        out += "# " + md_text(r.title) + "\n";
    }
    for (auto const& t : r.tables) {
        if (!out.empty()) out += '\n';
        out += "## " + md_text(t.title) + "\n\n";
        std::vector<std::string> head{t.label_header};
        for (auto const& c : t.columns) {
            head.push_back(heading(c));
        }
        std::vector<std::vector<std::string>> rows;
        for (auto const& row : t.rows) {
            std::vector<std::string> cells{row.label};
            for (auto const& c : row.cells) {
                cells.push_back(display_text(c));
            }
            rows.push_back(std::move(cells));
        }
        md_table(out, head, rows);
    }
    for (auto const& s : r.series) {
        if (!out.empty()) out += '\n';
        out += "## " + md_text(s.title) + "\n\n";
        std::vector<std::string> head{"year"};
        for (auto const& [name, values] : s.series) {
            head.push_back(s.unit.empty() ? name : name + " [" + s.unit + "]");
        }
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < s.years.size(); ++i) {
            std::vector<std::string> cells{std::to_string(s.years[i])};
            for (auto const& [name, values] : s.series) {
                cells.push_back(i < values.size() ? format_derived(values[i]) : "");
            }
            rows.push_back(std::move(cells));
        }
        md_table(out, head, rows);
    }
    return out;
}

} // namespace

std::string emit_report(report const& r, report_format f) {
    switch (f) {
    case report_format::csv: return emit_csv(r);
    case report_format::json: return emit_json(r);
    case report_format::markdown: return emit_markdown(r);
    }
    throw validation_error("unknown report format");
}

} // namespace fairplan
