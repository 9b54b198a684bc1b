// Command-line driver for scenario documents.
//
// Exit codes: 0 success, 1 validation failure, 2 computation error, 64 usage.

#include "fairplan/report.hpp"
#include "fairplan/scenario_doc.hpp"
#include "fairplan/tables.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_computation = 2;
constexpr int exit_usage = 64;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_document : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string scenario_path(std::string const& given) {
    if (!given.empty()) {
        return given;
    }
    if (char const* env = std::getenv("FAIRPLAN_SCENARIO_PATH"); env != nullptr && *env != '\0') {
        return env;
    }
    throw usage_error("no scenario file given and FAIRPLAN_SCENARIO_PATH is not set");
}

fairplan::scenario_document load(std::string const& given) {
    std::string const path = scenario_path(given);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw invalid_document("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    fairplan::parse_result result = fairplan::parse_scenario(buf.str());
    if (!result.ok()) {
        for (auto const& e : result.errors) {
            std::cerr << path << ":" << fairplan::to_string(e) << "\n";
        }
        throw invalid_document(std::to_string(result.errors.size()) + " error(s) in " + path);
    }
    return std::move(*result.document);
}

void write_output(std::string const& text, std::string const& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text)) {
        throw usage_error("cannot write " + out_path);
    }
}

std::string pick_scenario(fairplan::scenario_document const& doc, std::string const& requested) {
    if (!requested.empty()) {
        if (!doc.scenarios.contains(requested)) {
            throw invalid_document("no scenario named '" + requested + "'");
        }
        return requested;
    }
    if (doc.scenarios.contains("FS+")) {
        return "FS+";
    }
    if (doc.scenarios.empty()) {
        throw invalid_document("document defines no scenarios");
    }
    return doc.scenarios.begin()->first;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Resource planning for scenario documents"};
    app.require_subcommand(1);

    std::string file;
    std::string format_name = "markdown";
    std::string out_path;
    std::string table_name;
    std::string scenario_name;
    int from_year = 2028;
    int to_year = 2040;
    bool with_archive = false;

    std::vector<std::string> const formats{"csv", "json", "markdown"};
    std::vector<std::string> tables;
    for (auto k : fairplan::all_table_kinds) {
        tables.emplace_back(fairplan::to_string(k));
    }

    auto* validate = app.add_subcommand("validate", "Parse and validate a scenario document");
    validate->add_option("file", file, "Scenario document (default: $FAIRPLAN_SCENARIO_PATH)");

    auto* tables_cmd = app.add_subcommand("tables", "Derived tables");
    tables_cmd->add_option("file", file, "Scenario document");
    tables_cmd->add_option("--table", table_name, "Table to print")->required()->check(CLI::IsMember(tables));
    tables_cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember(formats));
    tables_cmd->add_option("--out", out_path, "Write to file instead of stdout");

    auto* timeline = app.add_subcommand("timeline", "Disk and archive usage per year");
    timeline->add_option("file", file, "Scenario document");
    timeline->add_option("--from", from_year, "First year");
    timeline->add_option("--to", to_year, "Last year");
    timeline->add_flag("--archive", with_archive, "Include the cumulative archive");
    timeline->add_option("--scenario", scenario_name, "Scenario name (default FS+)");
    timeline->add_option("--format", format_name, "Output format")->check(CLI::IsMember(formats));
    timeline->add_option("--out", out_path, "Write to file instead of stdout");

    auto* aggregate = app.add_subcommand("aggregate", "Compute-class aggregation and Tier0 estimate");
    aggregate->add_option("file", file, "Scenario document");
    aggregate->add_option("--scenario", scenario_name, "Scenario name (default FS+)");
    aggregate->add_option("--format", format_name, "Output format")->check(CLI::IsMember(formats));
    aggregate->add_option("--out", out_path, "Write to file instead of stdout");

    auto* report_cmd = app.add_subcommand("report", "Full report");
    report_cmd->add_option("file", file, "Scenario document");
    report_cmd->add_option("--format", format_name, "Output format")->required()->check(CLI::IsMember(formats));
    report_cmd->add_option("--out", out_path, "Output file")->required();
    report_cmd->add_option("--from", from_year, "First timeline year");
    report_cmd->add_option("--to", to_year, "Last timeline year");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        fairplan::scenario_document const doc = load(file);
        fairplan::report_format const format = fairplan::parse_report_format(format_name);
        fairplan::year_range const horizon{from_year, to_year};
        if ((timeline->parsed() || report_cmd->parsed()) && horizon.size() <= 0) {
            throw usage_error("--from must not exceed --to");
        }

        if (validate->parsed()) {
            std::cout << "ok: " << doc.experiments.size() << " experiments, " << doc.scenarios.size()
                      << " scenarios\n";
            return exit_ok;
        }

        fairplan::report r;
        if (tables_cmd->parsed()) {
            r.tables = fairplan::build_tables(doc, fairplan::parse_table_kind(table_name));
        } else if (timeline->parsed()) {
            r.series = fairplan::timeline_series(doc, pick_scenario(doc, scenario_name), horizon, with_archive);
        } else if (aggregate->parsed()) {
            r.tables = fairplan::aggregate_tables(doc, pick_scenario(doc, scenario_name));
        } else {
            r = fairplan::full_report(doc, horizon);
        }
        write_output(fairplan::emit_report(r, format), out_path);
        return exit_ok;
    } catch (usage_error const& e) {
        std::cerr << "fairplan: " << e.what() << "\n";
        return exit_usage;
    } catch (invalid_document const& e) {
        std::cerr << "fairplan: " << e.what() << "\n";
        return exit_invalid;
    } catch (fairplan::validation_error const& e) {
        std::cerr << "fairplan: invalid input: " << e.what() << "\n";
        return exit_invalid;
    } catch (std::exception const& e) {
        std::cerr << "fairplan: " << e.what() << "\n";
        return exit_computation;
    }
}
