/* easter_main.cpp: command-line front end */

#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "easter/calendar.hpp"
#include "easter/report.hpp"

#ifndef EASTER_DEFAULT_FIXTURE
#define EASTER_DEFAULT_FIXTURE "data/easter_1950_2050.csv"
#endif

namespace {

// 0 success, 1 golden mismatch, 2 usage or range error, 3 fixture I/O error
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFixture = 3;

bool year_in_range(int year)
{
    return year >= easter::kMinYear && year <= easter::kMaxYear;
}

int usage_error(const std::string& message)
{
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

std::string default_fixture_path()
{
    if (std::filesystem::exists(EASTER_DEFAULT_FIXTURE))
        return EASTER_DEFAULT_FIXTURE;
    return "data/easter_1950_2050.csv";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Easter dates by the astronomical rule and the classical computus"};
    app.require_subcommand(1);

    int year = 0;
    bool trace = false;
    auto* cmd_year = app.add_subcommand("year", "easter dates for one year");
    cmd_year->add_option("year", year, "Gregorian year")->required();
    cmd_year->add_flag("--trace", trace, "print every intermediate quantity");

    int from_year = 0;
    int to_year = 0;
    std::string format = "table";
    auto* cmd_range = app.add_subcommand("range", "easter dates for a range of years");
    cmd_range->add_option("--from", from_year, "first year")->required();
    cmd_range->add_option("--to", to_year, "last year")->required();
    cmd_range->add_option("--format", format, "table or csv")
        ->check(CLI::IsMember({"table", "csv"}));

    auto* cmd_stats = app.add_subcommand("stats", "astronomical vs catholic discrepancies");
    cmd_stats->add_option("--from", from_year, "first year")->required();
    cmd_stats->add_option("--to", to_year, "last year")->required();

    std::string fixture_path = default_fixture_path();
    auto* cmd_verify = app.add_subcommand("verify", "recompute the golden fixture");
    cmd_verify->add_option("--fixture", fixture_path, "fixture CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_year->parsed()) {
            if (!year_in_range(year))
                return usage_error("year out of supported range " +
                                   std::to_string(easter::kMinYear) + "-" +
                                   std::to_string(easter::kMaxYear));
            std::cout << easter::year_report(year, trace);
            return kExitOk;
        }
        if (cmd_range->parsed() || cmd_stats->parsed()) {
            if (!year_in_range(from_year) || !year_in_range(to_year))
                return usage_error("year out of supported range " +
                                   std::to_string(easter::kMinYear) + "-" +
                                   std::to_string(easter::kMaxYear));
            if (from_year > to_year)
                return usage_error("--from must not exceed --to");
            std::cout << (cmd_range->parsed()
                              ? easter::range_report(from_year, to_year, format == "csv")
                              : easter::stats_report(from_year, to_year));
            return kExitOk;
        }
        // verify
        const easter::VerifyOutcome outcome = easter::verify_golden(fixture_path);
        std::cout << outcome.report;
        return outcome.ok ? kExitOk : kExitMismatch;
    } catch (const easter::FixtureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFixture;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
