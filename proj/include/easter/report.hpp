/* report.hpp: range tables, discrepancy statistics, golden fixture verification */
#pragma once

#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "easter/calendar.hpp"

namespace easter {

struct ComparisonStats {
    int total_years = 0;
    int differing_years = 0;                // years where astronomical != catholic
    std::map<int, int> histogram;           // astronomical minus catholic, days -> count
};

struct GoldenRow {
    int year = 0;
    CalendarDate orthodox;
    CalendarDate catholic;
    CalendarDate astronomical;
};

struct FixtureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerifyOutcome {
    bool ok = false;
    int matched = 0;
    int total = 0;
    std::string report;
};

ComparisonStats compute_stats(int from_year, int to_year);

// Percentage of count/total rounded half-up to one decimal, e.g. "20.8".
std::string format_percent(int count, int total);

std::string format_day_month(const CalendarDate& date);   // "27 March"
std::string format_iso(const CalendarDate& date);         // "1994-03-27"

// One year's dates; with trace, every intermediate quantity as "key = value"
// lines plus a warning when the 14th day sits within 0.05 day of the equinox.
std::string year_report(int year, bool trace);

// One row per year, ascending.  Table mode uses "D Month" dates; CSV mode
// uses the fixture schema (header "year,orthodox,catholic,astronomical",
// ISO dates), so its output is itself a loadable fixture.
std::string range_report(int from_year, int to_year, bool csv);

std::string stats_report(int from_year, int to_year);

// Parse a fixture stream: header line, then "year,iso,iso,iso" rows with
// unique ascending years in the supported range.  Throws FixtureError.
std::vector<GoldenRow> load_fixture(std::istream& in);

// Recompute all three methods for every fixture year and compare per cell.
// Throws FixtureError when the file is missing or malformed.
VerifyOutcome verify_golden(const std::string& fixture_path);

}  // namespace easter
