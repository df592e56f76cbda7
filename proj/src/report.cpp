/* report.cpp: range tables, discrepancy statistics, golden fixture verification */

#include "easter/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "easter/astronomical.hpp"
#include "easter/computus.hpp"

namespace easter {

namespace {

const char* const kMonthNames[12] = {"January", "February", "March",     "April",
                                     "May",     "June",     "July",      "August",
                                     "September", "October", "November", "December"};

constexpr double kKnifeEdgeWindow = 0.05;  // days

std::string format_double(const char* fmt, double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, value);
    return buf;
}

void require_range(int from_year, int to_year)
{
    if (from_year < kMinYear || to_year > kMaxYear || from_year > to_year)
        throw std::invalid_argument("year range " + std::to_string(from_year) + ".." +
                                    std::to_string(to_year) + " outside supported " +
                                    std::to_string(kMinYear) + "-" + std::to_string(kMaxYear));
}

// "1994-03-27" -> date; returns false on any syntax or validity problem.
bool parse_iso_date(const std::string& text, CalendarDate& out)
{
    int y = 0, m = 0, d = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%d-%d-%d%c", &y, &m, &d, &tail) != 3)
        return false;
    out = {y, m, d, CalendarSystem::gregorian};
    return is_valid_date(out);
}

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ','))
        fields.push_back(field);
    return fields;
}

}  // namespace

ComparisonStats compute_stats(int from_year, int to_year)
{
    require_range(from_year, to_year);
    ComparisonStats stats;
    for (int year = from_year; year <= to_year; ++year) {
        const EasterResult r = easter_result(year);
        ++stats.total_years;
        ++stats.histogram[r.astro_minus_catholic_days];
    }
    const auto zero = stats.histogram.find(0);
    stats.differing_years =
        stats.total_years - (zero == stats.histogram.end() ? 0 : zero->second);
    return stats;
}

std::string format_percent(int count, int total)
{
    const double percent = 100.0 * count / total;
    const double rounded = std::floor(percent * 10.0 + 0.5) / 10.0;
    return format_double("%.1f", rounded);
}

std::string format_day_month(const CalendarDate& date)
{
    return std::to_string(date.day) + " " + kMonthNames[date.month - 1];
}

std::string format_iso(const CalendarDate& date)
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", date.year, date.month, date.day);
    return buf;
}

std::string year_report(int year, bool trace)
{
    require_range(year, year);
    // one context per year; the trace lines and the printed date share it
    const PaschalContext ctx = paschal_context(year);
    const CalendarDate orthodox = orthodox_easter(year);
    const CalendarDate catholic = catholic_easter(year);

    std::ostringstream out;
    out << "year " << year << "\n";
    if (trace) {
        out << "  jj_0  = " << format_double("%.6f", ctx.jj_0) << "\n";
        out << "  jj_1j = " << format_double("%.6f", ctx.jj_1j) << "\n";
        out << "  jj_e  = " << format_double("%.6f", ctx.jj_e) << "\n";
        out << "  nf    = " << ctx.nf << "\n";
        out << "  f     = " << format_double("%.7f", ctx.f) << "\n";
        out << "  k     = " << ctx.k << "\n";
        out << "  jj_nm = " << format_double("%.6f", ctx.jj_nm_mean) << "\n";
        if (ctx.jj_nm != ctx.jj_nm_mean)
            out << "  jj_nm_paschal = " << format_double("%.6f", ctx.jj_nm) << "\n";
        out << "  z_a   = " << ctx.z_a << "\n";
        out << "  m_ac  = " << ctx.m_ac << "\n";
        out << "  z_p   = " << ctx.z_p << "\n";
        const double knife = (ctx.jj_nm_mean + 14.0) - ctx.jj_e;
        if (std::fabs(knife) < kKnifeEdgeWindow)
            out << "  warning: 14th day within " << format_double("%.4f", std::fabs(knife))
                << " day of the equinox; cycle choice is on a knife edge\n";
        const double march1 = date_to_jd({year, 3, 1, CalendarSystem::gregorian});
        const double offset = ctx.jj_nm_mean - march1;
        if (offset < -1.5 || offset > 31.0)
            out << "  note: mean New Moon lands " << format_double("%+.2f", offset)
                << " days from 1 March, outside the expected [-1.5, +31] window\n";
    }
    out << "  orthodox      " << format_day_month(orthodox) << "\n";
    out << "  catholic      " << format_day_month(catholic) << "\n";
    out << "  astronomical  " << format_day_month(ctx.easter) << "\n";
    return out.str();
}

std::string range_report(int from_year, int to_year, bool csv)
{
    require_range(from_year, to_year);
    std::ostringstream out;
    if (csv) {
        out << "year,orthodox,catholic,astronomical\n";
        for (int year = from_year; year <= to_year; ++year) {
            const EasterResult r = easter_result(year);
            out << year << ',' << format_iso(r.orthodox) << ',' << format_iso(r.catholic)
                << ',' << format_iso(r.astronomical) << "\n";
        }
    } else {
        char line[96];
        std::snprintf(line, sizeof line, "%-6s%-12s%-12s%s\n", "YEAR", "ORTHODOX",
                      "CATHOLIC", "ASTRONOMICAL");
        out << line;
        for (int year = from_year; year <= to_year; ++year) {
            const EasterResult r = easter_result(year);
            std::snprintf(line, sizeof line, "%-6d%-12s%-12s%s\n", year,
                          format_day_month(r.orthodox).c_str(),
                          format_day_month(r.catholic).c_str(),
                          format_day_month(r.astronomical).c_str());
            out << line;
        }
    }
    return out.str();
}

std::string stats_report(int from_year, int to_year)
{
    const ComparisonStats stats = compute_stats(from_year, to_year);
    std::ostringstream out;
    out << "years analyzed: " << stats.total_years << "\n";
    out << "differing years: " << stats.differing_years << " ("
        << format_percent(stats.differing_years, stats.total_years) << "%)\n";
    out << "difference histogram (astronomical minus catholic, days):\n";
    for (const auto& [diff, count] : stats.histogram) {
        char key[16];
        std::snprintf(key, sizeof key, "%+d", diff);
        out << "  " << (diff == 0 ? "0" : key) << ": " << count << " ("
            << format_percent(count, stats.total_years) << "%)\n";
    }
    return out.str();
}

std::vector<GoldenRow> load_fixture(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line))
        throw FixtureError("fixture is empty");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "year,orthodox,catholic,astronomical")
        throw FixtureError("fixture header mismatch: '" + line + "'");

    std::vector<GoldenRow> rows;
    int line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const std::vector<std::string> fields = split_csv(line);
        if (fields.size() != 4)
            throw FixtureError("fixture line " + std::to_string(line_number) +
                               ": expected 4 fields");
        GoldenRow row;
        try {
            row.year = std::stoi(fields[0]);
        } catch (const std::exception&) {
            throw FixtureError("fixture line " + std::to_string(line_number) + ": bad year '" +
                               fields[0] + "'");
        }
        if (row.year < kMinYear || row.year > kMaxYear)
            throw FixtureError("fixture line " + std::to_string(line_number) + ": year " +
                               std::to_string(row.year) + " out of supported range");
        if (!rows.empty() && row.year <= rows.back().year)
            throw FixtureError("fixture line " + std::to_string(line_number) +
                               ": years must ascend without repeats");
        if (!parse_iso_date(fields[1], row.orthodox) ||
            !parse_iso_date(fields[2], row.catholic) ||
            !parse_iso_date(fields[3], row.astronomical))
            throw FixtureError("fixture line " + std::to_string(line_number) +
                               ": malformed date");
        rows.push_back(row);
    }
    if (rows.empty())
        throw FixtureError("fixture has no data rows");
    return rows;
}

VerifyOutcome verify_golden(const std::string& fixture_path)
{
    std::ifstream in(fixture_path);
    if (!in)
        throw FixtureError("cannot open fixture '" + fixture_path + "'");
    const std::vector<GoldenRow> rows = load_fixture(in);

    VerifyOutcome outcome;
    outcome.total = static_cast<int>(rows.size()) * 3;
    std::ostringstream out;
    for (const GoldenRow& row : rows) {
        const EasterResult r = easter_result(row.year);
        const struct {
            const char* method;
            const CalendarDate& computed;
            const CalendarDate& listed;
        } cells[3] = {{"orthodox", r.orthodox, row.orthodox},
                      {"catholic", r.catholic, row.catholic},
                      {"astronomical", r.astronomical, row.astronomical}};
        for (const auto& cell : cells) {
            if (cell.computed == cell.listed) {
                ++outcome.matched;
            } else {
                out << "mismatch " << row.year << " " << cell.method << ": computed "
                    << format_iso(cell.computed) << ", fixture " << format_iso(cell.listed)
                    << "\n";
            }
        }
    }
    outcome.ok = outcome.matched == outcome.total;
    out << outcome.matched << "/" << outcome.total << " dates match\n";
    outcome.report = out.str();
    return outcome;
}

}  // namespace easter
