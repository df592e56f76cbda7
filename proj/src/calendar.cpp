/* calendar.cpp: Gregorian/Julian calendar arithmetic and Julian Day conversions */

#include "easter/calendar.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace easter {

namespace {

// Day numbers here are astronomical JDN (noon-based); 0h UT of the civil day
// is JDN - 0.5.  Integer divisions below truncate, which equals floor for the
// always-positive operands produced in the supported year window.

long long gregorian_jdn(int year, int month, int day)
{
    const long long a = (14 - month) / 12;
    const long long y = year + 4800 - a;
    const long long m = month + 12 * a - 3;
    return day + (153 * m + 2) / 5 + 365 * y + y / 4 - y / 100 + y / 400 - 32045;
}

long long julian_jdn(int year, int month, int day)
{
    const long long a = (14 - month) / 12;
    const long long y = year + 4800 - a;
    const long long m = month + 12 * a - 3;
    return day + (153 * m + 2) / 5 + 365 * y + y / 4 - 32083;
}

CalendarDate gregorian_from_jdn(long long jdn)
{
    const long long a = jdn + 32044;
    const long long b = (4 * a + 3) / 146097;
    const long long c = a - 146097 * b / 4;
    const long long d = (4 * c + 3) / 1461;
    const long long e = c - 1461 * d / 4;
    const long long m = (5 * e + 2) / 153;
    CalendarDate date;
    date.day = static_cast<int>(e - (153 * m + 2) / 5 + 1);
    date.month = static_cast<int>(m + 3 - 12 * (m / 10));
    date.year = static_cast<int>(100 * b + d - 4800 + m / 10);
    date.system = CalendarSystem::gregorian;
    return date;
}

CalendarDate julian_from_jdn(long long jdn)
{
    const long long c = jdn + 32082;
    const long long d = (4 * c + 3) / 1461;
    const long long e = c - 1461 * d / 4;
    const long long m = (5 * e + 2) / 153;
    CalendarDate date;
    date.day = static_cast<int>(e - (153 * m + 2) / 5 + 1);
    date.month = static_cast<int>(m + 3 - 12 * (m / 10));
    date.year = static_cast<int>(d - 4800 + m / 10);
    date.system = CalendarSystem::julian;
    return date;
}

}  // namespace

long long euclidean_mod(long long x, long long y)
{
    if (y <= 0)
        throw std::invalid_argument("euclidean_mod: modulus must be positive");
    long long r = x % y;
    if (r < 0)
        r += y;
    return r;
}

int leap_indicator(int year)
{
    if (year % 400 == 0)
        return 1;
    if (year % 100 == 0)
        return 0;
    return year % 4 == 0 ? 1 : 0;
}

int days_in_month(int year, int month, CalendarSystem system)
{
    static const int lengths[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12)
        throw std::invalid_argument("days_in_month: month out of range");
    if (month == 2) {
        const int nf = system == CalendarSystem::gregorian ? leap_indicator(year)
                                                           : (year % 4 == 0 ? 1 : 0);
        return 28 + nf;
    }
    return lengths[month - 1];
}

bool is_valid_date(const CalendarDate& date)
{
    if (date.year < 1500 || date.year > 3100)
        return false;
    if (date.month < 1 || date.month > 12)
        return false;
    return date.day >= 1 && date.day <= days_in_month(date.year, date.month, date.system);
}

double date_to_jd(const CalendarDate& date, double fraction_of_day)
{
    if (!is_valid_date(date))
        throw std::invalid_argument("date_to_jd: invalid date " + std::to_string(date.year) +
                                    "-" + std::to_string(date.month) + "-" +
                                    std::to_string(date.day));
    if (!(fraction_of_day >= 0.0 && fraction_of_day < 1.0))
        throw std::invalid_argument("date_to_jd: fraction of day outside [0, 1)");
    const long long jdn = date.system == CalendarSystem::gregorian
                              ? gregorian_jdn(date.year, date.month, date.day)
                              : julian_jdn(date.year, date.month, date.day);
    return static_cast<double>(jdn) - 0.5 + fraction_of_day;
}

std::pair<CalendarDate, double> jd_to_date(double jd, CalendarSystem system)
{
    if (!(jd >= kMinJulianDay && jd < kMaxJulianDay))
        throw std::out_of_range("jd_to_date: JD outside supported window");
    const long long jdn = static_cast<long long>(std::floor(jd + 0.5));
    const double fraction = jd + 0.5 - static_cast<double>(jdn);
    const CalendarDate date = system == CalendarSystem::gregorian ? gregorian_from_jdn(jdn)
                                                                  : julian_from_jdn(jdn);
    return {date, fraction};
}

CalendarDate day_of_year_to_date(int day_of_year, int year)
{
    const int length = 365 + leap_indicator(year);
    if (day_of_year < 1 || day_of_year > length)
        throw std::invalid_argument("day_of_year_to_date: day " +
                                    std::to_string(day_of_year) + " outside 1.." +
                                    std::to_string(length));
    const double jd_jan1 = date_to_jd({year, 1, 1, CalendarSystem::gregorian});
    return jd_to_date(jd_jan1 + (day_of_year - 1), CalendarSystem::gregorian).first;
}

int day_of_week(double jd)
{
    return static_cast<int>(euclidean_mod(static_cast<long long>(std::floor(jd + 1.5)), 7));
}

}  // namespace easter
