/* computus.cpp: classical Gregorian and Julian Easter computus */

#include "easter/computus.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "easter/astronomical.hpp"

namespace easter {

namespace {

void require_computus_year(int year, const char* fn)
{
    if (year < 1583)
        throw std::invalid_argument(std::string(fn) + ": year " + std::to_string(year) +
                                    " precedes the Gregorian computus");
}

}  // namespace

CalendarDate catholic_easter(int year)
{
    require_computus_year(year, "catholic_easter");
    const int a = year % 19;
    const int b = year / 100;
    const int c = year % 100;
    const int d = b / 4;
    const int e = b % 4;
    const int f = (b + 8) / 25;
    const int g = (b - f + 1) / 3;
    const int h = (19 * a + b - d - g + 15) % 30;
    const int i = c / 4;
    const int k = c % 4;
    const int l = (32 + 2 * e + 2 * i - h - k) % 7;
    const int m = (a + 11 * h + 22 * l) / 451;
    const int n = h + l - 7 * m + 114;
    return {year, n / 31, n % 31 + 1, CalendarSystem::gregorian};
}

CalendarDate orthodox_easter(int year)
{
    require_computus_year(year, "orthodox_easter");
    const int a = year % 4;
    const int b = year % 7;
    const int c = year % 19;
    const int d = (19 * c + 15) % 30;
    const int e = (2 * a + 4 * b - d + 34) % 7;
    const int n = d + e + 114;
    const CalendarDate julian_date{year, n / 31, n % 31 + 1, CalendarSystem::julian};
    return jd_to_date(date_to_jd(julian_date), CalendarSystem::gregorian).first;
}

EasterResult easter_result(int year)
{
    EasterResult r;
    r.year = year;
    r.orthodox = orthodox_easter(year);
    r.catholic = catholic_easter(year);
    r.astronomical = astronomical_easter(year);
    const double jd_orthodox = date_to_jd(r.orthodox);
    const double jd_catholic = date_to_jd(r.catholic);
    const double jd_astronomical = date_to_jd(r.astronomical);
    r.astro_minus_catholic_days = static_cast<int>(std::lround(jd_astronomical - jd_catholic));
    r.astro_minus_orthodox_days = static_cast<int>(std::lround(jd_astronomical - jd_orthodox));
    return r;
}

}  // namespace easter
