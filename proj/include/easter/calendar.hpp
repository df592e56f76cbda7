/* calendar.hpp: Gregorian/Julian calendar arithmetic and Julian Day conversions */
#pragma once

#include <utility>

namespace easter {

enum class CalendarSystem { gregorian, julian };

struct CalendarDate {
    int year = 0;
    int month = 1;          // 1..12
    int day = 1;            // 1..31
    CalendarSystem system = CalendarSystem::gregorian;

    friend bool operator==(const CalendarDate&, const CalendarDate&) = default;
};

// Supported window of the continuous JD scale (civil years 1500..3100).
// Day boundaries at 0h UT fall on half-integers.
inline constexpr double kMinJulianDay = 2268923.5;   // Gregorian 1500-01-01, 0h UT
inline constexpr double kMaxJulianDay = 2853676.5;   // Gregorian 3101-01-01, 0h UT

// Year window accepted by the top-level Easter entry points.
inline constexpr int kMinYear = 1583;
inline constexpr int kMaxYear = 3000;

// Remainder in [0, y) regardless of the sign of x.  Throws std::invalid_argument
// for y <= 0.
long long euclidean_mod(long long x, long long y);

// 1 when February of the Gregorian year has 29 days, else 0.
int leap_indicator(int year);

int days_in_month(int year, int month, CalendarSystem system);
bool is_valid_date(const CalendarDate& date);

// JD at the given UT fraction of the civil day (0h UT maps to a half-integer).
// Throws std::invalid_argument for an invalid date or fraction outside [0, 1).
double date_to_jd(const CalendarDate& date, double fraction_of_day = 0.0);

// Inverse of date_to_jd in the requested calendar system; second member is the
// fraction of the civil day.  Throws std::out_of_range outside the JD window.
std::pair<CalendarDate, double> jd_to_date(double jd, CalendarSystem system);

// Gregorian date of the z-th day of the year, z in [1, 365 + leap_indicator].
CalendarDate day_of_year_to_date(int day_of_year, int year);

// Weekday of the civil day containing the instant, 0 = Sunday.
int day_of_week(double jd);

}  // namespace easter
