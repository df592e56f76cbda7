/* solar.cpp: truncated Newcomb solar theory and the vernal equinox search */

#include "easter/solar.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "easter/calendar.hpp"

namespace easter {

namespace {

constexpr double kBracketHalfWidth = 5.0;     // days around 21 March
constexpr double kBisectionTolerance = 1e-6;  // days

double radians(double degrees)
{
    return degrees * std::numbers::pi / 180.0;
}

}  // namespace

double centuries_from_jd(double jd)
{
    return (jd - kSolarEpochJd) / kDaysPerJulianCentury;
}

SolarAngles solar_angles(double t)
{
    SolarAngles a;
    a.mean_longitude = 279.69668 + 36000.76892 * t + 0.0003025 * t * t;
    a.mean_anomaly = 358.47583 + 35999.04975 * t - 0.000150 * t * t - 0.0000033 * t * t * t;
    // The anomaly is reduced before the sines to keep precision at large t;
    // the multiples 2M and 3M stay exact under a 360-degree shift.
    const double m = radians(wrap_degrees(a.mean_anomaly));
    a.center = (1.919460 - 0.004789 * t - 0.000014 * t * t) * std::sin(m) +
               (0.020094 - 0.0001 * t) * std::sin(2.0 * m) + 0.000293 * std::sin(3.0 * m);
    a.true_longitude = a.mean_longitude + a.center;
    return a;
}

double wrap_degrees(double angle)
{
    double r = std::fmod(angle, 360.0);
    if (r > 180.0)
        r -= 360.0;
    else if (r <= -180.0)
        r += 360.0;
    return r;
}

double find_vernal_equinox(int year)
{
    const double jj_0 = date_to_jd({year, 3, 21, CalendarSystem::gregorian});
    const auto longitude = [](double jd) {
        return wrap_degrees(solar_angles(centuries_from_jd(jd)).true_longitude);
    };

    double lo = jj_0 - kBracketHalfWidth;
    double hi = jj_0 + kBracketHalfWidth;
    if (!(longitude(lo) < 0.0 && longitude(hi) > 0.0))
        throw std::runtime_error("find_vernal_equinox: bracket does not straddle the root");

    while (hi - lo > kBisectionTolerance) {
        const double mid = 0.5 * (lo + hi);
        if (longitude(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace easter
