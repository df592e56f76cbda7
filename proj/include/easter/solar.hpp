/* solar.hpp: truncated Newcomb solar theory and the vernal equinox search */
#pragma once

namespace easter {

// Epoch of the solar series: JD 2415020.0 = 1900 January 0.5 UT.
inline constexpr double kSolarEpochJd = 2415020.0;
inline constexpr double kDaysPerJulianCentury = 36525.0;

// The four solar angles at one instant, all in degrees.  mean_longitude and
// mean_anomaly grow without bound (not reduced mod 360);
// true_longitude = mean_longitude + center by construction.
struct SolarAngles {
    double mean_longitude;
    double mean_anomaly;
    double center;
    double true_longitude;
};

// Julian centuries from the series epoch.
double centuries_from_jd(double jd);

SolarAngles solar_angles(double t);

// Reduce an angle to (-180, +180] degrees.
double wrap_degrees(double angle);

// Instant (JD, UT) when the true solar longitude crosses 0 degrees near
// 21 March of the given year.  Bisection on [21 March - 5d, 21 March + 5d]
// down to a 1e-6 day bracket.  Throws std::runtime_error if the bracket
// fails to straddle the root (cannot happen for supported years).
double find_vernal_equinox(int year);

}  // namespace easter
