/* astronomical.hpp: Easter from the equinox, mean moon and next-Sunday rule */
#pragma once

#include "easter/calendar.hpp"

namespace easter {

// Every intermediate quantity of one year's computation, in evaluation order.
// The CLI trace prints these verbatim, so nothing is recomputed downstream.
struct PaschalContext {
    int year = 0;
    int nf = 0;                 // leap indicator
    double jj_0 = 0.0;          // 21 March 0h UT, centre of the equinox bracket
    double jj_1j = 0.0;         // 1 January 0h UT
    double jj_e = 0.0;          // vernal equinox instant
    double f = 0.0;             // year fraction at 1 March
    int k = 0;                  // lunation index
    double jj_nm_mean = 0.0;    // first mean New Moon after 1 March
    double jj_nm = 0.0;         // selected Paschal New Moon
    int z_a = 0;                // day of year of the Paschal New Moon
    int century = 0;            // year / 100
    int year_in_century = 0;    // year mod 100
    int m_ac = 0;               // hand of the year, 0..7
    int z_p = 0;                // day of year of Easter
    CalendarDate easter;
};

// Weekday index of the Gregorian year (the "hand of the year"), 1..7 for
// common years; leap years decrement it, so 0 can occur.  Only its residue
// mod 7 is ever consumed.
int catholic_hand(int year, int nf);

// First Sunday on or after the j-th day of a year with hand m_ac.
int next_sunday_on_or_after_offset(int day_of_year, int m_ac);

// Day of the year containing the instant jj_nm.
int paschal_day_of_year(double jj_nm, int year);

// Full computation for one year.  Throws std::invalid_argument outside
// [kMinYear, kMaxYear].
PaschalContext paschal_context(int year);

CalendarDate astronomical_easter(int year);

}  // namespace easter
