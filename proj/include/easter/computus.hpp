/* computus.hpp: classical Gregorian and Julian Easter computus */
#pragma once

#include "easter/calendar.hpp"

namespace easter {

// One year's Easter by all three methods, dates in the Gregorian calendar.
// The day differences are signed JD differences at 0h UT.
struct EasterResult {
    int year = 0;
    CalendarDate orthodox;
    CalendarDate catholic;
    CalendarDate astronomical;
    int astro_minus_catholic_days = 0;
    int astro_minus_orthodox_days = 0;
};

// Gregorian computus.  Throws std::invalid_argument for years before 1583.
CalendarDate catholic_easter(int year);

// Julian computus, converted to the Gregorian calendar through the JD layer
// rather than a fixed day offset.  Throws std::invalid_argument before 1583.
CalendarDate orthodox_easter(int year);

EasterResult easter_result(int year);

}  // namespace easter
