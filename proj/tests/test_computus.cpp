/* test_computus.cpp: classical computus tests */

#include <stdexcept>

#include "doctest.h"
#include "easter/calendar.hpp"
#include "easter/computus.hpp"

using namespace easter;

namespace {
const CalendarSystem kG = CalendarSystem::gregorian;
}

TEST_CASE("catholic_easter: reference years")
{
    CHECK(catholic_easter(1994) == CalendarDate{1994, 4, 3, kG});
    CHECK(catholic_easter(2008) == CalendarDate{2008, 3, 23, kG});
    CHECK(catholic_easter(2038) == CalendarDate{2038, 4, 25, kG});
    CHECK_THROWS_AS(catholic_easter(1582), std::invalid_argument);
}

TEST_CASE("orthodox_easter: reference years")
{
    CHECK(orthodox_easter(1994) == CalendarDate{1994, 5, 1, kG});
    CHECK(orthodox_easter(1956) == CalendarDate{1956, 5, 6, kG});
    CHECK(orthodox_easter(2010) == CalendarDate{2010, 4, 4, kG});
    CHECK_THROWS_AS(orthodox_easter(1582), std::invalid_argument);
}

TEST_CASE("easter_result: bundled differences")
{
    const EasterResult r1994 = easter_result(1994);
    CHECK(r1994.astronomical == CalendarDate{1994, 3, 27, kG});
    CHECK(r1994.catholic == CalendarDate{1994, 4, 3, kG});
    CHECK(r1994.orthodox == CalendarDate{1994, 5, 1, kG});
    CHECK(r1994.astro_minus_catholic_days == -7);
    CHECK(r1994.astro_minus_orthodox_days == -35);

    const EasterResult r2010 = easter_result(2010);
    CHECK(r2010.astronomical == r2010.catholic);
    CHECK(r2010.astronomical == r2010.orthodox);
    CHECK(r2010.astro_minus_catholic_days == 0);

    const EasterResult r1997 = easter_result(1997);
    CHECK(r1997.astronomical == CalendarDate{1997, 4, 27, kG});
    CHECK(r1997.catholic == CalendarDate{1997, 3, 30, kG});
    CHECK(r1997.astro_minus_catholic_days == 28);
}

TEST_CASE("easter_result: dates in spring, differences consistent with JDs")
{
    for (int year = 1583; year <= 3000; year += 29) {
        const EasterResult r = easter_result(year);
        for (const CalendarDate& d : {r.orthodox, r.catholic, r.astronomical}) {
            CHECK(d.year == year);
            CHECK(d.month >= 3);
            CHECK(d.month <= 5);
        }
        CHECK(date_to_jd(r.astronomical) - date_to_jd(r.catholic) ==
              r.astro_minus_catholic_days);
        CHECK(date_to_jd(r.astronomical) - date_to_jd(r.orthodox) ==
              r.astro_minus_orthodox_days);
    }
}

TEST_CASE("computus: both churches land on Sunday, inside the classical windows")
{
    for (int year = 1583; year <= 3000; year += 13) {
        const CalendarDate c = catholic_easter(year);
        CHECK(day_of_week(date_to_jd(c)) == 0);
        CHECK(date_to_jd(c) >= date_to_jd({year, 3, 22, kG}));
        CHECK(date_to_jd(c) <= date_to_jd({year, 4, 25, kG}));
    }
    for (int year = 1900; year <= 2099; year += 7) {
        const CalendarDate o = orthodox_easter(year);
        CHECK(day_of_week(date_to_jd(o)) == 0);
        CHECK(date_to_jd(o) >= date_to_jd({year, 4, 4, kG}));
        CHECK(date_to_jd(o) <= date_to_jd({year, 5, 8, kG}));
    }
}

TEST_CASE("calendar gap: the JD route adds exactly 13 days across 1900-2099")
{
    for (int year = 1900; year <= 2099; year += 11) {
        const double julian_march1 = date_to_jd({year, 3, 1, CalendarSystem::julian});
        const double gregorian_march1 = date_to_jd({year, 3, 1, kG});
        CHECK(julian_march1 - gregorian_march1 == 13.0);
    }
}
