/* astronomical.cpp: Easter from the equinox, mean moon and next-Sunday rule */

#include "easter/astronomical.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "easter/lunar.hpp"
#include "easter/solar.hpp"

namespace easter {

int catholic_hand(int year, int nf)
{
    const int c = year / 100;
    const int u = year % 100;
    int hand = static_cast<int>(euclidean_mod(u + u / 4 + c / 4 - 2LL * c, 7)) + 1;
    if (nf == 1)
        hand -= 1;  // consumed mod 7 downstream, so 0 needs no re-wrap
    return hand;
}

int next_sunday_on_or_after_offset(int day_of_year, int m_ac)
{
    return day_of_year + static_cast<int>(euclidean_mod(2LL - day_of_year - m_ac, 7));
}

int paschal_day_of_year(double jj_nm, int year)
{
    const double jj_1j = date_to_jd({year, 1, 1, CalendarSystem::gregorian});
    return static_cast<int>(std::floor(jj_nm - jj_1j)) + 1;
}

PaschalContext paschal_context(int year)
{
    if (year < kMinYear || year > kMaxYear)
        throw std::invalid_argument("year " + std::to_string(year) +
                                    " out of supported range " + std::to_string(kMinYear) +
                                    "-" + std::to_string(kMaxYear));

    PaschalContext ctx;
    ctx.year = year;
    ctx.nf = leap_indicator(year);
    ctx.jj_0 = date_to_jd({year, 3, 21, CalendarSystem::gregorian});
    ctx.jj_1j = date_to_jd({year, 1, 1, CalendarSystem::gregorian});
    ctx.jj_e = find_vernal_equinox(year);
    ctx.f = march_fraction(ctx.nf);
    ctx.k = first_lunation_after_march(year, ctx.f);
    ctx.jj_nm_mean = mean_new_moon(ctx.k);
    ctx.jj_nm = select_paschal_new_moon(year, ctx.jj_nm_mean);
    ctx.z_a = paschal_day_of_year(ctx.jj_nm, year);
    if (ctx.z_a < 60 || ctx.z_a > 366)
        throw std::runtime_error("paschal_context: Paschal New Moon day " +
                                 std::to_string(ctx.z_a) + " outside March-April window");
    ctx.century = year / 100;
    ctx.year_in_century = year % 100;
    ctx.m_ac = catholic_hand(year, ctx.nf);
    ctx.z_p = next_sunday_on_or_after_offset(ctx.z_a + 14, ctx.m_ac);
    ctx.easter = day_of_year_to_date(ctx.z_p, year);
    return ctx;
}

CalendarDate astronomical_easter(int year)
{
    return paschal_context(year).easter;
}

}  // namespace easter
