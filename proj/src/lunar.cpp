/* lunar.cpp: mean New Moon sequence and Paschal lunation selection */

#include "easter/lunar.hpp"

#include <cmath>
#include <stdexcept>

#include "easter/calendar.hpp"

namespace easter {

double march_fraction(int nf)
{
    if (nf != 0 && nf != 1)
        throw std::invalid_argument("march_fraction: leap indicator must be 0 or 1");
    return (59.0 + nf) / (365.0 + nf);
}

int first_lunation_after_march(int year, double f)
{
    return static_cast<int>(std::floor((year + f - 1900.0) * kLunationsPerYear)) + 1;
}

double mean_new_moon(int k)
{
    return kLunationEpochJd + kSynodicMonth * k;
}

double paschal_new_moon(double jj_nm, double jj_e)
{
    return jj_nm + 14.0 >= jj_e ? jj_nm : jj_nm + kSynodicMonth;
}

double select_paschal_new_moon(int year, double jj_nm)
{
    const double earliest_14th = date_to_jd({year, 3, 25, CalendarSystem::gregorian});
    return jj_nm + 14.0 >= earliest_14th ? jj_nm : jj_nm + kSynodicMonth;
}

}  // namespace easter
