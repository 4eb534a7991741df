#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace genharm::detail {

// Root of a function that is positive just right of lo and negative just left of hi
// (lo and hi are poles or bracket ends and are never evaluated). Bisection until the
// bracket is below rel_tol relative width, then guarded Newton polish with df.
template <class F, class DF>
double decreasing_root(F&& f, DF&& df, double lo, double hi, double rel_tol = 1e-14)
{
    for (int it = 0; it < 2000; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const double v = f(mid);
        if (v == 0.0)
            return mid;
        if (v > 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= rel_tol * std::max(std::abs(lo), std::abs(hi)))
            break;
    }
    double x = 0.5 * (lo + hi);
    double fx = f(x);
    for (int it = 0; it < 3 && fx != 0.0; ++it) {
        const double d = df(x);
        if (d == 0.0 || !std::isfinite(d))
            break;
        const double y = x - fx / d;
        if (!(y > lo && y < hi))
            break;
        const double fy = f(y);
        if (!(std::abs(fy) < std::abs(fx)))
            break;
        x = y;
        fx = fy;
    }
    return x;
}

} // namespace genharm::detail
