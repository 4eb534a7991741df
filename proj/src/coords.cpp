#include "genharm/coords.hpp"

#include "genharm/errors.hpp"
#include "genharm/roots.hpp"

#include <cmath>
#include <string>

namespace genharm {

namespace {

void check_singularities(std::span<const double> a)
{
    if (a.size() < 2)
        throw std::invalid_argument("need at least two singularities");
    for (std::size_t j = 1; j < a.size(); ++j)
        if (!(a[j - 1] < a[j]))
            throw std::invalid_argument("singularities must be strictly increasing");
}

void check_cone_point(std::span<const double> x, std::span<const double> a)
{
    check_singularities(a);
    if (x.size() != a.size())
        throw DimensionMismatch("point and singularities differ in dimension");
    for (std::size_t j = 0; j < x.size(); ++j)
        if (!(x[j] > kBoundaryThreshold))
            throw DegeneratePoint("coordinate x_" + std::to_string(j)
                                  + " is on or outside the boundary of the positive cone");
}

// sum_j w_j / (theta - a_j) - shift and its derivative
struct Secular {
    std::span<const double> w;
    std::span<const double> a;
    double shift;

    double operator()(double theta) const
    {
        double v = -shift;
        for (std::size_t j = 0; j < a.size(); ++j)
            v += w[j] / (theta - a[j]);
        return v;
    }

    double derivative(double theta) const
    {
        double v = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j)
            v -= w[j] / ((theta - a[j]) * (theta - a[j]));
        return v;
    }
};

double interval_root(const Secular& f, double lo, double hi)
{
    return detail::decreasing_root([&](double t) { return f(t); },
                                   [&](double t) { return f.derivative(t); }, lo, hi);
}

// x_j^2 = scale * prod_i (roots_i - a_j) / prod_{i != j} (a_i - a_j)
std::vector<double> invert_secular(std::span<const double> roots, std::span<const double> a,
                                   double scale)
{
    std::vector<double> x(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        double num = 1.0;
        for (double r : roots)
            num *= r - a[j];
        double den = 1.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i != j)
                den *= a[i] - a[j];
        const double sq = scale * num / den;
        if (!(sq > 0.0))
            throw OutOfDomain("coordinates map outside the open positive cone");
        x[j] = std::sqrt(sq);
    }
    return x;
}

} // namespace

EllipsoidalCoords ellipsoidal_from_cartesian(std::span<const double> x, std::span<const double> a)
{
    check_cone_point(x, a);
    std::vector<double> w(x.size());
    double norm2 = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        w[j] = x[j] * x[j];
        norm2 += w[j];
    }
    const Secular f{w, a, 1.0};
    const std::size_t k = a.size() - 1;
    EllipsoidalCoords out;
    out.t.resize(k + 1);
    double reach = norm2 + 1.0;
    while (!(f(a[k] + reach) < 0.0))
        reach *= 2.0;
    out.t[0] = interval_root(f, a[k], a[k] + reach);
    for (std::size_t i = 1; i <= k; ++i)
        out.t[i] = interval_root(f, a[i - 1], a[i]);
    return out;
}

std::vector<double> cartesian_from_ellipsoidal(const EllipsoidalCoords& c, std::span<const double> a)
{
    check_singularities(a);
    const std::size_t k = a.size() - 1;
    if (c.t.size() != k + 1)
        throw DimensionMismatch("need k + 1 ellipsoidal coordinates");
    if (!(c.t[0] > a[k]))
        throw OutOfDomain("t_0 must exceed a_k");
    for (std::size_t i = 1; i <= k; ++i)
        if (!(c.t[i] > a[i - 1] && c.t[i] < a[i]))
            throw OutOfDomain("t_" + std::to_string(i) + " outside (a_{i-1}, a_i)");
    return invert_secular(c.t, a, 1.0);
}

SpheroConalCoords spheroconal_from_cartesian(std::span<const double> x, std::span<const double> a)
{
    check_cone_point(x, a);
    double norm2 = 0.0;
    for (double v : x)
        norm2 += v * v;
    SpheroConalCoords out;
    out.r = std::sqrt(norm2);
    std::vector<double> w(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        w[j] = x[j] * x[j] / norm2;
    const Secular f{w, a, 0.0};
    const std::size_t k = a.size() - 1;
    out.s.resize(k);
    for (std::size_t i = 1; i <= k; ++i)
        out.s[i - 1] = interval_root(f, a[i - 1], a[i]);
    return out;
}

std::vector<double> cartesian_from_spheroconal(const SpheroConalCoords& c, std::span<const double> a)
{
    check_singularities(a);
    const std::size_t k = a.size() - 1;
    if (c.s.size() != k)
        throw DimensionMismatch("need k sphero-conal angles");
    if (!(c.r > 0.0))
        throw OutOfDomain("radius must be positive");
    for (std::size_t i = 1; i <= k; ++i)
        if (!(c.s[i - 1] > a[i - 1] && c.s[i - 1] < a[i]))
            throw OutOfDomain("s_" + std::to_string(i) + " outside (a_{i-1}, a_i)");
    std::vector<double> x = invert_secular(c.s, a, 1.0);
    for (double& v : x)
        v *= c.r;
    return x;
}

} // namespace genharm
