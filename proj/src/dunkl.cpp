#include "genharm/dunkl.hpp"

#include "genharm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace genharm {

DunklWeights::DunklWeights(std::vector<double> alpha) : alpha_(std::move(alpha))
{
    if (alpha_.empty())
        throw std::invalid_argument("Dunkl weights must be non-empty");
    for (double a : alpha_)
        if (!(a > -0.5))
            throw std::invalid_argument("Dunkl weight " + std::to_string(a) + " is not > -1/2");
}

DunklWeights DunklWeights::zero(int nvars)
{
    return DunklWeights(std::vector<double>(nvars, 0.0));
}

double DunklWeights::sum() const
{
    double s = 0.0;
    for (double a : alpha_)
        s += a;
    return s;
}

double pochhammer(double x, int n)
{
    double p = 1.0;
    for (int i = 0; i < n; ++i)
        p *= x + i;
    return p;
}

double fundamental_exponent(const DunklWeights& w)
{
    const int k = w.size() - 1;
    return 0.5 * (1 - k) - w.sum();
}

namespace {

void check_weights(const MultiPoly& u, const DunklWeights& w)
{
    if (u.nvars() != w.size())
        throw DimensionMismatch("Dunkl weights do not match the number of variables");
}

// D_j x_j^m = factor * x_j^{m-1}
double monomial_factor(int m, double alpha)
{
    return (m % 2 == 0) ? m : m + 2.0 * alpha;
}

} // namespace

MultiPoly dunkl_derivative(const MultiPoly& u, int j, const DunklWeights& w)
{
    check_weights(u, w);
    if (j < 0 || j >= u.nvars())
        throw AxisOutOfRange("axis " + std::to_string(j) + " out of range");
    TermAccumulator acc(u.nvars());
    for (const auto& [e, c] : u.terms()) {
        if (e[j] == 0)
            continue;
        Exponent d = e;
        d[j] -= 1;
        acc.add(d, c * monomial_factor(e[j], w[j]));
    }
    return std::move(acc).finish();
}

MultiPoly weighted_dunkl_laplacian(const MultiPoly& u, std::span<const double> coeffs,
                                   const DunklWeights& w)
{
    check_weights(u, w);
    if (static_cast<int>(coeffs.size()) != u.nvars())
        throw DimensionMismatch("coefficient vector does not match the number of variables");
    TermAccumulator acc(u.nvars());
    for (const auto& [e, c] : u.terms()) {
        for (int j = 0; j < u.nvars(); ++j) {
            if (e[j] < 2 || coeffs[j] == 0.0)
                continue;
            Exponent d = e;
            d[j] -= 2;
            const double f = monomial_factor(e[j], w[j]) * monomial_factor(e[j] - 1, w[j]);
            acc.add(d, coeffs[j] * f * c);
        }
    }
    return std::move(acc).finish();
}

MultiPoly dunkl_laplacian(const MultiPoly& u, const DunklWeights& w)
{
    const std::vector<double> ones(u.nvars(), 1.0);
    return weighted_dunkl_laplacian(u, ones, w);
}

MultiPoly apply_dunkl_poly(const MultiPoly& f, const MultiPoly& g, const DunklWeights& w)
{
    if (f.nvars() != g.nvars())
        throw DimensionMismatch("operator and operand have different numbers of variables");
    check_weights(g, w);
    TermAccumulator acc(g.nvars());
    for (const auto& [e, c] : f.terms()) {
        MultiPoly v = g;
        for (int j = 0; j < g.nvars() && !v.is_zero(); ++j)
            for (int q = 0; q < e[j] && !v.is_zero(); ++q)
                v = dunkl_derivative(v, j, w);
        for (const auto& [ev, cv] : v.terms())
            acc.add(ev, c * cv);
    }
    return std::move(acc).finish();
}

RadialExpansion::RadialExpansion(int nvars, double gamma_base)
    : nvars_(nvars), gamma_base_(gamma_base)
{
}

void RadialExpansion::add_term(int shift, const MultiPoly& h)
{
    if (h.nvars() != nvars_)
        throw DimensionMismatch("radial term has wrong number of variables");
    if (!h.is_homogeneous())
        throw std::invalid_argument("radial expansion terms must be homogeneous");
    if (h.is_zero())
        return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), shift,
                               [](const RadialTerm& t, int s) { return t.shift < s; });
    if (it == terms_.end() || it->shift != shift) {
        terms_.insert(it, RadialTerm{shift, h});
        return;
    }
    MultiPoly merged = add(it->h, h);
    if (merged.is_zero()) {
        terms_.erase(it);
        return;
    }
    if (!merged.is_homogeneous())
        throw std::invalid_argument("merging radial terms of equal shift but different degree");
    it->h = std::move(merged);
}

double RadialExpansion::eval(std::span<const double> x) const
{
    double r2 = 0.0;
    for (double v : x)
        r2 += v * v;
    double sum = 0.0;
    for (const auto& t : terms_)
        sum += std::pow(r2, gamma_base_ + t.shift) * genharm::eval(t.h, x);
    return sum;
}

RadialExpansion dunkl_on_radial_power(const MultiPoly& f_m, double gamma, const DunklWeights& w)
{
    check_weights(f_m, w);
    if (!f_m.is_homogeneous())
        throw std::invalid_argument("dunkl_on_radial_power needs a homogeneous polynomial");
    RadialExpansion out(f_m.nvars(), gamma);
    if (f_m.is_zero())
        return out;
    const int m = f_m.degree();
    MultiPoly lap = f_m;
    double factorial = 1.0;
    for (int j = 0; j <= m && !lap.is_zero(); ++j) {
        if (j > 0) {
            lap = dunkl_laplacian(lap, w);
            factorial *= j;
        }
        const int q = m - j;
        const double coef = std::ldexp(1.0, m - 2 * j) * ((q % 2) ? -1.0 : 1.0)
                            * pochhammer(-gamma, q) / factorial;
        if (coef != 0.0 && !lap.is_zero())
            out.add_term(j - m, scale(lap, coef));
    }
    return out;
}

RadialExpansion laplacian_of_radial(const RadialExpansion& e, const DunklWeights& w)
{
    const int k = e.nvars() - 1;
    const double two_abs_alpha = 2.0 * w.sum();
    RadialExpansion out(e.nvars(), e.gamma_base());
    for (const auto& t : e.terms()) {
        if (!t.h.is_homogeneous())
            throw std::invalid_argument("radial expansion terms must be homogeneous");
        const double two_s = 2.0 * (e.gamma_base() + t.shift);
        const int d = t.h.degree();
        double inner = two_s + 2.0 * d + (k - 1) + two_abs_alpha;
        const double inner_scale = std::abs(two_s) + 2.0 * d + std::abs(k - 1.0) + std::abs(two_abs_alpha);
        if (std::abs(inner) <= kZeroThreshold * inner_scale)
            inner = 0.0;
        const double radial_coef = two_s * inner;
        if (radial_coef != 0.0)
            out.add_term(t.shift - 1, scale(t.h, radial_coef));
        out.add_term(t.shift, dunkl_laplacian(t.h, w));
    }
    return out;
}

namespace numeric {

namespace {

double checked_step(std::span<const double> x, int j, double h)
{
    if (std::abs(x[j]) <= 1e-12)
        throw DegeneratePoint("finite-difference Dunkl operator evaluated on a coordinate plane");
    return std::min(h, 0.25 * std::abs(x[j]));
}

struct AxisDerivatives {
    double first;
    double second;
};

AxisDerivatives central_differences(const ScalarField& u, std::span<const double> x, int j,
                                    double h, double u0)
{
    std::vector<double> y(x.begin(), x.end());
    y[j] = x[j] + h;
    const double up = u(y);
    y[j] = x[j] - h;
    const double um = u(y);
    return {(up - um) / (2.0 * h), (up - 2.0 * u0 + um) / (h * h)};
}

double reflected_value(const ScalarField& u, std::span<const double> x, int j)
{
    std::vector<double> y(x.begin(), x.end());
    y[j] = -x[j];
    return u(y);
}

} // namespace

double dunkl_derivative(const ScalarField& u, std::span<const double> x, int j,
                        const DunklWeights& w, double h)
{
    h = checked_step(x, j, h);
    const double u0 = u(x);
    const double d1 = central_differences(u, x, j, h, u0).first;
    const double d2 = central_differences(u, x, j, 0.5 * h, u0).first;
    const double du = d2 + (d2 - d1) / 3.0;
    return du + w[j] * (u0 - reflected_value(u, x, j)) / x[j];
}

double weighted_dunkl_laplacian(const ScalarField& u, std::span<const double> x,
                                std::span<const double> coeffs, const DunklWeights& w, double h)
{
    if (static_cast<int>(x.size()) != w.size() || coeffs.size() != x.size())
        throw DimensionMismatch("point, coefficients and weights disagree in dimension");
    const double u0 = u(x);
    double sum = 0.0;
    for (int j = 0; j < w.size(); ++j) {
        if (coeffs[j] == 0.0)
            continue;
        const double hj = checked_step(x, j, h);
        const auto coarse = central_differences(u, x, j, hj, u0);
        const auto fine = central_differences(u, x, j, 0.5 * hj, u0);
        const double du = fine.first + (fine.first - coarse.first) / 3.0;
        const double d2u = fine.second + (fine.second - coarse.second) / 3.0;
        const double xj = x[j];
        const double term = d2u + 2.0 * w[j] / xj * du
                            - w[j] / (xj * xj) * (u0 - reflected_value(u, x, j));
        sum += coeffs[j] * term;
    }
    return sum;
}

double dunkl_laplacian(const ScalarField& u, std::span<const double> x, const DunklWeights& w,
                       double h)
{
    const std::vector<double> ones(x.size(), 1.0);
    return weighted_dunkl_laplacian(u, x, ones, w, h);
}

} // namespace numeric

} // namespace genharm
