#include "genharm/dirichlet.hpp"

#include "genharm/errors.hpp"
#include "genharm/harmonics.hpp"
#include "genharm/parallel.hpp"
#include "genharm/roots.hpp"

#include <cmath>
#include <random>
#include <string>

namespace genharm {

Ellipsoid::Ellipsoid(std::vector<double> semi_axes) : b_(std::move(semi_axes))
{
    if (b_.size() < 2)
        throw std::invalid_argument("ellipsoid needs at least two semi-axes");
    for (std::size_t j = 0; j < b_.size(); ++j) {
        if (!(b_[j] > 0.0))
            throw std::invalid_argument("semi-axes must be positive");
        if (j > 0 && !(b_[j - 1] > b_[j]))
            throw std::invalid_argument("semi-axes must be strictly decreasing");
    }
}

double Ellipsoid::level(std::span<const double> x) const
{
    if (x.size() != b_.size())
        throw DimensionMismatch("point does not match the ellipsoid dimension");
    double s = 0.0;
    for (std::size_t j = 0; j < b_.size(); ++j)
        s += x[j] * x[j] / (b_[j] * b_[j]);
    return s;
}

std::vector<double> Ellipsoid::boundary_point(std::span<const double> y) const
{
    if (y.size() != b_.size())
        throw DimensionMismatch("point does not match the ellipsoid dimension");
    std::vector<double> x(b_.size());
    for (std::size_t j = 0; j < b_.size(); ++j)
        x[j] = b_[j] * y[j];
    return x;
}

MultiPoly Ellipsoid::pull_back(const MultiPoly& f) const
{
    return scale_variables(f, b_);
}

double default_omega(const Ellipsoid& ell)
{
    return ell.semi_axes().front() * ell.semi_axes().front();
}

DirichletBasis build_basis(const Ellipsoid& ell, const DunklWeights& w, double omega, int m_max,
                           const SolverOptions& opts, int threads)
{
    if (w.size() != ell.nvars())
        throw DimensionMismatch("weights do not match the ellipsoid dimension");
    if (m_max < 0)
        throw std::invalid_argument("m_max must be nonnegative");
    std::vector<double> a(ell.nvars());
    for (int j = 0; j < ell.nvars(); ++j)
        a[j] = omega - ell.semi_axes()[j] * ell.semi_axes()[j];
    EllipticParams params(a, w);

    std::vector<BasisMember> members = enumerate_basis(params, m_max, opts, threads);
    std::vector<DirichletEntry> entries(members.size(),
                                        DirichletEntry{members.front().quasi, MultiPoly(1),
                                                       MultiPoly(1), 0.0, 0.0});
    parallel_for(members.size(), threads, [&](std::size_t i) {
        auto& m = members[i];
        const double norm2 = sphere_inner_product(m.sphero_conal.poly, m.sphero_conal.poly, w);
        const double E_omega = m.quasi.eval(omega);
        if (!(E_omega > 0.0))
            throw std::logic_error("E(omega) must be positive for a_j = omega - b_j^2");
        entries[i] = DirichletEntry{m.quasi, m.ellipsoidal.poly, m.sphero_conal.poly,
                                    1.0 / std::sqrt(norm2), E_omega};
    });
    return DirichletBasis{ell, w, omega, std::move(params), m_max, std::move(entries)};
}

std::vector<double> expand_boundary(const MultiPoly& f, const DirichletBasis& basis)
{
    if (f.nvars() != basis.ellipsoid.nvars())
        throw DimensionMismatch("boundary data does not match the ellipsoid dimension");
    if (f.degree() > basis.m_max)
        throw DegreeTooHigh("boundary data has degree " + std::to_string(f.degree())
                            + " but the basis stops at " + std::to_string(basis.m_max));
    const MultiPoly fT = basis.ellipsoid.pull_back(f);
    std::vector<double> coeffs(basis.entries.size());
    for (std::size_t i = 0; i < basis.entries.size(); ++i) {
        const auto& e = basis.entries[i];
        coeffs[i] = e.norm_factor * sphere_inner_product(fT, e.G, basis.weights);
    }
    return coeffs;
}

MultiPoly synthesize(std::span<const double> coefficients, const DirichletBasis& basis)
{
    if (coefficients.size() != basis.entries.size())
        throw std::invalid_argument("coefficient vector does not match the basis");
    TermAccumulator acc(basis.ellipsoid.nvars());
    for (std::size_t i = 0; i < basis.entries.size(); ++i) {
        const auto& e = basis.entries[i];
        const double weight = coefficients[i] * e.norm_factor / e.E_omega;
        if (weight == 0.0)
            continue;
        for (const auto& [ex, c] : e.F.terms())
            acc.add(ex, weight * c);
    }
    return std::move(acc).finish();
}

MultiPoly solve(const MultiPoly& f, const DirichletBasis& basis)
{
    return synthesize(expand_boundary(f, basis), basis);
}

SolutionSample evaluate_solution(const MultiPoly& u, std::span<const double> x, const Ellipsoid& ell)
{
    SolutionSample s{eval(u, x), ell.level(x) <= 1.0, std::nullopt};
    double norm2 = 0.0;
    for (double v : x)
        norm2 += v * v;
    if (ell.level(x) < 1.0 && norm2 > 0.0) {
        const auto& b = ell.semi_axes();
        const double bk2 = b.back() * b.back();
        // g(delta) = 1 - sum x_j^2/(b_j^2 - delta) decreases from g(0) > 0 to -inf at b_k^2
        auto g = [&](double d) {
            double v = 1.0;
            for (std::size_t j = 0; j < b.size(); ++j)
                v -= x[j] * x[j] / (b[j] * b[j] - d);
            return v;
        };
        auto dg = [&](double d) {
            double v = 0.0;
            for (std::size_t j = 0; j < b.size(); ++j)
                v -= x[j] * x[j] / ((b[j] * b[j] - d) * (b[j] * b[j] - d));
            return v;
        };
        s.shell_delta = detail::decreasing_root(g, dg, 0.0, bk2);
    }
    return s;
}

double boundary_residual(const MultiPoly& u, const MultiPoly& f, const Ellipsoid& ell,
                         int samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    double worst = 0.0;
    std::vector<double> y(ell.nvars());
    for (int s = 0; s < samples; ++s) {
        double n2 = 0.0;
        for (double& v : y) {
            v = normal(rng);
            n2 += v * v;
        }
        for (double& v : y)
            v /= std::sqrt(n2);
        const auto x = ell.boundary_point(y);
        worst = std::max(worst, std::abs(eval(u, x) - eval(f, x)));
    }
    return worst;
}

} // namespace genharm
