/*
 * dirichlet.hpp
 * -------------
 * Dirichlet problem for the Dunkl equation on the solid ellipsoid sum_j x_j^2/b_j^2 < 1
 * with polynomial boundary data f.
 *
 * With a_j = omega - b_j^2, the boundary is parameterized by T y = (b_0 y_0, .., b_k y_k)
 * on the unit sphere and F_{n,p}(T y) = E_{n,p}(omega) G_{n,p}(y). Expanding f o T in the
 * normalized sphero-conal harmonics e_{n,p} G_{n,p} gives the solution
 *
 *     u = sum f_{n,p} e_{n,p} / E_{n,p}(omega) F_{n,p},   f_{n,p} = <f o T, e G>_w,
 *
 * a finite sum because polynomial data of degree <= m restrict to harmonics of degree <= m.
 */
#pragma once

#include "genharm/dunkl.hpp"
#include "genharm/multipoly.hpp"
#include "genharm/stieltjes.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace genharm {

class Ellipsoid {
public:
    // Throws std::invalid_argument unless b_0 > b_1 > .. > b_k > 0, k >= 1.
    explicit Ellipsoid(std::vector<double> semi_axes);

    const std::vector<double>& semi_axes() const { return b_; }
    int nvars() const { return static_cast<int>(b_.size()); }

    // sum_j x_j^2 / b_j^2 (< 1 inside)
    double level(std::span<const double> x) const;
    // T y
    std::vector<double> boundary_point(std::span<const double> y) const;
    // f o T
    MultiPoly pull_back(const MultiPoly& f) const;

private:
    std::vector<double> b_;
};

struct DirichletEntry {
    StieltjesQuasiPoly quasi;
    MultiPoly F;
    MultiPoly G;
    double norm_factor;  // e_{n,p} = 1 / ||G||_w
    double E_omega;

    const HarmonicIndex& index() const { return quasi.index; }
};

struct DirichletBasis {
    Ellipsoid ellipsoid;
    DunklWeights weights;
    double omega;
    EllipticParams params;
    int m_max;
    std::vector<DirichletEntry> entries;
};

// omega = b_0^2, so that a_0 = 0.
double default_omega(const Ellipsoid& ell);

DirichletBasis build_basis(const Ellipsoid& ell, const DunklWeights& w, double omega, int m_max,
                           const SolverOptions& opts = {}, int threads = 1);

// Coefficients f_{n,p} in basis order. Throws DegreeTooHigh if deg f > m_max.
std::vector<double> expand_boundary(const MultiPoly& f, const DirichletBasis& basis);

// u from precomputed coefficients.
MultiPoly synthesize(std::span<const double> coefficients, const DirichletBasis& basis);

MultiPoly solve(const MultiPoly& f, const DirichletBasis& basis);

struct SolutionSample {
    double value;
    bool inside;  // false: polynomial extrapolation outside the closed ellipsoid
    // delta with sum_j x_j^2/(b_j^2 - delta) = 1, for interior points other than the centre
    std::optional<double> shell_delta;
};

SolutionSample evaluate_solution(const MultiPoly& u, std::span<const double> x, const Ellipsoid& ell);

// sup over `samples` random sphere points y of |u(T y) - f(T y)|.
double boundary_residual(const MultiPoly& u, const MultiPoly& f, const Ellipsoid& ell,
                         int samples, std::uint64_t seed);

} // namespace genharm
