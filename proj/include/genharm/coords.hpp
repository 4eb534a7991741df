/*
 * coords.hpp
 * ----------
 * Ellipsoidal and sphero-conal coordinates on the open positive cone x_j > 0, for
 * singularities a_0 < a_1 < .. < a_k.
 *
 * Ellipsoidal: t_0 > a_k and a_{i-1} < t_i < a_i, the roots of
 *     sum_j x_j^2 / (t - a_j) = 1.
 * Sphero-conal: r = |x| and a_{i-1} < s_i < a_i, the roots of
 *     sum_j x_j^2 / (s - a_j) = 0.
 */
#pragma once

#include <span>
#include <vector>

namespace genharm {

inline constexpr double kBoundaryThreshold = 1e-12;

struct EllipsoidalCoords {
    std::vector<double> t;
};

struct SpheroConalCoords {
    double r = 0.0;
    std::vector<double> s;
};

// Throws DegeneratePoint if some x_j <= kBoundaryThreshold.
EllipsoidalCoords ellipsoidal_from_cartesian(std::span<const double> x, std::span<const double> a);

// Throws OutOfDomain unless t lies in the cube a_k < t_0, a_{i-1} < t_i < a_i.
std::vector<double> cartesian_from_ellipsoidal(const EllipsoidalCoords& t, std::span<const double> a);

SpheroConalCoords spheroconal_from_cartesian(std::span<const double> x, std::span<const double> a);

std::vector<double> cartesian_from_spheroconal(const SpheroConalCoords& c, std::span<const double> a);

} // namespace genharm
