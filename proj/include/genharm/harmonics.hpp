/*
 * harmonics.hpp
 * -------------
 * Generalized ellipsoidal harmonics F_{n,p} and sphero-conal harmonics G_{n,p} as explicit
 * polynomials,
 *
 *     F = c x^p prod_l ( sum_j x_j^2/(theta_l - a_j) - 1 ),
 *     G = c x^p prod_l   sum_j x_j^2/(theta_l - a_j),
 *     c = (-1)^{|n|} prod_j |A_j|^{p_j/2} prod_l prod_i (a_i - theta_l),
 *
 * together with the weighted inner product on the unit sphere,
 *     <f, g>_w = int_{S^k} prod_j |x_j|^{2 alpha_j} f g dS,
 * evaluated exactly monomial by monomial through the Gamma-function formula.
 */
#pragma once

#include "genharm/multipoly.hpp"
#include "genharm/stieltjes.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <vector>

namespace genharm {

enum class HarmonicKind { Ellipsoidal, SpheroConal };

struct Harmonic {
    HarmonicKind kind;
    HarmonicIndex index;
    MultiPoly poly;
    double c;
    StieltjesQuasiPoly source;
};

double normalization_constant(const StieltjesQuasiPoly& sp);

Harmonic build_sphero_conal(const StieltjesQuasiPoly& sp);
Harmonic build_ellipsoidal(const StieltjesQuasiPoly& sp);

// Product of quasi-polynomial values in the matching coordinates (open positive cone only).
double eval_product_form(const Harmonic& h, std::span<const double> x);

// int_{S^k} prod_j |x_j|^{2 alpha_j + e_j} dS for an exponent vector e (zero if any e_j odd).
double sphere_monomial_integral(const Exponent& e, const DunklWeights& w);

double sphere_inner_product(const MultiPoly& f, const MultiPoly& g, const DunklWeights& w);

// Dimension of the degree-m Dunkl harmonics with parity p in k + 1 variables.
std::uint64_t harmonic_space_dimension(int m, const Parity& p, int k);

// All (n, p) with 2|n| + |p| = m, ordered by p then n (graded-lex each).
std::vector<HarmonicIndex> enumerate_indices(int k, int m);

struct BasisMember {
    StieltjesQuasiPoly quasi;
    Harmonic ellipsoidal;
    Harmonic sphero_conal;
};

// Every harmonic pair of degree <= m_max, ordered by (degree, p, n).
std::vector<BasisMember> enumerate_basis(const EllipticParams& params, int m_max,
                                         const SolverOptions& opts = {}, int threads = 1);

Eigen::MatrixXd gram_matrix(std::span<const MultiPoly> polys, const DunklWeights& w, int threads = 1);

// max_{i != j} |M_ij| / sqrt(M_ii M_jj)
double max_normalized_off_diagonal(const Eigen::MatrixXd& gram);

} // namespace genharm
