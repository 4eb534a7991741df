/*
 * stieltjes.hpp
 * -------------
 * Stieltjes quasi-polynomials
 *
 *     E_{n,p}(t) = prod_j |t - a_j|^{p_j/2} * prod_l (t - theta_l)
 *
 * for singularities a_0 < .. < a_k and weights alpha_j > -1/2. The monic factor has
 * exactly n_j zeros in (a_{j-1}, a_j); those zeros are the equilibrium points of the
 * electrostatic system
 *
 *     sum_{q != l} 2/(theta_l - theta_q) + sum_j (alpha_j + p_j + 1/2)/(theta_l - a_j) = 0.
 *
 * The eigenvalues lambda_0..lambda_{k-1} of the Fuchsian equation are recovered from the
 * zeros: lambda_{k-1} in closed form, the accessory parameters by least squares.
 */
#pragma once

#include "genharm/dunkl.hpp"
#include "genharm/multipoly.hpp"

#include <span>
#include <vector>

namespace genharm {

class EllipticParams {
public:
    // Throws std::invalid_argument unless a is strictly increasing and sizes agree.
    EllipticParams(std::vector<double> a, DunklWeights alpha);

    int k() const { return static_cast<int>(a_.size()) - 1; }
    int nvars() const { return static_cast<int>(a_.size()); }
    const std::vector<double>& a() const { return a_; }
    const DunklWeights& alpha() const { return alpha_; }

    // A_j = prod_{i != j} (a_j - a_i)
    double A(int j) const;

    // Same singularities, weights alpha_j + p_j.
    EllipticParams with_shifted_weights(const Parity& p) const;

private:
    std::vector<double> a_;
    DunklWeights alpha_;
};

class HarmonicIndex {
public:
    // n has k entries, p has k + 1.
    HarmonicIndex(std::vector<int> n, Parity p);

    const std::vector<int>& n() const { return n_; }
    const Parity& p() const { return p_; }
    int k() const { return static_cast<int>(n_.size()); }
    int n_total() const;
    // m = 2|n| + |p|
    int degree() const;

    friend bool operator==(const HarmonicIndex&, const HarmonicIndex&) = default;

private:
    std::vector<int> n_;
    Parity p_;
};

struct SolverOptions {
    double tol = 1e-12;
    int max_iter = 200;
};

struct StieltjesQuasiPoly {
    EllipticParams params;
    HarmonicIndex index;
    std::vector<double> thetas;
    std::vector<double> lambdas;
    double residual = 0.0;

    double eval(double t) const;
};

// Left-hand sides of the zero system with effective weights alpha_j + p_j.
// Throws std::invalid_argument on coincident zeros or a zero sitting on some a_j.
std::vector<double> electrostatic_residual(std::span<const double> thetas,
                                           const EllipticParams& params,
                                           const HarmonicIndex& index);

// Largest residual entry divided by the sum of absolute values of its terms.
double scaled_residual(std::span<const double> thetas, const EllipticParams& params,
                       const HarmonicIndex& index);

// Zeros of the monic factor, sorted. Throws NonConvergence after opts.max_iter iterations.
std::vector<double> solve_zeros(const EllipticParams& params, const HarmonicIndex& index,
                                const SolverOptions& opts = {});

// lambda_{k-1} = -m/2 (m/2 + |alpha| + (k-1)/2)
double lambda_top(const EllipticParams& params, const HarmonicIndex& index);

// Residual polynomial of the Fuchsian equation applied to E_{n,p}, multiplied through by
// prod_j (t - a_j)^2 so that it is a polynomial in t. Coefficients in ascending powers.
std::vector<double> fuchsian_residual(const EllipticParams& params, const HarmonicIndex& index,
                                      std::span<const double> thetas,
                                      std::span<const double> lambdas);

// Least-squares recovery of (lambda_0, .., lambda_{k-1}). Throws ResidualTooLarge when the
// zeros do not admit an eigen-solution.
std::vector<double> accessory_lambdas(const EllipticParams& params, const HarmonicIndex& index,
                                      std::span<const double> thetas);

// Solves for zeros and lambdas.
StieltjesQuasiPoly make_quasi_poly(const EllipticParams& params, const HarmonicIndex& index,
                                   const SolverOptions& opts = {});

inline double eval_E(const StieltjesQuasiPoly& sp, double t) { return sp.eval(t); }

} // namespace genharm
