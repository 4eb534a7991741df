/*
 * dunkl.hpp
 * ---------
 * Dunkl operators for the sign-change group Z_2^{k+1}:
 *
 *     D_j u(x) = du/dx_j + alpha_j (u(x) - u(sigma_j x)) / x_j
 *
 * acting exactly on polynomials through the monomial rule
 *     D_j x_j^m = m x_j^{m-1}              (m even)
 *     D_j x_j^m = (m + 2 alpha_j) x_j^{m-1} (m odd),
 * plus the calculus of radial powers r^{2 gamma} h(x) used for the Hobson identities
 * and a finite-difference evaluator that serves as an independent test oracle.
 */
#pragma once

#include "genharm/multipoly.hpp"

#include <functional>
#include <span>
#include <vector>

namespace genharm {

class DunklWeights {
public:
    // Throws std::invalid_argument unless every alpha_j > -1/2.
    explicit DunklWeights(std::vector<double> alpha);
    static DunklWeights zero(int nvars);

    int size() const { return static_cast<int>(alpha_.size()); }
    double operator[](int j) const { return alpha_[j]; }
    const std::vector<double>& values() const { return alpha_; }
    // |alpha|
    double sum() const;

private:
    std::vector<double> alpha_;
};

// (x)_n = x (x+1) .. (x+n-1) by direct product.
double pochhammer(double x, int n);

// gamma = (1 - k)/2 - |alpha| with k + 1 = number of variables.
double fundamental_exponent(const DunklWeights& w);

MultiPoly dunkl_derivative(const MultiPoly& u, int j, const DunklWeights& w);

// sum_j coeffs_j D_j^2 u
MultiPoly weighted_dunkl_laplacian(const MultiPoly& u, std::span<const double> coeffs,
                                   const DunklWeights& w);

MultiPoly dunkl_laplacian(const MultiPoly& u, const DunklWeights& w);

// f(D_0, .., D_k) applied to g.
MultiPoly apply_dunkl_poly(const MultiPoly& f, const MultiPoly& g, const DunklWeights& w);

struct RadialTerm {
    int shift;
    MultiPoly h;
};

// sum over terms of r^{2 (gamma_base + shift)} h(x); every h homogeneous, shifts distinct
// and kept in ascending order, identically zero parts dropped.
class RadialExpansion {
public:
    RadialExpansion(int nvars, double gamma_base);

    int nvars() const { return nvars_; }
    double gamma_base() const { return gamma_base_; }
    const std::vector<RadialTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // Merges with an existing term of the same shift. Throws std::invalid_argument if h,
    // or the merged part, is not homogeneous.
    void add_term(int shift, const MultiPoly& h);

    double eval(std::span<const double> x) const;

private:
    int nvars_;
    double gamma_base_;
    std::vector<RadialTerm> terms_;
};

// f_m(D)[r^{2 gamma}] for homogeneous f_m of degree m, as
// sum_j 2^{m-2j} (-1)^{m-j} (-gamma)_{m-j} r^{2(gamma-m+j)} Delta^j f_m / j!.
RadialExpansion dunkl_on_radial_power(const MultiPoly& f_m, double gamma, const DunklWeights& w);

// Delta_alpha applied termwise:
// Delta(r^{2s} h) = 2s (2s + 2 deg h + k - 1 + 2|alpha|) r^{2(s-1)} h + r^{2s} Delta h.
RadialExpansion laplacian_of_radial(const RadialExpansion& e, const DunklWeights& w);

namespace numeric {

using ScalarField = std::function<double(std::span<const double>)>;

inline constexpr double kDefaultStep = 1e-3;

// D_j u at x by central differences of du/dx_j plus the exact reflection term.
double dunkl_derivative(const ScalarField& u, std::span<const double> x, int j,
                        const DunklWeights& w, double h = kDefaultStep);

// sum_j coeffs_j D_j^2 u at x, using
// D_j^2 u = d^2u/dx_j^2 + 2 alpha_j/x_j du/dx_j - alpha_j/x_j^2 (u(x) - u(sigma_j x)),
// Richardson-extrapolated over steps h and h/2.
double weighted_dunkl_laplacian(const ScalarField& u, std::span<const double> x,
                                std::span<const double> coeffs, const DunklWeights& w,
                                double h = kDefaultStep);

// Throws DegeneratePoint if x lies on a coordinate plane.
double dunkl_laplacian(const ScalarField& u, std::span<const double> x, const DunklWeights& w,
                       double h = kDefaultStep);

} // namespace numeric

} // namespace genharm
