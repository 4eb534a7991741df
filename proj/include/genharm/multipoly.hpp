/*
 * multipoly.hpp
 * -------------
 * Sparse multivariate polynomials in a fixed number of variables x_0..x_{nvars-1}
 * with double coefficients.
 *
 * Terms are kept in a map ordered by the graded-lexicographic order (ascending:
 * lower total degree first, ties broken lexicographically on the exponent vector),
 * so iteration and serialization order never depend on how a polynomial was built.
 *
 * Every arithmetic result is pruned: a term is dropped when its magnitude is at most
 * kZeroThreshold times the largest contribution that flowed into the result. That
 * keeps cancellation noise (e.g. a Dunkl Laplacian of a harmonic) out of the support.
 * The zero polynomial has an empty term map.
 */
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace genharm {

using Exponent = std::vector<int>;

inline constexpr double kZeroThreshold = 1e-12;

int total_degree(const Exponent& e);

struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

// Sign pattern under the coordinate reflections; bits are exactly 0 or 1.
class Parity {
public:
    Parity() = default;
    explicit Parity(std::vector<int> bits);
    static Parity zero(std::size_t size);

    std::size_t size() const { return bits_.size(); }
    int operator[](std::size_t j) const { return bits_[j]; }
    const std::vector<int>& bits() const { return bits_; }
    int weight() const;

    friend bool operator==(const Parity&, const Parity&) = default;

private:
    std::vector<int> bits_;
};

class MultiPoly {
public:
    using TermMap = std::map<Exponent, double, GrlexLess>;

    explicit MultiPoly(int nvars);

    static MultiPoly constant(int nvars, double c);
    static MultiPoly monomial(Exponent e, double c = 1.0);
    static MultiPoly variable(int nvars, int j);
    // Validates exponent lengths; drops exact zeros only.
    static MultiPoly from_terms(int nvars, const std::vector<std::pair<Exponent, double>>& terms);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    double coefficient(const Exponent& e) const;
    double max_abs_coefficient() const;

    MultiPoly operator-() const;

private:
    friend class TermAccumulator;

    int nvars_;
    TermMap terms_;
};

// Collects contributions to a polynomial and prunes relative to the largest one seen.
class TermAccumulator {
public:
    explicit TermAccumulator(int nvars);

    void add(const Exponent& e, double c);
    void note_scale(double magnitude);
    MultiPoly finish() &&;

private:
    int nvars_;
    double scale_ = 0.0;
    MultiPoly::TermMap terms_;
};

MultiPoly add(const MultiPoly& f, const MultiPoly& g);
MultiPoly sub(const MultiPoly& f, const MultiPoly& g);
MultiPoly mul(const MultiPoly& f, const MultiPoly& g);
MultiPoly scale(const MultiPoly& f, double s);
MultiPoly pow(const MultiPoly& f, int e);

inline MultiPoly operator+(const MultiPoly& f, const MultiPoly& g) { return add(f, g); }
inline MultiPoly operator-(const MultiPoly& f, const MultiPoly& g) { return sub(f, g); }
inline MultiPoly operator*(const MultiPoly& f, const MultiPoly& g) { return mul(f, g); }
inline MultiPoly operator*(double s, const MultiPoly& f) { return scale(f, s); }

double eval(const MultiPoly& f, std::span<const double> x);

// f(x) with x_j replaced by -x_j.
MultiPoly reflect(const MultiPoly& f, int j);

// Parity if every term agrees on the exponent parity of each variable, nullopt if mixed.
// Throws UndefinedParity for the zero polynomial.
std::optional<Parity> parity_of(const MultiPoly& f);

// Parts grouped by total degree, highest degree first.
std::vector<std::pair<int, MultiPoly>> homogeneous_parts(const MultiPoly& f);

// Ordinary partial derivative.
MultiPoly partial_derivative(const MultiPoly& f, int j);

// A(z_0,..,z_k) -> A(x_0^2,..,x_k^2).
MultiPoly substitute_squares(const MultiPoly& f);

// f(s_0 x_0, .., s_k x_k).
MultiPoly scale_variables(const MultiPoly& f, std::span<const double> s);

// x^p for a parity (or any 0/1 exponent vector).
MultiPoly parity_monomial(const Parity& p);

// r^2 = x_0^2 + .. + x_k^2.
MultiPoly radius_squared(int nvars);

// max |f_e - g_e| over the union of supports.
double max_abs_difference(const MultiPoly& f, const MultiPoly& g);

// max |f_e - g_e| / max(max|f|, max|g|); 0 when both are zero.
double relative_difference(const MultiPoly& f, const MultiPoly& g);

} // namespace genharm
