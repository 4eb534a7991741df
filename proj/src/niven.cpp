#include "genharm/niven.hpp"

#include "genharm/errors.hpp"

#include <cmath>
#include <string>

namespace genharm {

NivenContext::NivenContext(EllipticParams params, int m)
    : params_(std::move(params)), gamma_(fundamental_exponent(params_.alpha())), m_(m)
{
    if (m < 0)
        throw std::invalid_argument("degree must be nonnegative");
    if (std::abs(gamma_) <= 1e-14)
        throw GammaZero("fundamental-solution exponent is zero; the Niven series is undefined");
}

MultiPoly anisotropic_laplacian_power(const MultiPoly& u, std::span<const double> coeffs,
                                      const DunklWeights& w, int i)
{
    if (i < 0)
        throw std::invalid_argument("negative operator power");
    MultiPoly v = u;
    for (int q = 0; q < i && !v.is_zero(); ++q)
        v = weighted_dunkl_laplacian(v, coeffs, w);
    return v;
}

MultiPoly niven_transform(const MultiPoly& G, const NivenContext& ctx)
{
    const auto& params = ctx.params();
    if (G.nvars() != params.nvars())
        throw DimensionMismatch("harmonic and parameters differ in dimension");
    const int m = ctx.degree();
    const double base = ctx.gamma() + 1.0 - m;
    TermAccumulator acc(G.nvars());
    MultiPoly term = G;
    double factorial = 1.0;
    for (int i = 0; 2 * i <= m && !term.is_zero(); ++i) {
        if (i > 0) {
            term = weighted_dunkl_laplacian(term, params.a(), params.alpha());
            factorial *= i;
        }
        const double poch = pochhammer(base, i);
        // (gamma + 1 - m)_i = 0 needs gamma to be an integer >= m - i >= 1, excluded by gamma < 1
        if (poch == 0.0)
            throw std::logic_error("vanishing Pochhammer factor in the Niven series");
        const double coef = ((i % 2) ? -1.0 : 1.0) / (std::ldexp(1.0, 2 * i) * factorial * poch);
        for (const auto& [e, c] : term.terms())
            acc.add(e, coef * c);
    }
    return std::move(acc).finish();
}

MultiPoly niven_transform(const Harmonic& G, const NivenContext& ctx)
{
    return niven_transform(G.poly, ctx);
}

} // namespace genharm
