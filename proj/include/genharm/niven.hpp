/*
 * niven.hpp
 * ---------
 * Generalized Niven formula: the ellipsoidal harmonic F_{n,p} as an operator series in the
 * sphero-conal harmonic G_{n,p} of degree m,
 *
 *     F = sum_i (-1)^i / (4^i i! (gamma + 1 - m)_i) (a_0 D_0^2 + .. + a_k D_k^2)^i G,
 *
 * with gamma = (1 - k)/2 - |alpha|. Terms with 2i > m vanish and are not computed.
 */
#pragma once

#include "genharm/harmonics.hpp"
#include "genharm/stieltjes.hpp"

#include <span>

namespace genharm {

class NivenContext {
public:
    // Throws GammaZero when gamma vanishes.
    NivenContext(EllipticParams params, int m);

    const EllipticParams& params() const { return params_; }
    double gamma() const { return gamma_; }
    int degree() const { return m_; }

private:
    EllipticParams params_;
    double gamma_;
    int m_;
};

// (sum_j coeffs_j D_j^2)^i u
MultiPoly anisotropic_laplacian_power(const MultiPoly& u, std::span<const double> coeffs,
                                      const DunklWeights& w, int i);

MultiPoly niven_transform(const MultiPoly& G, const NivenContext& ctx);
MultiPoly niven_transform(const Harmonic& G, const NivenContext& ctx);

} // namespace genharm
