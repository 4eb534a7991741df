#pragma once

#include "genharm/dunkl.hpp"
#include "genharm/multipoly.hpp"
#include "genharm/stieltjes.hpp"

#include <random>
#include <vector>

namespace testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random polynomial with up to `terms` monomials of total degree <= max_degree.
inline genharm::MultiPoly random_poly(Rng& rng, int nvars, int max_degree, int terms)
{
    std::vector<std::pair<genharm::Exponent, double>> t;
    for (int i = 0; i < terms; ++i) {
        genharm::Exponent e(nvars, 0);
        int budget = uniform_int(rng, 0, max_degree);
        for (int j = 0; j < nvars && budget > 0; ++j) {
            const int v = j + 1 == nvars ? budget : uniform_int(rng, 0, budget);
            e[j] = v;
            budget -= v;
        }
        t.push_back({e, uniform(rng, -2.0, 2.0)});
    }
    genharm::MultiPoly p(nvars);
    for (const auto& [e, c] : t)
        p = p + genharm::MultiPoly::monomial(e, c);
    return p;
}

inline genharm::DunklWeights random_weights(Rng& rng, int nvars, double lo = -0.4, double hi = 5.0)
{
    std::vector<double> w(nvars);
    for (double& v : w)
        v = uniform(rng, lo, hi);
    return genharm::DunklWeights(w);
}

// Strictly increasing singularities starting at 0 with gaps in [0.5, 3].
inline std::vector<double> random_singularities(Rng& rng, int nvars)
{
    std::vector<double> a(nvars, 0.0);
    for (int j = 1; j < nvars; ++j)
        a[j] = a[j - 1] + uniform(rng, 0.5, 3.0);
    return a;
}

inline genharm::EllipticParams reference_params()
{
    return genharm::EllipticParams({0.0, 3.0, 5.0},
                                   genharm::DunklWeights({229.0 / 54, 71.0 / 54, 25.0 / 6}));
}

} // namespace testing
