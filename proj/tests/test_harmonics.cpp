#include "genharm/cli.hpp"
#include "genharm/errors.hpp"
#include "genharm/harmonics.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace genharm;

namespace {

HarmonicIndex index(std::vector<int> n, std::vector<int> p) { return HarmonicIndex(std::move(n), Parity(std::move(p))); }

const double pi = std::numbers::pi;

} // namespace

TEST_CASE("surface areas")
{
    CHECK(sphere_inner_product(MultiPoly::constant(2, 1.0), MultiPoly::constant(2, 1.0), DunklWeights::zero(2))
          == doctest::Approx(2 * pi).epsilon(1e-14));
    CHECK(sphere_inner_product(MultiPoly::constant(3, 1.0), MultiPoly::constant(3, 1.0), DunklWeights::zero(3))
          == doctest::Approx(4 * pi).epsilon(1e-14));
    CHECK(sphere_inner_product(MultiPoly::constant(4, 1.0), MultiPoly::constant(4, 1.0), DunklWeights::zero(4))
          == doctest::Approx(2 * pi * pi).epsilon(1e-14));
}

TEST_CASE("classical moments on the 2-sphere")
{
    const DunklWeights w = DunklWeights::zero(3);
    CHECK(sphere_monomial_integral({2, 0, 0}, w) == doctest::Approx(4 * pi / 3).epsilon(1e-14));
    CHECK(sphere_monomial_integral({4, 0, 0}, w) == doctest::Approx(4 * pi / 5).epsilon(1e-14));
    CHECK(sphere_monomial_integral({2, 2, 0}, w) == doctest::Approx(4 * pi / 15).epsilon(1e-14));
    CHECK(sphere_monomial_integral({1, 2, 0}, w) == 0.0);
    const MultiPoly x0 = MultiPoly::variable(3, 0);
    CHECK(sphere_inner_product(x0, MultiPoly::constant(3, 1.0), w) == 0.0);
}

TEST_CASE("weighted circle moments against the trapezoidal rule")
{
    // trigonometric polynomial integrands, so the periodic trapezoidal rule is exact
    const int N = 512;
    for (int a0 = 0; a0 <= 2; ++a0)
        for (int a1 = 0; a1 <= 2; ++a1)
            for (int e0 = 0; e0 <= 4; e0 += 2)
                for (int e1 = 0; e1 <= 4; e1 += 2) {
                    double sum = 0.0;
                    for (int i = 0; i < N; ++i) {
                        const double t = 2 * pi * i / N;
                        sum += std::pow(std::cos(t), 2 * a0 + e0) * std::pow(std::sin(t), 2 * a1 + e1);
                    }
                    const double quad = sum * 2 * pi / N;
                    const DunklWeights w({double(a0), double(a1)});
                    CHECK(sphere_monomial_integral({e0, e1}, w) == doctest::Approx(quad).epsilon(1e-12));
                }
}

TEST_CASE("dimension counts")
{
    CHECK(harmonic_space_dimension(6, Parity({0, 0, 0}), 2) == 4);
    CHECK(harmonic_space_dimension(1, Parity({1, 1, 0}), 2) == 0);
    CHECK(harmonic_space_dimension(3, Parity({1, 0, 0}), 2) == 2);
    CHECK(harmonic_space_dimension(4, Parity({1, 0, 0}), 2) == 0);
    // total over parities is the dimension of harmonics of degree m in k + 1 variables
    for (int k = 1; k <= 4; ++k)
        for (int m = 0; m <= 8; ++m) {
            std::uint64_t total = 0;
            for (unsigned bits = 0; bits < (1u << (k + 1)); ++bits) {
                std::vector<int> p(k + 1);
                for (int j = 0; j <= k; ++j)
                    p[j] = (bits >> j) & 1;
                total += harmonic_space_dimension(m, Parity(p), k);
            }
            // C(m + k, k) - C(m + k - 2, k)
            auto binom = [](int n, int r) -> std::uint64_t {
                if (n < r || r < 0)
                    return 0;
                std::uint64_t b = 1;
                for (int i = 1; i <= r; ++i)
                    b = b * (n - r + i) / i;
                return b;
            };
            CHECK(total == binom(m + k, k) - binom(m + k - 2, k));
        }
}

TEST_CASE("worked cases")
{
    const auto cases = reference_cases();
    const EllipticParams p1 = testing::reference_params();
    const auto sp1 = make_quasi_poly(p1, index({2, 1}, {0, 0, 0}));
    const Harmonic G1 = build_sphero_conal(sp1);
    const Harmonic F1 = build_ellipsoidal(sp1);
    CHECK(G1.c == doctest::Approx(-192.0).epsilon(1e-13));
    CHECK(relative_difference(G1.poly, cases[0].G) <= 1e-12);
    CHECK(relative_difference(F1.poly, cases[0].F) <= 1e-12);
    CHECK(G1.kind == HarmonicKind::SpheroConal);
    CHECK(F1.kind == HarmonicKind::Ellipsoidal);

    const EllipticParams p2({0.0, 3.0, 5.0}, DunklWeights(cases[1].alpha));
    const auto sp2 = make_quasi_poly(p2, index({2, 1}, {1, 1, 0}));
    const Harmonic G2 = build_sphero_conal(sp2);
    CHECK(G2.c == doctest::Approx(-192.0 * std::sqrt(15.0) * std::sqrt(6.0)).epsilon(1e-13));
    CHECK(relative_difference(G2.poly, cases[1].G) <= 1e-12);
    CHECK(relative_difference(build_ellipsoidal(sp2).poly, cases[1].F) <= 1e-12);

    const std::vector<double> ones{1.0, 1.0, 1.0};
    CHECK(eval_product_form(F1, ones) == doctest::Approx(eval(F1.poly, ones)).epsilon(1e-9));
    CHECK(eval_product_form(G1, ones) == doctest::Approx(eval(G1.poly, ones)).epsilon(1e-9));

    // G(2x) = 2^6 G(x) through the product form
    const std::vector<double> twos{2.0, 2.0, 2.0};
    CHECK(eval_product_form(G1, twos) == doctest::Approx(64.0 * eval_product_form(G1, ones)).epsilon(1e-12));
}

TEST_CASE("constant harmonic")
{
    const auto sp = make_quasi_poly(testing::reference_params(), index({0, 0}, {0, 0, 0}));
    const Harmonic G = build_sphero_conal(sp);
    const Harmonic F = build_ellipsoidal(sp);
    CHECK(G.c == 1.0);
    CHECK(G.poly.size() == 1);
    CHECK(G.poly.coefficient({0, 0, 0}) == 1.0);
    CHECK(max_abs_difference(F.poly, G.poly) == 0.0);
    const std::vector<double> x{0.3, 1.2, 0.7};
    CHECK(eval_product_form(F, x) == doctest::Approx(1.0));
}

TEST_CASE("degree-one harmonics")
{
    const auto sp = make_quasi_poly(testing::reference_params(), index({0, 0}, {0, 1, 0}));
    const Harmonic F = build_ellipsoidal(sp);
    CHECK(F.poly.size() == 1);
    CHECK(max_abs_difference(F.poly, build_sphero_conal(sp).poly) == 0.0);
    CHECK(F.poly.coefficient({0, 1, 0}) == doctest::Approx(std::sqrt(6.0)));
}

TEST_CASE("enumeration counts")
{
    const auto params = testing::reference_params();
    CHECK(enumerate_basis(params, 0).size() == 1);
    CHECK(enumerate_basis(params, 1).size() == 4);
    int deg6_even = 0;
    for (const auto& idx : enumerate_indices(2, 6))
        if (idx.p() == Parity({0, 0, 0}))
            ++deg6_even;
    CHECK(deg6_even == 4);
    CHECK_THROWS_AS(enumerate_basis(params, -1), std::invalid_argument);
}

TEST_CASE("basis properties for random parameters")
{
    testing::Rng rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        const int k = testing::uniform_int(rng, 1, 3);
        const int m_max = 8;
        const EllipticParams params(testing::random_singularities(rng, k + 1),
                                    testing::random_weights(rng, k + 1, -0.4, 3.0));
        const auto basis = enumerate_basis(params, m_max, {}, 4);
        int prev_degree = 0;
        for (const auto& b : basis) {
            const HarmonicIndex& idx = b.quasi.index;
            const int m = idx.degree();
            CHECK(m >= prev_degree);
            prev_degree = m;
            const MultiPoly& G = b.sphero_conal.poly;
            const MultiPoly& F = b.ellipsoidal.poly;
            CHECK(dunkl_laplacian(G, params.alpha()).max_abs_coefficient() <= 1e-9 * G.max_abs_coefficient());
            CHECK(dunkl_laplacian(F, params.alpha()).max_abs_coefficient() <= 1e-9 * F.max_abs_coefficient());
            CHECK(G.is_homogeneous());
            CHECK(G.degree() == m);
            CHECK(F.degree() == m);
            CHECK(parity_of(G) == idx.p());
            CHECK(parity_of(F) == idx.p());
            const MultiPoly diff = F - G;
            CHECK((diff.is_zero() || diff.degree() <= m - 2));
            CHECK(sphere_inner_product(G, G, params.alpha()) > 0.0);
        }
    }
}

TEST_CASE("product form agrees with the polynomial")
{
    testing::Rng rng(71);
    const auto params = testing::reference_params();
    const auto basis = enumerate_basis(params, 5);
    for (const auto& b : basis) {
        for (int i = 0; i < 100; ++i) {
            std::vector<double> x(3);
            for (double& v : x)
                v = testing::uniform(rng, 0.1, 1.5);
            for (const Harmonic* h : {&b.ellipsoidal, &b.sphero_conal}) {
                const double direct = eval(h->poly, x);
                const double product = eval_product_form(*h, x);
                CHECK(std::abs(direct - product) <= 1e-9 * std::max(1.0, h->poly.max_abs_coefficient()));
            }
        }
    }
    const std::vector<double> on_plane{0.0, 1.0, 1.0};
    CHECK_THROWS_AS(eval_product_form(basis.back().ellipsoidal, on_plane), DegeneratePoint);
}

TEST_CASE("orthogonality at degree six")
{
    const auto params = testing::reference_params();
    const auto basis = enumerate_basis(params, 6);
    std::vector<MultiPoly> even, deg6;
    std::vector<Parity> parities;
    for (const auto& b : basis) {
        if (b.quasi.index.degree() != 6)
            continue;
        deg6.push_back(b.sphero_conal.poly);
        parities.push_back(b.quasi.index.p());
        if (b.quasi.index.p() == Parity({0, 0, 0}))
            even.push_back(b.sphero_conal.poly);
    }
    CHECK(even.size() == 4);
    const Eigen::MatrixXd ge = gram_matrix(even, params.alpha());
    CHECK(max_normalized_off_diagonal(ge) <= 1e-10);

    const Eigen::MatrixXd g = gram_matrix(deg6, params.alpha(), 3);
    CHECK(max_normalized_off_diagonal(g) <= 1e-10);
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        CHECK(g(i, i) > 0.0);
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            CHECK(g(i, j) == g(j, i));
            if (!(parities[i] == parities[j]))
                CHECK(g(i, j) == 0.0);
        }
    }

    const Eigen::MatrixXd one = gram_matrix(std::vector<MultiPoly>{MultiPoly::constant(3, 1.0)}, params.alpha());
    CHECK(one.rows() == 1);
    CHECK(one(0, 0) == doctest::Approx(sphere_monomial_integral({0, 0, 0}, params.alpha())));
}
