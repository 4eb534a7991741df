#include "genharm/cli.hpp"
#include "genharm/errors.hpp"
#include "genharm/multipoly.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace genharm;

namespace {

MultiPoly x(int nvars, int j) { return MultiPoly::variable(nvars, j); }
MultiPoly one(int nvars) { return MultiPoly::constant(nvars, 1.0); }

} // namespace

TEST_CASE("additive inverse gives the empty polynomial")
{
    const MultiPoly z = x(3, 0) + (-x(3, 0));
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
}

TEST_CASE("disjoint supports and identities")
{
    const MultiPoly f = x(3, 0) * x(3, 0) + x(3, 1);
    CHECK(f.size() == 2);
    CHECK(f.coefficient({2, 0, 0}) == 1.0);
    CHECK(f.coefficient({0, 1, 0}) == 1.0);
    CHECK(max_abs_difference(f + MultiPoly(3), f) == 0.0);
    CHECK(max_abs_difference(f * one(3), f) == 0.0);
}

TEST_CASE("difference of squares")
{
    const MultiPoly f = (x(2, 0) - one(2)) * (x(2, 0) + one(2));
    CHECK(f.size() == 2);
    CHECK(f.coefficient({2, 0}) == 1.0);
    CHECK(f.coefficient({0, 0}) == -1.0);
}

TEST_CASE("expanded reference harmonic matches an exact symbolic expansion")
{
    // exact rational expansion computed independently
    const std::vector<std::pair<Exponent, double>> expected{
        {{6, 0, 0}, -24},  {{4, 2, 0}, -36}, {{4, 0, 2}, 118},  {{4, 0, 0}, 168}, {{2, 4, 0}, 216},
        {{2, 2, 2}, -172}, {{2, 2, 0}, -24}, {{2, 0, 4}, -92},  {{2, 0, 2}, -404}, {{2, 0, 0}, -336},
        {{0, 6, 0}, -96},  {{0, 4, 2}, 16},  {{0, 4, 0}, -192}, {{0, 2, 4}, 64},  {{0, 2, 2}, 256},
        {{0, 2, 0}, 96},   {{0, 0, 6}, 16},  {{0, 0, 4}, 128},  {{0, 0, 2}, 304}, {{0, 0, 0}, 192}};
    const auto cases = reference_cases();
    const MultiPoly& F = cases[0].F;
    CHECK(F.size() == expected.size());
    for (const auto& [e, c] : expected)
        CHECK(F.coefficient(e) == doctest::Approx(c).epsilon(1e-13));
    CHECK(cases[0].G.size() == 10);
}

TEST_CASE("terms iterate in ascending graded-lex order")
{
    const MultiPoly f = x(2, 1) * x(2, 1) + x(2, 0) + x(2, 0) * x(2, 1) + one(2) + x(2, 0) * x(2, 0);
    std::vector<Exponent> order;
    for (const auto& [e, c] : f.terms())
        order.push_back(e);
    const std::vector<Exponent> expected{{0, 0}, {1, 0}, {0, 2}, {1, 1}, {2, 0}};
    CHECK(order == expected);
    GrlexLess less;
    CHECK(less({0, 3}, {1, 2}));
    CHECK(less({2, 0}, {0, 3}));
    CHECK_FALSE(less({1, 1}, {1, 1}));
}

TEST_CASE("evaluation")
{
    const MultiPoly f = x(3, 0) * x(3, 0) - one(3);
    const std::vector<double> p{2.0, 7.0, -1.0};
    CHECK(eval(f, p) == 3.0);
    CHECK(eval(MultiPoly(3), p) == 0.0);
    CHECK_THROWS_AS(eval(f, std::vector<double>{1.0}), DimensionMismatch);
}

TEST_CASE("reflections")
{
    const MultiPoly xy = x(3, 0) * x(3, 1);
    CHECK(max_abs_difference(reflect(xy, 0), -xy) == 0.0);
    const MultiPoly sq = x(3, 0) * x(3, 0);
    CHECK(max_abs_difference(reflect(sq, 0), sq) == 0.0);
    CHECK_THROWS_AS(reflect(sq, 3), AxisOutOfRange);

    testing::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const MultiPoly f = testing::random_poly(rng, 3, 5, 8);
        for (int j = 0; j < 3; ++j)
            CHECK(max_abs_difference(reflect(reflect(f, j), j), f) == 0.0);
    }
}

TEST_CASE("parity detection")
{
    const MultiPoly f = x(3, 0) * x(3, 1) * x(3, 2) * x(3, 2);
    const auto p = parity_of(f);
    REQUIRE(p.has_value());
    CHECK(*p == Parity({1, 1, 0}));
    CHECK_FALSE(parity_of(x(3, 0) * x(3, 0) + x(3, 0)).has_value());
    CHECK_THROWS_AS(parity_of(MultiPoly(3)), UndefinedParity);
    CHECK_THROWS_AS(Parity({0, 2}), std::invalid_argument);

    const auto cases = reference_cases();
    const auto p2 = parity_of(cases[1].G);
    REQUIRE(p2.has_value());
    CHECK(*p2 == Parity({1, 1, 0}));

    // parity p means reflect(f, j) = (-1)^{p_j} f
    for (int j = 0; j < 3; ++j) {
        const MultiPoly expected = (*p2)[j] ? -cases[1].G : cases[1].G;
        CHECK(max_abs_difference(reflect(cases[1].G, j), expected) == 0.0);
    }
}

TEST_CASE("homogeneous parts")
{
    const MultiPoly f = x(2, 0) * x(2, 0) + x(2, 1);
    const auto parts = homogeneous_parts(f);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first == 2);
    CHECK(parts[1].first == 1);
    CHECK(max_abs_difference(parts[0].second + parts[1].second, f) == 0.0);
    CHECK(homogeneous_parts(x(2, 0) * x(2, 1)).size() == 1);

    const auto cases = reference_cases();
    const auto fp = homogeneous_parts(cases[0].F);
    REQUIRE(fp.size() == 4);
    CHECK(fp[0].first == 6);
    CHECK(fp[1].first == 4);
    CHECK(fp[2].first == 2);
    CHECK(fp[3].first == 0);
    CHECK(relative_difference(fp[0].second, cases[0].G) <= 1e-15);
}

TEST_CASE("ring axioms on random polynomials")
{
    testing::Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = testing::uniform_int(rng, 1, 4);
        const MultiPoly f = testing::random_poly(rng, n, 4, 6);
        const MultiPoly g = testing::random_poly(rng, n, 4, 6);
        const MultiPoly h = testing::random_poly(rng, n, 4, 6);
        CHECK(relative_difference((f * g) * h, f * (g * h)) <= 1e-12);
        CHECK(relative_difference(f * (g + h), f * g + f * h) <= 1e-12);
        CHECK(relative_difference(f + g, g + f) == 0.0);
        CHECK(relative_difference(f * g, g * f) <= 1e-15);
    }
}

TEST_CASE("evaluation is a ring homomorphism")
{
    testing::Rng rng(3);
    const MultiPoly f = testing::random_poly(rng, 3, 5, 10);
    const MultiPoly g = testing::random_poly(rng, 3, 5, 10);
    const MultiPoly fg = f * g;
    for (int i = 0; i < 100; ++i) {
        const std::vector<double> p{testing::uniform(rng, -2, 2), testing::uniform(rng, -2, 2),
                                    testing::uniform(rng, -2, 2)};
        const double lhs = eval(fg, p);
        const double rhs = eval(f, p) * eval(g, p);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("cancellation noise is pruned")
{
    const MultiPoly a = MultiPoly::from_terms(2, {{{2, 0}, 0.1}, {{0, 0}, 1.0}});
    const MultiPoly b = MultiPoly::from_terms(2, {{{2, 0}, 0.2}, {{0, 0}, 1.0}});
    // 0.1 + 0.2 - 0.3 is not exactly zero in binary
    const MultiPoly c = MultiPoly::from_terms(2, {{{2, 0}, 0.3}, {{0, 0}, 2.0}});
    const MultiPoly d = (a + b) - c;
    CHECK(d.is_zero());
}

TEST_CASE("calculus helpers")
{
    const MultiPoly f = MultiPoly::from_terms(2, {{{3, 1}, 2.0}, {{0, 2}, 1.0}});
    const MultiPoly dx = partial_derivative(f, 0);
    CHECK(dx.size() == 1);
    CHECK(dx.coefficient({2, 1}) == 6.0);

    const MultiPoly A = MultiPoly::from_terms(2, {{{1, 0}, 1.0}, {{1, 1}, 3.0}});
    const MultiPoly sq = substitute_squares(A);
    CHECK(sq.coefficient({2, 0}) == 1.0);
    CHECK(sq.coefficient({2, 2}) == 3.0);

    const std::vector<double> s{2.0, -1.0};
    const MultiPoly scaled = scale_variables(f, s);
    CHECK(scaled.coefficient({3, 1}) == -16.0);
    CHECK(scaled.coefficient({0, 2}) == 1.0);

    CHECK(max_abs_difference(parity_monomial(Parity({1, 0, 1})), x(3, 0) * x(3, 2)) == 0.0);
    CHECK(radius_squared(3).size() == 3);
    CHECK(max_abs_difference(pow(x(2, 0) + one(2), 2), x(2, 0) * x(2, 0) + 2.0 * x(2, 0) + one(2)) == 0.0);
}

TEST_CASE("mismatched rings are rejected")
{
    CHECK_THROWS_AS(x(2, 0) + x(3, 0), DimensionMismatch);
    CHECK_THROWS_AS(x(2, 0) * x(3, 0), DimensionMismatch);
    CHECK_THROWS_AS(MultiPoly::from_terms(2, {{{1, 0, 0}, 1.0}}), DimensionMismatch);
    CHECK_THROWS_AS(MultiPoly::monomial({-1, 0}), std::invalid_argument);
}
