#include "genharm/harmonics.hpp"

#include "genharm/coords.hpp"
#include "genharm/errors.hpp"
#include "genharm/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

namespace genharm {

double normalization_constant(const StieltjesQuasiPoly& sp)
{
    const auto& params = sp.params;
    double c = (sp.thetas.size() % 2) ? -1.0 : 1.0;
    for (int j = 0; j < params.nvars(); ++j)
        if (sp.index.p()[j])
            c *= std::sqrt(std::abs(params.A(j)));
    for (double th : sp.thetas)
        for (double ai : params.a())
            c *= ai - th;
    return c;
}

namespace {

// sum_j x_j^2 / (theta - a_j) - shift
MultiPoly quadric_factor(const EllipticParams& params, double theta, double shift)
{
    const int nv = params.nvars();
    std::vector<std::pair<Exponent, double>> terms;
    for (int j = 0; j < nv; ++j) {
        Exponent e(nv, 0);
        e[j] = 2;
        terms.emplace_back(std::move(e), 1.0 / (theta - params.a()[j]));
    }
    if (shift != 0.0)
        terms.emplace_back(Exponent(nv, 0), -shift);
    return MultiPoly::from_terms(nv, terms);
}

Harmonic build(const StieltjesQuasiPoly& sp, HarmonicKind kind)
{
    const double c = normalization_constant(sp);
    const double shift = kind == HarmonicKind::Ellipsoidal ? 1.0 : 0.0;
    MultiPoly poly = scale(parity_monomial(sp.index.p()), c);
    for (double th : sp.thetas)
        poly = mul(poly, quadric_factor(sp.params, th, shift));
    return Harmonic{kind, sp.index, std::move(poly), c, sp};
}

} // namespace

Harmonic build_sphero_conal(const StieltjesQuasiPoly& sp)
{
    return build(sp, HarmonicKind::SpheroConal);
}

Harmonic build_ellipsoidal(const StieltjesQuasiPoly& sp)
{
    return build(sp, HarmonicKind::Ellipsoidal);
}

double eval_product_form(const Harmonic& h, std::span<const double> x)
{
    const auto& a = h.source.params.a();
    double v = 1.0;
    if (h.kind == HarmonicKind::Ellipsoidal) {
        for (double t : ellipsoidal_from_cartesian(x, a).t)
            v *= h.source.eval(t);
        return v;
    }
    const SpheroConalCoords sc = spheroconal_from_cartesian(x, a);
    v = std::pow(sc.r, h.index.degree());
    for (double s : sc.s)
        v *= h.source.eval(s);
    return v;
}

double sphere_monomial_integral(const Exponent& e, const DunklWeights& w)
{
    if (static_cast<int>(e.size()) != w.size())
        throw DimensionMismatch("exponent vector does not match the weights");
    double log_num = std::log(2.0);
    double beta_sum = 0.0;
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] % 2)
            return 0.0;
        const double beta = 0.5 * e[j] + w[static_cast<int>(j)] + 0.5;
        log_num += std::lgamma(beta);
        beta_sum += beta;
    }
    return std::exp(log_num - std::lgamma(beta_sum));
}

double sphere_inner_product(const MultiPoly& f, const MultiPoly& g, const DunklWeights& w)
{
    if (f.nvars() != g.nvars() || f.nvars() != w.size())
        throw DimensionMismatch("inner product operands disagree in dimension");
    // Unpruned product restricted to even monomials, in graded-lex order.
    std::map<Exponent, double, GrlexLess> even_terms;
    Exponent e(f.nvars());
    for (const auto& [ef, cf] : f.terms()) {
        for (const auto& [eg, cg] : g.terms()) {
            bool even = true;
            for (int v = 0; v < f.nvars(); ++v) {
                e[v] = ef[v] + eg[v];
                even = even && (e[v] % 2 == 0);
            }
            if (even)
                even_terms[e] += cf * cg;
        }
    }
    double sum = 0.0;
    double carry = 0.0;
    for (const auto& [ev, c] : even_terms) {
        const double y = c * sphere_monomial_integral(ev, w) - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

std::uint64_t harmonic_space_dimension(int m, const Parity& p, int k)
{
    const int rest = m - p.weight();
    if (rest < 0 || rest % 2 != 0 || k < 1)
        return 0;
    // binomial(rest/2 + k - 1, k - 1)
    const std::uint64_t top = rest / 2 + k - 1;
    const std::uint64_t r = k - 1;
    std::uint64_t b = 1;
    for (std::uint64_t i = 1; i <= r; ++i)
        b = b * (top - r + i) / i;
    return b;
}

namespace {

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == parts - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        compositions(total - v, parts, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<HarmonicIndex> enumerate_indices(int k, int m)
{
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");
    std::vector<Exponent> parities;
    for (unsigned mask = 0; mask < (1u << (k + 1)); ++mask) {
        Exponent bits(k + 1);
        int weight = 0;
        for (int j = 0; j <= k; ++j) {
            bits[j] = (mask >> j) & 1u;
            weight += bits[j];
        }
        if (weight <= m && (m - weight) % 2 == 0)
            parities.push_back(std::move(bits));
    }
    std::sort(parities.begin(), parities.end(), GrlexLess{});
    std::vector<HarmonicIndex> out;
    for (const auto& bits : parities) {
        const Parity p(bits);
        std::vector<std::vector<int>> ns;
        std::vector<int> cur;
        compositions((m - p.weight()) / 2, k, cur, ns);
        std::sort(ns.begin(), ns.end(), GrlexLess{});
        for (auto& n : ns)
            out.emplace_back(std::move(n), p);
    }
    return out;
}

std::vector<BasisMember> enumerate_basis(const EllipticParams& params, int m_max,
                                         const SolverOptions& opts, int threads)
{
    if (m_max < 0)
        throw std::invalid_argument("m_max must be nonnegative");
    std::vector<HarmonicIndex> indices;
    for (int m = 0; m <= m_max; ++m)
        for (auto& idx : enumerate_indices(params.k(), m))
            indices.push_back(std::move(idx));
    std::vector<std::optional<BasisMember>> slots(indices.size());
    parallel_for(indices.size(), threads, [&](std::size_t i) {
        StieltjesQuasiPoly sp = make_quasi_poly(params, indices[i], opts);
        Harmonic F = build_ellipsoidal(sp);
        Harmonic G = build_sphero_conal(sp);
        slots[i].emplace(BasisMember{std::move(sp), std::move(F), std::move(G)});
    });
    std::vector<BasisMember> out;
    out.reserve(slots.size());
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

Eigen::MatrixXd gram_matrix(std::span<const MultiPoly> polys, const DunklWeights& w, int threads)
{
    const std::size_t n = polys.size();
    Eigen::MatrixXd M(n, n);
    parallel_for(n, threads, [&](std::size_t i) {
        for (std::size_t j = i; j < n; ++j)
            M(i, j) = sphere_inner_product(polys[i], polys[j], w);
    });
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            M(i, j) = M(j, i);
    return M;
}

double max_normalized_off_diagonal(const Eigen::MatrixXd& gram)
{
    double worst = 0.0;
    for (Eigen::Index i = 0; i < gram.rows(); ++i)
        for (Eigen::Index j = 0; j < gram.cols(); ++j)
            if (i != j)
                worst = std::max(worst, std::abs(gram(i, j)) / std::sqrt(gram(i, i) * gram(j, j)));
    return worst;
}

} // namespace genharm
