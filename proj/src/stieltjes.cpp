#include "genharm/stieltjes.hpp"

#include "genharm/errors.hpp"
#include "genharm/roots.hpp"

#include <Eigen/Dense>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

namespace genharm {

EllipticParams::EllipticParams(std::vector<double> a, DunklWeights alpha)
    : a_(std::move(a)), alpha_(std::move(alpha))
{
    if (a_.size() < 2)
        throw std::invalid_argument("need at least two singularities (k >= 1)");
    if (static_cast<int>(a_.size()) != alpha_.size())
        throw std::invalid_argument("a and alpha must have the same length");
    for (std::size_t j = 1; j < a_.size(); ++j)
        if (!(a_[j - 1] < a_[j]))
            throw std::invalid_argument("singularities a_j must be strictly increasing");
}

double EllipticParams::A(int j) const
{
    double prod = 1.0;
    for (int i = 0; i < nvars(); ++i)
        if (i != j)
            prod *= a_[j] - a_[i];
    return prod;
}

EllipticParams EllipticParams::with_shifted_weights(const Parity& p) const
{
    if (static_cast<int>(p.size()) != nvars())
        throw std::invalid_argument("parity has wrong length");
    std::vector<double> shifted = alpha_.values();
    for (int j = 0; j < nvars(); ++j)
        shifted[j] += p[j];
    return EllipticParams(a_, DunklWeights(std::move(shifted)));
}

HarmonicIndex::HarmonicIndex(std::vector<int> n, Parity p) : n_(std::move(n)), p_(std::move(p))
{
    if (n_.empty())
        throw std::invalid_argument("index n must have k >= 1 entries");
    if (p_.size() != n_.size() + 1)
        throw std::invalid_argument("parity must have k + 1 entries");
    for (int v : n_)
        if (v < 0)
            throw std::invalid_argument("index entries must be nonnegative");
}

int HarmonicIndex::n_total() const
{
    return std::accumulate(n_.begin(), n_.end(), 0);
}

int HarmonicIndex::degree() const
{
    return 2 * n_total() + p_.weight();
}

double StieltjesQuasiPoly::eval(double t) const
{
    double v = 1.0;
    const auto& a = params.a();
    for (int j = 0; j < params.nvars(); ++j)
        if (index.p()[j])
            v *= std::sqrt(std::abs(t - a[j]));
    for (double th : thetas)
        v *= t - th;
    return v;
}

namespace {

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

void check_index(const EllipticParams& params, const HarmonicIndex& index)
{
    if (index.k() != params.k())
        throw std::invalid_argument("harmonic index does not match the dimension of the parameters");
}

// Charges alpha_j + p_j + 1/2 of the fixed singularities.
std::vector<double> charges(const EllipticParams& params, const Parity& p)
{
    std::vector<double> c(params.nvars());
    for (int j = 0; j < params.nvars(); ++j)
        c[j] = params.alpha()[j] + p[j] + 0.5;
    return c;
}

struct ResidualEval {
    std::vector<double> value;
    std::vector<double> scale;
};

ResidualEval evaluate_system(std::span<const double> th, std::span<const double> a,
                             std::span<const double> q)
{
    const std::size_t n = th.size();
    ResidualEval r{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t s = 0; s < n; ++s) {
            if (s == l)
                continue;
            const double term = 2.0 / (th[l] - th[s]);
            r.value[l] += term;
            r.scale[l] += std::abs(term);
        }
        for (std::size_t j = 0; j < a.size(); ++j) {
            const double term = q[j] / (th[l] - a[j]);
            r.value[l] += term;
            r.scale[l] += std::abs(term);
        }
    }
    return r;
}

double scaled_sup(const ResidualEval& r)
{
    double m = 0.0;
    for (std::size_t l = 0; l < r.value.size(); ++l)
        m = std::max(m, std::abs(r.value[l]) / std::max(r.scale[l], 1e-300));
    return m;
}

// Electrostatic energy whose gradient is the zero system.
double energy(std::span<const double> th, std::span<const double> a, std::span<const double> q)
{
    double e = 0.0;
    for (std::size_t l = 0; l < th.size(); ++l) {
        for (std::size_t s = l + 1; s < th.size(); ++s)
            e += 2.0 * std::log(std::abs(th[l] - th[s]));
        for (std::size_t j = 0; j < a.size(); ++j)
            e += q[j] * std::log(std::abs(th[l] - a[j]));
    }
    return e;
}

class ZeroSolver {
public:
    ZeroSolver(const EllipticParams& eff, const std::vector<int>& n, const SolverOptions& opts)
        : a_(eff.a()), q_(charges(eff, Parity::zero(eff.nvars()))), opts_(opts)
    {
        for (int j = 1; j <= eff.k(); ++j) {
            const double lo = a_[j - 1];
            const double hi = a_[j];
            for (int i = 0; i < n[j - 1]; ++i) {
                lo_.push_back(lo);
                hi_.push_back(hi);
                theta_.push_back(lo + (i + 1) * (hi - lo) / (n[j - 1] + 1));
            }
        }
    }

    std::vector<double> run()
    {
        const std::size_t n = theta_.size();
        if (n == 0)
            return {};
        int stalls = 0;
        for (int iter = 0; iter < opts_.max_iter; ++iter) {
            const ResidualEval r = evaluate_system(theta_, a_, q_);
            const double res = scaled_sup(r);
            spdlog::debug("zero solver iteration {}: scaled residual {:.3e}", iter, res);
            if (res <= opts_.tol)
                return theta_;
            if (!newton_step(r, res)) {
                spdlog::debug("Newton stagnated at residual {:.3e}; bisection sweeps", res);
                bisection_sweeps(50);
                if (++stalls > opts_.max_iter)
                    break;
            }
        }
        const double res = scaled_sup(evaluate_system(theta_, a_, q_));
        if (res <= opts_.tol)
            return theta_;
        throw NonConvergence("Stieltjes zero solver did not converge in "
                                 + std::to_string(opts_.max_iter) + " iterations (residual "
                                 + sci(res) + ")",
                             res, opts_.max_iter);
    }

private:
    bool feasible_and_clip(std::vector<double>& th) const
    {
        for (std::size_t l = 0; l < th.size(); ++l) {
            if (!std::isfinite(th[l]))
                return false;
            const double margin = 1e-8 * (hi_[l] - lo_[l]);
            th[l] = std::clamp(th[l], lo_[l] + margin, hi_[l] - margin);
        }
        for (std::size_t l = 1; l < th.size(); ++l)
            if (lo_[l] == lo_[l - 1] && !(th[l - 1] < th[l]))
                return false;
        return true;
    }

    bool newton_step(const ResidualEval& r, double res)
    {
        const std::size_t n = theta_.size();
        // J is symmetric and negative definite; solve (-J) d = F.
        Eigen::MatrixXd negJ = Eigen::MatrixXd::Zero(n, n);
        Eigen::VectorXd F(n);
        for (std::size_t l = 0; l < n; ++l) {
            F(l) = r.value[l];
            double diag = 0.0;
            for (std::size_t s = 0; s < n; ++s) {
                if (s == l)
                    continue;
                const double d = theta_[l] - theta_[s];
                const double v = 2.0 / (d * d);
                negJ(l, s) = -v;
                diag += v;
            }
            for (std::size_t j = 0; j < a_.size(); ++j) {
                const double d = theta_[l] - a_[j];
                diag += q_[j] / (d * d);
            }
            negJ(l, l) = diag;
        }
        const Eigen::VectorXd dir = negJ.ldlt().solve(F);
        const double slope = F.dot(dir);
        const double e0 = energy(theta_, a_, q_);
        double step = 1.0;
        for (int t = 0; t < 60; ++t, step *= 0.5) {
            std::vector<double> cand(n);
            for (std::size_t l = 0; l < n; ++l)
                cand[l] = theta_[l] + step * dir(l);
            if (!feasible_and_clip(cand))
                continue;
            const double res_new = scaled_sup(evaluate_system(cand, a_, q_));
            if (res_new < res || energy(cand, a_, q_) >= e0 + 1e-4 * step * slope) {
                theta_ = std::move(cand);
                return true;
            }
        }
        return false;
    }

    // Each equation is decreasing in its own zero between the neighbouring poles.
    void bisection_sweeps(int sweeps)
    {
        const std::size_t n = theta_.size();
        for (int s = 0; s < sweeps; ++s) {
            for (std::size_t l = 0; l < n; ++l) {
                double lo = lo_[l];
                double hi = hi_[l];
                if (l > 0 && lo_[l - 1] == lo_[l])
                    lo = std::max(lo, theta_[l - 1]);
                if (l + 1 < n && lo_[l + 1] == lo_[l])
                    hi = std::min(hi, theta_[l + 1]);
                auto f = [&](double x) {
                    double v = 0.0;
                    for (std::size_t q = 0; q < n; ++q)
                        if (q != l)
                            v += 2.0 / (x - theta_[q]);
                    for (std::size_t j = 0; j < a_.size(); ++j)
                        v += q_[j] / (x - a_[j]);
                    return v;
                };
                auto df = [&](double x) {
                    double v = 0.0;
                    for (std::size_t q = 0; q < n; ++q)
                        if (q != l)
                            v -= 2.0 / ((x - theta_[q]) * (x - theta_[q]));
                    for (std::size_t j = 0; j < a_.size(); ++j)
                        v -= q_[j] / ((x - a_[j]) * (x - a_[j]));
                    return v;
                };
                theta_[l] = detail::decreasing_root(f, df, lo, hi);
            }
        }
    }

    std::vector<double> a_;
    std::vector<double> q_;
    SolverOptions opts_;
    std::vector<double> lo_, hi_, theta_;
};

// Univariate polynomials as ascending coefficient vectors.
using Poly1 = std::vector<double>;

Poly1 poly_mul(const Poly1& f, const Poly1& g)
{
    if (f.empty() || g.empty())
        return {};
    Poly1 r(f.size() + g.size() - 1, 0.0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            r[i + j] += f[i] * g[j];
    return r;
}

Poly1 poly_add(Poly1 f, const Poly1& g, double s = 1.0)
{
    if (f.size() < g.size())
        f.resize(g.size(), 0.0);
    for (std::size_t i = 0; i < g.size(); ++i)
        f[i] += s * g[i];
    return f;
}

Poly1 poly_derivative(const Poly1& f)
{
    if (f.size() <= 1)
        return {0.0};
    Poly1 r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i)
        r[i - 1] = static_cast<double>(i) * f[i];
    return r;
}

Poly1 from_roots(std::span<const double> roots, std::ptrdiff_t skip = -1)
{
    Poly1 r{1.0};
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(roots.size()); ++i)
        if (i != skip)
            r = poly_mul(r, Poly1{-roots[i], 1.0});
    return r;
}

double max_abs(const Poly1& f)
{
    double m = 0.0;
    for (double c : f)
        m = std::max(m, std::abs(c));
    return m;
}

// Residual split into the lambda-free part and one column per lambda_i.
struct FuchsianSystem {
    Poly1 base;
    std::vector<Poly1> columns;
    double scale = 0.0;
};

FuchsianSystem assemble_fuchsian(const EllipticParams& params, const HarmonicIndex& index,
                                 std::span<const double> thetas)
{
    const int nv = params.nvars();
    const auto& a = params.a();
    const auto& p = index.p();
    const Poly1 P = from_roots(a);
    std::vector<Poly1> Pj(nv);
    for (int j = 0; j < nv; ++j)
        Pj[j] = from_roots(a, j);

    const Poly1 u = from_roots(thetas);
    const Poly1 du = poly_derivative(u);
    const Poly1 ddu = poly_derivative(du);

    Poly1 first_order{0.0};  // sum_j (alpha_j + p_j + 1/2) P_j
    Poly1 half_parity{0.0};  // sum_j (p_j / 2) P_j
    Poly1 plain{0.0};        // sum_j (alpha_j + 1/2) P_j
    Poly1 parity_sq{0.0};    // sum_j (p_j / 2) P_j^2
    Poly1 pole_terms{0.0};   // sum_j p_j alpha_j A_j P_j / 2
    for (int j = 0; j < nv; ++j) {
        const double alpha = params.alpha()[j];
        first_order = poly_add(first_order, Pj[j], alpha + p[j] + 0.5);
        plain = poly_add(plain, Pj[j], alpha + 0.5);
        if (p[j]) {
            half_parity = poly_add(half_parity, Pj[j], 0.5);
            parity_sq = poly_add(parity_sq, poly_mul(Pj[j], Pj[j]), 0.5);
            pole_terms = poly_add(pole_terms, Pj[j], 0.5 * alpha * params.A(j));
        }
    }
    Poly1 zero_order = poly_mul(half_parity, half_parity);
    zero_order = poly_add(zero_order, parity_sq, -1.0);
    zero_order = poly_add(zero_order, poly_mul(half_parity, plain));
    zero_order = poly_add(zero_order, pole_terms, -1.0);

    const std::vector<Poly1> pieces = {
        poly_mul(poly_mul(P, P), ddu),
        poly_mul(poly_mul(P, first_order), du),
        poly_mul(zero_order, u),
    };
    FuchsianSystem sys;
    sys.base = {0.0};
    for (const auto& piece : pieces) {
        sys.base = poly_add(sys.base, piece);
        sys.scale = std::max(sys.scale, max_abs(piece));
    }
    const Poly1 Pu = poly_mul(P, u);
    Poly1 power{1.0};
    for (int i = 0; i < params.k(); ++i) {
        sys.columns.push_back(poly_mul(Pu, power));
        power = poly_mul(power, Poly1{0.0, 1.0});
    }
    return sys;
}

} // namespace

std::vector<double> electrostatic_residual(std::span<const double> thetas,
                                           const EllipticParams& params,
                                           const HarmonicIndex& index)
{
    check_index(params, index);
    const auto& a = params.a();
    for (std::size_t l = 0; l < thetas.size(); ++l) {
        for (std::size_t s = l + 1; s < thetas.size(); ++s)
            if (thetas[l] == thetas[s])
                throw std::invalid_argument("coincident zeros");
        for (double aj : a)
            if (thetas[l] == aj)
                throw std::invalid_argument("zero coincides with a singularity");
    }
    return evaluate_system(thetas, a, charges(params, index.p())).value;
}

double scaled_residual(std::span<const double> thetas, const EllipticParams& params,
                       const HarmonicIndex& index)
{
    electrostatic_residual(thetas, params, index);
    return scaled_sup(evaluate_system(thetas, params.a(), charges(params, index.p())));
}

std::vector<double> solve_zeros(const EllipticParams& params, const HarmonicIndex& index,
                                const SolverOptions& opts)
{
    check_index(params, index);
    // A parity only shifts the weights: the p = 0 problem with alpha + p.
    const EllipticParams effective = params.with_shifted_weights(index.p());
    return ZeroSolver(effective, index.n(), opts).run();
}

double lambda_top(const EllipticParams& params, const HarmonicIndex& index)
{
    check_index(params, index);
    const double half_m = 0.5 * index.degree();
    return -half_m * (half_m + params.alpha().sum() + 0.5 * (params.k() - 1));
}

std::vector<double> fuchsian_residual(const EllipticParams& params, const HarmonicIndex& index,
                                      std::span<const double> thetas,
                                      std::span<const double> lambdas)
{
    check_index(params, index);
    if (static_cast<int>(lambdas.size()) != params.k())
        throw std::invalid_argument("need k eigenvalue parameters");
    const FuchsianSystem sys = assemble_fuchsian(params, index, thetas);
    Poly1 r = sys.base;
    for (int i = 0; i < params.k(); ++i)
        r = poly_add(r, sys.columns[i], lambdas[i]);
    return r;
}

std::vector<double> accessory_lambdas(const EllipticParams& params, const HarmonicIndex& index,
                                      std::span<const double> thetas)
{
    check_index(params, index);
    const FuchsianSystem sys = assemble_fuchsian(params, index, thetas);
    std::size_t rows = sys.base.size();
    for (const auto& c : sys.columns)
        rows = std::max(rows, c.size());
    const int k = params.k();
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(rows, k);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(rows);
    for (std::size_t r = 0; r < sys.base.size(); ++r)
        rhs(r) = -sys.base[r];
    double scale = sys.scale;
    for (int i = 0; i < k; ++i) {
        for (std::size_t r = 0; r < sys.columns[i].size(); ++r)
            M(r, i) = sys.columns[i][r];
    }
    const Eigen::VectorXd lam = M.colPivHouseholderQr().solve(rhs);
    std::vector<double> lambdas(lam.data(), lam.data() + k);
    for (int i = 0; i < k; ++i)
        scale = std::max(scale, std::abs(lambdas[i]) * max_abs(sys.columns[i]));

    const Poly1 res = fuchsian_residual(params, index, thetas, lambdas);
    const double rel = scale > 0.0 ? max_abs(res) / scale : 0.0;
    if (rel > 1e-9)
        throw ResidualTooLarge("zeros are not consistent with an eigen-solution (relative residual "
                                   + sci(rel) + ")",
                               rel);
    return lambdas;
}

StieltjesQuasiPoly make_quasi_poly(const EllipticParams& params, const HarmonicIndex& index,
                                   const SolverOptions& opts)
{
    std::vector<double> thetas = solve_zeros(params, index, opts);
    std::vector<double> lambdas = accessory_lambdas(params, index, thetas);
    const double res = thetas.empty() ? 0.0 : scaled_residual(thetas, params, index);
    return StieltjesQuasiPoly{params, index, std::move(thetas), std::move(lambdas), res};
}

} // namespace genharm
