#include "genharm/cli.hpp"

#include "genharm/dirichlet.hpp"
#include "genharm/errors.hpp"
#include "genharm/harmonics.hpp"
#include "genharm/json_io.hpp"
#include "genharm/niven.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

namespace genharm {

using nlohmann::json;

namespace {

// Raised for check failures that should map to exit code 1.
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void configure_logging()
{
    static const bool done = [] {
        auto logger = spdlog::stderr_color_mt("genharm");
        spdlog::set_default_logger(logger);
        spdlog::set_level(spdlog::level::warn);
        if (const char* env = std::getenv("DUNKL_LOG"))
            spdlog::set_level(spdlog::level::from_str(env));
        return true;
    }();
    (void)done;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

// Writes to --output when given, to `out` otherwise.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw std::invalid_argument("cannot write " + path);
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

struct Inputs {
    std::vector<double> a;
    std::vector<double> alpha;
    std::vector<int> n;
    std::vector<int> p;
};

Inputs load_inputs(const RunConfig& cfg)
{
    Inputs in;
    if (!cfg.params_file.empty()) {
        const json j = read_json_file(cfg.params_file);
        if (j.contains("a"))
            in.a = j.at("a").get<std::vector<double>>();
        if (j.contains("alpha"))
            in.alpha = j.at("alpha").get<std::vector<double>>();
        if (j.contains("n"))
            in.n = j.at("n").get<std::vector<int>>();
        if (j.contains("p"))
            in.p = j.at("p").get<std::vector<int>>();
    }
    if (!cfg.a.empty())
        in.a = cfg.a;
    if (!cfg.alpha.empty())
        in.alpha = cfg.alpha;
    if (!cfg.n.empty())
        in.n = cfg.n;
    if (!cfg.p.empty())
        in.p = cfg.p;
    return in;
}

EllipticParams params_from(const Inputs& in)
{
    if (in.a.empty() || in.alpha.empty())
        throw std::invalid_argument("singularities --a and weights --alpha are required");
    return EllipticParams(in.a, DunklWeights(in.alpha));
}

HarmonicIndex index_from(const Inputs& in, int k)
{
    if (in.n.empty())
        throw std::invalid_argument("index --n is required");
    std::vector<int> p = in.p.empty() ? std::vector<int>(k + 1, 0) : in.p;
    return HarmonicIndex(in.n, Parity(p));
}

SolverOptions solver_options(const RunConfig& cfg)
{
    if (!(cfg.tol > 0.0))
        throw std::invalid_argument("--tol must be positive");
    if (cfg.max_iter < 1)
        throw std::invalid_argument("--max-iter must be at least 1");
    if (cfg.threads < 1)
        throw std::invalid_argument("--threads must be at least 1");
    return SolverOptions{cfg.tol, cfg.max_iter};
}

double check_tol(const RunConfig& cfg, double fallback)
{
    if (cfg.check_tol < 0.0)
        return fallback;
    if (cfg.check_tol == 0.0)
        throw std::invalid_argument("--check-tol must be positive");
    return cfg.check_tol;
}

std::string join(const std::vector<int>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string sci(double v)
{
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << v;
    return os.str();
}

// Runs body and maps failures onto the exit-code contract.
template <class Body>
int guarded(std::ostream& err, Body&& body)
{
    try {
        return body();
    } catch (const CheckFailed& e) {
        err << "check failed: " << e.what() << '\n';
        return kExitCheckFailed;
    } catch (const NonConvergence& e) {
        err << "error: " << e.what() << " [residual " << e.residual() << " after " << e.iterations()
            << " iterations]\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

MultiPoly squares_factor(double c0, double c1, double c2, double shift)
{
    std::vector<std::pair<Exponent, double>> t{
        {{2, 0, 0}, c0}, {{0, 2, 0}, c1}, {{0, 0, 2}, c2}};
    if (shift != 0.0)
        t.push_back({{0, 0, 0}, shift});
    return MultiPoly::from_terms(3, t);
}

MultiPoly factored(double c, double shift, const Exponent& px)
{
    MultiPoly f = squares_factor(1.0, -1.0 / 2, -1.0 / 4, shift);
    f = f * squares_factor(1.0 / 2, -1.0, -1.0 / 3, shift);
    f = f * squares_factor(1.0 / 4, 1.0, -1.0, shift);
    return scale(MultiPoly::monomial(px) * f, c);
}

struct CheckRow {
    std::string case_name;
    std::string check;
    double value;
    double tol;
    bool pass() const { return std::isfinite(value) && value <= tol; }
};

} // namespace

std::vector<ReferenceCase> reference_cases(std::optional<std::vector<double>> alpha0)
{
    std::vector<double> w1 = alpha0.value_or(std::vector<double>{229.0 / 54, 71.0 / 54, 25.0 / 6});
    if (w1.size() != 3)
        throw std::invalid_argument("the reference cases need three weights");
    std::vector<double> w2{w1[0] - 1.0, w1[1] - 1.0, w1[2]};
    const double c2 = -192.0 * std::sqrt(15.0) * std::sqrt(6.0);
    return {
        ReferenceCase{"case1", w1, {2, 1}, {0, 0, 0}, {1, 2, 4}, {1120.0 / 9, -119.0 / 3}, -192.0,
                      factored(-192.0, -1.0, {0, 0, 0}), factored(-192.0, 0.0, {0, 0, 0})},
        ReferenceCase{"case2", w2, {2, 1}, {1, 1, 0}, {1, 2, 4}, {2855.0 / 18, -440.0 / 9}, c2,
                      factored(c2, -1.0, {1, 1, 0}), factored(c2, 0.0, {1, 1, 0})},
    };
}

int cmd_zeros(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const Inputs in = load_inputs(cfg);
        const EllipticParams params = params_from(in);
        const HarmonicIndex index = index_from(in, params.k());
        const StieltjesQuasiPoly sp = make_quasi_poly(params, index, solver_options(cfg));
        Sink sink(cfg.output, out);
        sink.get() << to_json(sp).dump(2) << '\n';
        return kExitOk;
    });
}

int cmd_harmonic(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const Inputs in = load_inputs(cfg);
        const EllipticParams params = params_from(in);
        const HarmonicIndex index = index_from(in, params.k());
        const StieltjesQuasiPoly sp = make_quasi_poly(params, index, solver_options(cfg));
        json j;
        j["ellipsoidal"] = to_json(build_ellipsoidal(sp));
        j["sphero_conal"] = to_json(build_sphero_conal(sp));
        Sink sink(cfg.output, out);
        sink.get() << j.dump(2) << '\n';
        return kExitOk;
    });
}

int cmd_gram(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const EllipticParams params = params_from(load_inputs(cfg));
        const int m_max = cfg.max_degree < 0 ? 6 : cfg.max_degree;
        const double tol = check_tol(cfg, 1e-10);
        const auto basis = enumerate_basis(params, m_max, solver_options(cfg), cfg.threads);

        std::map<int, std::vector<MultiPoly>> by_degree;
        std::vector<MultiPoly> all;
        for (const auto& b : basis) {
            by_degree[b.quasi.index.degree()].push_back(b.sphero_conal.poly);
            all.push_back(b.sphero_conal.poly);
        }

        json rows = json::array();
        bool ok = true;
        for (int m = 0; m <= m_max; ++m) {
            std::uint64_t expected = 0;
            for (unsigned bits = 0; bits < (1u << params.nvars()); ++bits) {
                std::vector<int> p(params.nvars());
                for (int j = 0; j < params.nvars(); ++j)
                    p[j] = (bits >> j) & 1;
                expected += harmonic_space_dimension(m, Parity(p), params.k());
            }
            const auto& polys = by_degree[m];
            const double off = polys.size() > 1
                ? max_normalized_off_diagonal(gram_matrix(polys, params.alpha(), cfg.threads))
                : 0.0;
            const bool pass = polys.size() == expected && off <= tol;
            ok = ok && pass;
            rows.push_back({{"degree", m}, {"count", polys.size()}, {"expected", expected},
                            {"max_off_diagonal", off}, {"pass", pass}});
        }
        const double off_all = all.size() > 1
            ? max_normalized_off_diagonal(gram_matrix(all, params.alpha(), cfg.threads))
            : 0.0;
        ok = ok && off_all <= tol;

        Sink sink(cfg.output, out);
        if (cfg.json) {
            sink.get() << json{{"degrees", rows}, {"max_off_diagonal_all", off_all},
                               {"tolerance", tol}, {"pass", ok}}
                              .dump(2)
                       << '\n';
        } else {
            auto& os = sink.get();
            os << "degree  count  expected  max_off_diagonal  status\n";
            for (const auto& r : rows)
                os << std::setw(6) << r["degree"].get<int>() << std::setw(7)
                   << r["count"].get<std::size_t>() << std::setw(10)
                   << r["expected"].get<std::uint64_t>() << std::setw(18)
                   << sci(r["max_off_diagonal"].get<double>()) << "  "
                   << (r["pass"].get<bool>() ? "PASS" : "FAIL") << '\n';
            os << "all degrees: max_off_diagonal " << sci(off_all) << " (tolerance " << sci(tol)
               << ")\n";
        }
        if (!ok)
            throw CheckFailed("Gram matrix not diagonal or basis count mismatch");
        return kExitOk;
    });
}

int cmd_check_niven(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const Inputs in = load_inputs(cfg);
        const EllipticParams params = params_from(in);
        const SolverOptions opts = solver_options(cfg);
        const double tol = check_tol(cfg, 1e-8);

        std::vector<StieltjesQuasiPoly> quasi;
        if (!in.n.empty()) {
            quasi.push_back(make_quasi_poly(params, index_from(in, params.k()), opts));
        } else {
            const int m_max = cfg.max_degree < 0 ? 6 : cfg.max_degree;
            for (auto& b : enumerate_basis(params, m_max, opts, cfg.threads))
                quasi.push_back(std::move(b.quasi));
        }

        json rows = json::array();
        double worst = 0.0;
        for (const auto& sp : quasi) {
            const NivenContext ctx(params, sp.index.degree());
            const double dev =
                relative_difference(niven_transform(build_sphero_conal(sp), ctx), build_ellipsoidal(sp).poly);
            worst = std::max(worst, dev);
            rows.push_back({{"n", sp.index.n()}, {"p", sp.index.p().bits()},
                            {"degree", sp.index.degree()}, {"deviation", dev}});
        }

        Sink sink(cfg.output, out);
        if (cfg.json) {
            sink.get() << json{{"harmonics", rows}, {"max_deviation", worst}, {"tolerance", tol},
                               {"pass", worst <= tol}}
                              .dump(2)
                       << '\n';
        } else {
            auto& os = sink.get();
            for (const auto& r : rows)
                os << "n=" << join(r["n"].get<std::vector<int>>())
                   << " p=" << join(r["p"].get<std::vector<int>>()) << " m=" << r["degree"].get<int>()
                   << " deviation=" << sci(r["deviation"].get<double>()) << '\n';
            os << "max deviation " << sci(worst) << " (tolerance " << sci(tol) << ")\n";
        }
        if (!(worst <= tol))
            throw CheckFailed("Niven transform deviates by " + sci(worst));
        return kExitOk;
    });
}

int cmd_dirichlet(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        if (cfg.semi_axes.empty())
            throw std::invalid_argument("--semi-axes is required");
        if (cfg.boundary_file.empty())
            throw std::invalid_argument("--boundary is required");
        const Inputs in = load_inputs(cfg);
        const Ellipsoid ell(cfg.semi_axes);
        const DunklWeights w(in.alpha.empty() ? std::vector<double>(ell.nvars(), 0.0) : in.alpha);
        const MultiPoly f = poly_from_json(read_json_file(cfg.boundary_file));
        const int m_max = cfg.max_degree < 0 ? std::max(f.degree(), 0) : cfg.max_degree;
        const double omega = cfg.omega.value_or(default_omega(ell));
        const double tol = check_tol(cfg, 1e-8);

        const DirichletBasis basis = build_basis(ell, w, omega, m_max, solver_options(cfg), cfg.threads);
        const std::vector<double> coeffs = expand_boundary(f, basis);
        const MultiPoly u = synthesize(coeffs, basis);
        const double residual = boundary_residual(u, f, ell, cfg.samples, cfg.seed);
        const double data_scale = std::max(ell.pull_back(f).max_abs_coefficient(), 1e-300);

        json j;
        j["u"] = to_json(u);
        j["coefficients"] = coeffs;
        j["boundary_residual"] = residual;
        j["omega"] = omega;
        json basis_json = json::array();
        for (const auto& e : basis.entries)
            basis_json.push_back({{"n", e.index().n()}, {"p", e.index().p().bits()}});
        j["basis"] = basis_json;
        if (!cfg.eval_file.empty()) {
            json evals = json::array();
            for (const auto& pt : read_json_file(cfg.eval_file)) {
                const auto x = pt.get<std::vector<double>>();
                const SolutionSample s = evaluate_solution(u, x, ell);
                json row{{"x", x}, {"value", s.value}, {"inside", s.inside}};
                if (s.shell_delta)
                    row["shell_delta"] = *s.shell_delta;
                evals.push_back(row);
            }
            j["evaluations"] = evals;
        }
        Sink sink(cfg.output, out);
        sink.get() << j.dump(2) << '\n';
        if (!(residual <= tol * data_scale))
            throw CheckFailed("boundary residual " + sci(residual) + " exceeds " + sci(tol * data_scale));
        return kExitOk;
    });
}

int cmd_verify_paper(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const SolverOptions opts = solver_options(cfg);
        std::optional<std::vector<double>> alpha0;
        if (!cfg.alpha.empty())
            alpha0 = cfg.alpha;
        const std::vector<double> a{0.0, 3.0, 5.0};
        const double nan = std::numeric_limits<double>::quiet_NaN();

        std::vector<CheckRow> rows;
        for (const ReferenceCase& rc : reference_cases(alpha0)) {
            const EllipticParams params(a, DunklWeights(rc.alpha));
            const HarmonicIndex index(rc.n, Parity(rc.p));
            auto add = [&](const std::string& check, double value, double tol) {
                rows.push_back(CheckRow{rc.name, check, value, tol});
            };

            std::optional<StieltjesQuasiPoly> sp;
            try {
                sp = make_quasi_poly(params, index, opts);
            } catch (const std::exception& e) {
                spdlog::warn("{}: quasi-polynomial construction failed: {}", rc.name, e.what());
            }
            if (sp) {
                double dz = 0.0, dl = 0.0;
                for (std::size_t l = 0; l < rc.thetas.size(); ++l)
                    dz = std::max(dz, std::abs(sp->thetas.at(l) - rc.thetas[l]));
                for (std::size_t i = 0; i < rc.lambdas.size(); ++i)
                    dl = std::max(dl, std::abs(sp->lambdas.at(i) - rc.lambdas[i]) / std::abs(rc.lambdas[i]));
                add("zeros", dz, 1e-10);
                add("eigenvalues", dl, 1e-9);
                add("constant", std::abs(normalization_constant(*sp) - rc.c) / std::abs(rc.c), 1e-12);
                add("ellipsoidal", relative_difference(build_ellipsoidal(*sp).poly, rc.F), 1e-10);
                add("sphero_conal", relative_difference(build_sphero_conal(*sp).poly, rc.G), 1e-10);
            } else {
                for (const char* check : {"zeros", "eigenvalues", "constant", "ellipsoidal", "sphero_conal"})
                    add(check, nan, 0.0);
            }
            add("dunkl_harmonic_F",
                dunkl_laplacian(rc.F, params.alpha()).max_abs_coefficient() / rc.F.max_abs_coefficient(), 1e-9);
            add("dunkl_harmonic_G",
                dunkl_laplacian(rc.G, params.alpha()).max_abs_coefficient() / rc.G.max_abs_coefficient(), 1e-9);
            const NivenContext ctx(params, index.degree());
            add("niven", relative_difference(niven_transform(rc.G, ctx), rc.F), 1e-8);
        }

        bool ok = true;
        std::string failing;
        for (const auto& r : rows)
            if (!r.pass()) {
                ok = false;
                failing += (failing.empty() ? "" : ", ") + r.case_name + "/" + r.check;
            }

        Sink sink(cfg.output, out);
        if (cfg.json) {
            json checks = json::array();
            for (const auto& r : rows)
                checks.push_back({{"case", r.case_name}, {"check", r.check}, {"value", r.value},
                                  {"tolerance", r.tol}, {"pass", r.pass()}});
            sink.get() << json{{"checks", checks}, {"pass", ok}}.dump(2) << '\n';
        } else {
            auto& os = sink.get();
            os << std::left << std::setw(7) << "case" << std::setw(18) << "check" << std::setw(12)
               << "value" << std::setw(12) << "tolerance" << "status\n";
            for (const auto& r : rows)
                os << std::setw(7) << r.case_name << std::setw(18) << r.check << std::setw(12)
                   << sci(r.value) << std::setw(12) << sci(r.tol) << (r.pass() ? "PASS" : "FAIL") << '\n';
            os << std::right;
        }
        if (!ok)
            throw CheckFailed(failing);
        return kExitOk;
    });
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    configure_logging();
    RunConfig cfg;
    CLI::App app{"Generalized ellipsoidal and sphero-conal harmonics", "genharm"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--params", cfg.params_file, "JSON file with a, alpha, n, p")
            ->check(CLI::ExistingFile);
        sub->add_option("--a", cfg.a, "singularities a_0 < .. < a_k")->delimiter(',');
        sub->add_option("--alpha", cfg.alpha, "weights alpha_j > -1/2")->delimiter(',');
        sub->add_option("--tol", cfg.tol, "zero-solver tolerance")->capture_default_str();
        sub->add_option("--max-iter", cfg.max_iter, "zero-solver iteration limit")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
        sub->add_option("--threads", cfg.threads, "worker threads")->capture_default_str();
        sub->add_flag("--json", cfg.json, "machine-readable output");
        sub->add_option("--output", cfg.output, "write the result to a file");
    };
    auto indexed = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "zero counts n_1..n_k")->delimiter(',');
        sub->add_option("--p", cfg.p, "parity p_0..p_k")->delimiter(',');
    };

    auto* zeros = app.add_subcommand("zeros", "zeros and eigenvalues of a Stieltjes quasi-polynomial");
    common(zeros);
    indexed(zeros);
    auto* harmonic = app.add_subcommand("harmonic", "ellipsoidal and sphero-conal harmonic polynomials");
    common(harmonic);
    indexed(harmonic);
    auto* gram = app.add_subcommand("gram", "orthogonality of the sphero-conal basis per degree");
    common(gram);
    gram->add_option("--max-degree", cfg.max_degree, "largest degree (default 6)");
    gram->add_option("--check-tol", cfg.check_tol, "off-diagonal tolerance (default 1e-10)");
    auto* niven = app.add_subcommand("check-niven", "Niven transform of G against F");
    common(niven);
    indexed(niven);
    niven->add_option("--max-degree", cfg.max_degree, "largest degree when --n is absent (default 6)");
    niven->add_option("--check-tol", cfg.check_tol, "relative tolerance (default 1e-8)");
    auto* dirichlet = app.add_subcommand("dirichlet", "Dirichlet problem on a solid ellipsoid");
    common(dirichlet);
    dirichlet->add_option("--semi-axes", cfg.semi_axes, "b_0 > .. > b_k > 0")->delimiter(',')->required();
    dirichlet->add_option("--omega", cfg.omega, "shift omega (default b_0^2)");
    dirichlet->add_option("--boundary", cfg.boundary_file, "boundary polynomial (JSON)")
        ->check(CLI::ExistingFile)
        ->required();
    dirichlet->add_option("--eval", cfg.eval_file, "points to evaluate u at (JSON array)")
        ->check(CLI::ExistingFile);
    dirichlet->add_option("--max-degree", cfg.max_degree, "basis degree (default deg f)");
    dirichlet->add_option("--samples", cfg.samples, "boundary sample count")->capture_default_str();
    dirichlet->add_option("--check-tol", cfg.check_tol, "boundary tolerance relative to data (default 1e-8)");
    auto* verify = app.add_subcommand("verify-paper", "regression over the two worked reference cases");
    common(verify);

    std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rev.begin(), rev.end());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (cfg.subcommand == "zeros")
        return cmd_zeros(cfg, out, err);
    if (cfg.subcommand == "harmonic")
        return cmd_harmonic(cfg, out, err);
    if (cfg.subcommand == "gram")
        return cmd_gram(cfg, out, err);
    if (cfg.subcommand == "check-niven")
        return cmd_check_niven(cfg, out, err);
    if (cfg.subcommand == "dirichlet")
        return cmd_dirichlet(cfg, out, err);
    return cmd_verify_paper(cfg, out, err);
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    return run_cli(std::vector<std::string>(argv, argv + argc), out, err);
}

} // namespace genharm
