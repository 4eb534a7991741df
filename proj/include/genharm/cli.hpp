// Command-line front end. Every subcommand returns 0 (ok), 1 (a check failed) or
// 2 (bad input or a solver that did not converge).
#pragma once

#include "genharm/multipoly.hpp"
#include "genharm/stieltjes.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace genharm {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitError = 2;

struct RunConfig {
    std::string subcommand;
    std::string params_file;
    std::string output;
    double tol = 1e-12;
    int max_iter = 200;
    std::uint64_t seed = 20240917;
    int threads = 1;
    bool json = false;

    std::vector<double> a;
    std::vector<double> alpha;
    std::vector<int> n;
    std::vector<int> p;
    int max_degree = -1;
    double check_tol = -1.0;

    // dirichlet
    std::vector<double> semi_axes;
    std::optional<double> omega;
    std::string boundary_file;
    std::string eval_file;
    int samples = 100;
};

// The two worked cases with k = 2, a = (0, 3, 5): zeros (1, 2, 4), known eigenvalues and
// explicitly factored harmonics.
struct ReferenceCase {
    std::string name;
    std::vector<double> alpha;
    std::vector<int> n;
    std::vector<int> p;
    std::vector<double> thetas;
    std::vector<double> lambdas;
    double c;
    MultiPoly F;
    MultiPoly G;
};

// alpha0 replaces the weights of the first case; the second uses alpha0 - (1, 1, 0).
std::vector<ReferenceCase> reference_cases(std::optional<std::vector<double>> alpha0 = std::nullopt);

int cmd_zeros(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_harmonic(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gram(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check_niven(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_dirichlet(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify_paper(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv (program name first) and dispatches.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace genharm
