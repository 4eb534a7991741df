// JSON encodings shared by the CLI and by external consumers.
//
// Polynomial: {"nvars": int, "terms": [{"exp": [int, ...], "coef": float}, ...]} with terms in
// ascending graded-lex order and shortest round-trip decimal coefficients.
#pragma once

#include "genharm/harmonics.hpp"
#include "genharm/multipoly.hpp"
#include "genharm/stieltjes.hpp"

#include <json.hpp>

namespace genharm {

nlohmann::json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

// {thetas, lambdas, residual}
nlohmann::json to_json(const StieltjesQuasiPoly& sp);

// {kind, n, p, thetas, lambdas, c, poly}
nlohmann::json to_json(const Harmonic& h);

const char* kind_name(HarmonicKind kind);

} // namespace genharm
