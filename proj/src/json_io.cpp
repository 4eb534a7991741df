#include "genharm/json_io.hpp"

#include "genharm/errors.hpp"

namespace genharm {

nlohmann::json to_json(const MultiPoly& p)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"exp", e}, {"coef", c}});
    return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const nlohmann::json& j)
{
    const int nvars = j.at("nvars").get<int>();
    std::vector<std::pair<Exponent, double>> terms;
    for (const auto& t : j.at("terms"))
        terms.emplace_back(t.at("exp").get<Exponent>(), t.at("coef").get<double>());
    return MultiPoly::from_terms(nvars, terms);
}

nlohmann::json to_json(const StieltjesQuasiPoly& sp)
{
    return {{"thetas", sp.thetas}, {"lambdas", sp.lambdas}, {"residual", sp.residual}};
}

const char* kind_name(HarmonicKind kind)
{
    return kind == HarmonicKind::Ellipsoidal ? "ellipsoidal" : "sphero-conal";
}

nlohmann::json to_json(const Harmonic& h)
{
    return {{"kind", kind_name(h.kind)},
            {"n", h.index.n()},
            {"p", h.index.p().bits()},
            {"thetas", h.source.thetas},
            {"lambdas", h.source.lambdas},
            {"c", h.c},
            {"poly", to_json(h.poly)}};
}

} // namespace genharm
