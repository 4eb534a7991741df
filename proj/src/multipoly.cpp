#include "genharm/multipoly.hpp"

#include "genharm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace genharm {

int total_degree(const Exponent& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const
{
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db)
        return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Parity::Parity(std::vector<int> bits) : bits_(std::move(bits))
{
    for (int b : bits_)
        if (b != 0 && b != 1)
            throw std::invalid_argument("parity entries must be 0 or 1");
}

Parity Parity::zero(std::size_t size)
{
    return Parity(std::vector<int>(size, 0));
}

int Parity::weight() const
{
    return std::accumulate(bits_.begin(), bits_.end(), 0);
}

namespace {

void check_same_ring(const MultiPoly& f, const MultiPoly& g)
{
    if (f.nvars() != g.nvars())
        throw DimensionMismatch("polynomials have " + std::to_string(f.nvars()) + " and "
                                + std::to_string(g.nvars()) + " variables");
}

void check_axis(const MultiPoly& f, int j)
{
    if (j < 0 || j >= f.nvars())
        throw AxisOutOfRange("axis " + std::to_string(j) + " out of range for "
                             + std::to_string(f.nvars()) + " variables");
}

} // namespace

MultiPoly::MultiPoly(int nvars) : nvars_(nvars)
{
    if (nvars <= 0)
        throw std::invalid_argument("nvars must be positive");
}

MultiPoly MultiPoly::constant(int nvars, double c)
{
    MultiPoly p(nvars);
    if (c != 0.0)
        p.terms_.emplace(Exponent(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(Exponent e, double c)
{
    MultiPoly p(static_cast<int>(e.size()));
    for (int v : e)
        if (v < 0)
            throw std::invalid_argument("negative exponent");
    if (c != 0.0)
        p.terms_.emplace(std::move(e), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int j)
{
    Exponent e(nvars, 0);
    MultiPoly p(nvars);
    check_axis(p, j);
    e[j] = 1;
    p.terms_.emplace(std::move(e), 1.0);
    return p;
}

MultiPoly MultiPoly::from_terms(int nvars, const std::vector<std::pair<Exponent, double>>& terms)
{
    MultiPoly p(nvars);
    for (const auto& [e, c] : terms) {
        if (static_cast<int>(e.size()) != nvars)
            throw DimensionMismatch("exponent vector has wrong length");
        for (int v : e)
            if (v < 0)
                throw std::invalid_argument("negative exponent");
        // input data is not arithmetic noise: only exact zeros are dropped
        p.terms_[e] += c;
    }
    std::erase_if(p.terms_, [](const auto& kv) { return kv.second == 0.0; });
    return p;
}

int MultiPoly::degree() const
{
    if (terms_.empty())
        return -1;
    return total_degree(terms_.rbegin()->first);
}

bool MultiPoly::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

double MultiPoly::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? 0.0 : it->second;
}

double MultiPoly::max_abs_coefficient() const
{
    double m = 0.0;
    for (const auto& [e, c] : terms_)
        m = std::max(m, std::abs(c));
    return m;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

TermAccumulator::TermAccumulator(int nvars) : nvars_(nvars) {}

void TermAccumulator::add(const Exponent& e, double c)
{
    scale_ = std::max(scale_, std::abs(c));
    terms_[e] += c;
}

void TermAccumulator::note_scale(double magnitude)
{
    scale_ = std::max(scale_, std::abs(magnitude));
}

MultiPoly TermAccumulator::finish() &&
{
    const double cut = kZeroThreshold * scale_;
    std::erase_if(terms_, [cut](const auto& kv) { return std::abs(kv.second) <= cut; });
    MultiPoly p(nvars_);
    p.terms_ = std::move(terms_);
    return p;
}

MultiPoly add(const MultiPoly& f, const MultiPoly& g)
{
    check_same_ring(f, g);
    TermAccumulator acc(f.nvars());
    for (const auto& [e, c] : f.terms())
        acc.add(e, c);
    for (const auto& [e, c] : g.terms())
        acc.add(e, c);
    return std::move(acc).finish();
}

MultiPoly sub(const MultiPoly& f, const MultiPoly& g)
{
    return add(f, -g);
}

MultiPoly mul(const MultiPoly& f, const MultiPoly& g)
{
    check_same_ring(f, g);
    TermAccumulator acc(f.nvars());
    Exponent e(f.nvars());
    for (const auto& [ef, cf] : f.terms()) {
        for (const auto& [eg, cg] : g.terms()) {
            for (int v = 0; v < f.nvars(); ++v)
                e[v] = ef[v] + eg[v];
            acc.add(e, cf * cg);
        }
    }
    return std::move(acc).finish();
}

MultiPoly scale(const MultiPoly& f, double s)
{
    TermAccumulator acc(f.nvars());
    for (const auto& [e, c] : f.terms())
        acc.add(e, s * c);
    return std::move(acc).finish();
}

MultiPoly pow(const MultiPoly& f, int e)
{
    if (e < 0)
        throw std::invalid_argument("negative power");
    MultiPoly result = MultiPoly::constant(f.nvars(), 1.0);
    MultiPoly base = f;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base);
        e >>= 1;
        if (e > 0)
            base = mul(base, base);
    }
    return result;
}

double eval(const MultiPoly& f, std::span<const double> x)
{
    if (static_cast<int>(x.size()) != f.nvars())
        throw DimensionMismatch("evaluation point has wrong dimension");
    double sum = 0.0;
    for (const auto& [e, c] : f.terms()) {
        double term = c;
        for (int v = 0; v < f.nvars(); ++v)
            for (int q = 0; q < e[v]; ++q)
                term *= x[v];
        sum += term;
    }
    return sum;
}

MultiPoly reflect(const MultiPoly& f, int j)
{
    check_axis(f, j);
    std::vector<std::pair<Exponent, double>> terms;
    terms.reserve(f.size());
    for (const auto& [e, c] : f.terms())
        terms.emplace_back(e, (e[j] % 2) ? -c : c);
    return MultiPoly::from_terms(f.nvars(), terms);
}

std::optional<Parity> parity_of(const MultiPoly& f)
{
    if (f.is_zero())
        throw UndefinedParity("the zero polynomial has no parity");
    const Exponent& first = f.terms().begin()->first;
    std::vector<int> bits(f.nvars());
    for (int v = 0; v < f.nvars(); ++v)
        bits[v] = first[v] % 2;
    for (const auto& [e, c] : f.terms())
        for (int v = 0; v < f.nvars(); ++v)
            if (e[v] % 2 != bits[v])
                return std::nullopt;
    return Parity(std::move(bits));
}

std::vector<std::pair<int, MultiPoly>> homogeneous_parts(const MultiPoly& f)
{
    std::map<int, std::vector<std::pair<Exponent, double>>, std::greater<>> groups;
    for (const auto& [e, c] : f.terms())
        groups[total_degree(e)].emplace_back(e, c);
    std::vector<std::pair<int, MultiPoly>> parts;
    for (const auto& [d, terms] : groups)
        parts.emplace_back(d, MultiPoly::from_terms(f.nvars(), terms));
    return parts;
}

MultiPoly partial_derivative(const MultiPoly& f, int j)
{
    check_axis(f, j);
    TermAccumulator acc(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (e[j] == 0)
            continue;
        Exponent d = e;
        d[j] -= 1;
        acc.add(d, c * e[j]);
    }
    return std::move(acc).finish();
}

MultiPoly substitute_squares(const MultiPoly& f)
{
    std::vector<std::pair<Exponent, double>> terms;
    for (const auto& [e, c] : f.terms()) {
        Exponent d = e;
        for (int& v : d)
            v *= 2;
        terms.emplace_back(std::move(d), c);
    }
    return MultiPoly::from_terms(f.nvars(), terms);
}

MultiPoly scale_variables(const MultiPoly& f, std::span<const double> s)
{
    if (static_cast<int>(s.size()) != f.nvars())
        throw DimensionMismatch("scale vector has wrong dimension");
    TermAccumulator acc(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        double k = c;
        for (int v = 0; v < f.nvars(); ++v)
            k *= std::pow(s[v], e[v]);
        acc.add(e, k);
    }
    return std::move(acc).finish();
}

MultiPoly parity_monomial(const Parity& p)
{
    return MultiPoly::monomial(p.bits(), 1.0);
}

MultiPoly radius_squared(int nvars)
{
    std::vector<std::pair<Exponent, double>> terms;
    for (int j = 0; j < nvars; ++j) {
        Exponent e(nvars, 0);
        e[j] = 2;
        terms.emplace_back(std::move(e), 1.0);
    }
    return MultiPoly::from_terms(nvars, terms);
}

double max_abs_difference(const MultiPoly& f, const MultiPoly& g)
{
    check_same_ring(f, g);
    double m = 0.0;
    for (const auto& [e, c] : f.terms())
        m = std::max(m, std::abs(c - g.coefficient(e)));
    for (const auto& [e, c] : g.terms())
        if (!f.terms().contains(e))
            m = std::max(m, std::abs(c));
    return m;
}

double relative_difference(const MultiPoly& f, const MultiPoly& g)
{
    const double s = std::max(f.max_abs_coefficient(), g.max_abs_coefficient());
    if (s == 0.0)
        return 0.0;
    return max_abs_difference(f, g) / s;
}

} // namespace genharm
