#include "ulab/algebraic.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "ulab/errors.hpp"

namespace ulab {

MultiplicitySequence::MultiplicitySequence(std::vector<std::int64_t> ms) : entries(std::move(ms))
{
    for (std::int64_t m : entries)
        if (m < 2) throw InvalidParameters("multiplicities must be >= 2, got " + std::to_string(m));
    std::sort(entries.begin(), entries.end(), std::greater<>());
}

std::int64_t MultiplicitySequence::milnor() const
{
    std::int64_t s = 0;
    for (std::int64_t m : entries) s += m * (m - 1);
    return s;
}

std::int64_t MultiplicitySequence::genus() const { return milnor() / 2; }

std::int64_t MultiplicitySequence::omega() const
{
    std::int64_t s = 0;
    for (std::int64_t m : entries) s += m - 1;
    return s;
}

std::int64_t MultiplicitySequence::minus3_integral() const
{
    std::int64_t s = 0;
    for (std::int64_t m : entries) s += m * m - 1;
    return s;
}

MultiplicitySequence multiplicity_sequence(std::int64_t p, std::int64_t q)
{
    if (p < 2 || q <= p || std::gcd(p, q) != 1)
        throw InvalidParameters("need coprime 2 <= p < q, got (" + std::to_string(p) + ", " +
                                std::to_string(q) + ")");
    std::vector<std::int64_t> ms;
    std::int64_t a = p;
    std::int64_t b = q;
    while (a > 1) {
        ms.push_back(a);
        std::int64_t r = b - a;
        b = std::max(a, r);
        a = std::min(a, r);
    }
    return MultiplicitySequence(std::move(ms));
}

PLFunction upsilon_block(std::int64_t m)
{
    if (m < 2) throw InvalidParameters("block multiplicity must be >= 2");
    std::vector<PLFunction::Point> pts;
    pts.reserve(static_cast<std::size_t>(m) + 1);
    for (std::int64_t i = 0; i <= m; ++i)
        pts.emplace_back(Rational(2 * i, m), Rational(i * (i - m)));
    return PLFunction(std::move(pts));
}

PLFunction upsilon_from_mults(const MultiplicitySequence& ms)
{
    PLFunction total;
    for (std::int64_t m : ms.entries) total = total + upsilon_block(m);
    return total;
}

SingularityReport singularity_report(const MultiplicitySequence& ms)
{
    SingularityReport r;
    r.mults = ms;
    r.milnor = ms.milnor();
    r.genus = ms.genus();
    r.omega = ms.omega();
    r.minus3_integral = ms.minus3_integral();
    r.upsilon = upsilon_from_mults(ms);
    if (Rational(r.minus3_integral) != Rational(-3) * pl_integrate(r.upsilon))
        throw ContractError("sum m_i^2 - 1 disagrees with -3 times the exact block integral");
    return r;
}

std::string singularity_report_to_json(const SingularityReport& r)
{
    nlohmann::json j;
    j["mults"] = r.mults.entries;
    j["milnor"] = r.milnor;
    j["genus"] = r.genus;
    j["omega"] = r.omega;
    j["minus3I"] = r.minus3_integral;
    nlohmann::json ups = nlohmann::json::array();
    for (const auto& [t, v] : r.upsilon.breakpoints())
        ups.push_back({to_fraction_string(t), to_fraction_string(v)});
    j["upsilon"] = std::move(ups);
    return j.dump();
}

InequalityVerdicts check_inequalities(std::int64_t p, std::int64_t q)
{
    MultiplicitySequence ms = multiplicity_sequence(p, q);
    InequalityVerdicts v;
    v.p = p;
    v.q = q;
    v.omega = ms.omega();
    v.milnor = ms.milnor();
    v.m1 = ms.entries.empty() ? 0 : ms.entries.front();
    v.omega_lt_p_plus_q = v.omega < p + q;
    v.milnor_le_m1_omega = v.milnor <= v.m1 * v.omega;
    return v;
}

LaurentPoly torus_alexander(std::int64_t p, std::int64_t q)
{
    if (p < 2 || q <= p || std::gcd(p, q) != 1)
        throw InvalidParameters("need coprime 2 <= p < q, got (" + std::to_string(p) + ", " +
                                std::to_string(q) + ")");
    auto cyclic = [](std::int64_t n) { return LaurentPoly::from_terms({{0, -1}, {n, 1}}); };
    LaurentPoly numer = cyclic(p * q) * cyclic(1);
    LaurentPoly quot = laurent_divexact(numer, cyclic(p));
    quot = laurent_divexact(quot, cyclic(q));
    return normalize_alexander(quot);
}

} // namespace ulab
