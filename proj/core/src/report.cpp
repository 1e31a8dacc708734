#include "ulab/report.hpp"

#include <nlohmann/json.hpp>

#include "ulab/staircase.hpp"

namespace ulab {

InvariantReport report(const LaurentPoly& delta, std::string name)
{
    InvariantReport r;
    r.name = std::move(name);
    FormalSemigroup s = formal_semigroup(delta);
    r.genus = s.genus;
    r.tau = s.genus;
    GapStaircase sc = gap_staircase(s.gaps, s.genus);
    r.upsilon = legendre_upsilon(convex_minorant(sc));
    r.integral = pl_integrate(r.upsilon);
    r.minus3_integral = Rational(-3) * r.integral;
    r.omega = r.minus3_integral - Rational(2 * r.tau);
    r.is_integral = is_integer(r.minus3_integral);
    r.witness = is_closed_under_addition(s);
    r.semigroup_closed = !r.witness.has_value();
    return r;
}

std::string report_to_json(const InvariantReport& r)
{
    nlohmann::json j;
    j["name"] = r.name;
    j["genus"] = r.genus;
    j["tau"] = r.tau;
    nlohmann::json ups = nlohmann::json::array();
    for (const auto& [t, v] : r.upsilon.breakpoints())
        ups.push_back({to_fraction_string(t), to_fraction_string(v)});
    j["upsilon"] = std::move(ups);
    j["integral"] = to_fraction_string(r.integral);
    j["minus3I"] = to_fraction_string(r.minus3_integral);
    j["omega"] = to_fraction_string(r.omega);
    j["integral_verdict"] = r.is_integral;
    j["semigroup_closed"] = r.semigroup_closed;
    if (r.witness)
        j["witness"] = {r.witness->first, r.witness->second};
    else
        j["witness"] = nullptr;
    return j.dump();
}

} // namespace ulab
