#include "ulab/semigroup.hpp"

#include <algorithm>

#include "ulab/errors.hpp"

namespace ulab {

bool FormalSemigroup::contains(std::int64_t n) const
{
    if (n < 0) return false;
    return !std::binary_search(gaps.begin(), gaps.end(), n);
}

std::vector<std::int64_t> validate_lspace_form(const LaurentPoly& d)
{
    if (d.is_zero() || d.min_degree() != 0 || d.coeff(0) != 1)
        throw NotLSpaceForm("polynomial must have minDegree 0 and constant term +1");
    std::int64_t deg = d.degree();
    if (deg % 2 != 0)
        throw NotLSpaceForm("degree must be even");
    if (!d.is_palindromic())
        throw NotLSpaceForm("coefficients must be palindromic");
    std::int64_t g = deg / 2;

    // partial sums of coefficients = coefficients of d / (1 - t); the
    // alternating +-1 pattern is exactly "every partial sum is 0 or 1"
    std::vector<std::int64_t> gaps;
    BigInt partial = 0;
    for (std::int64_t k = 0; k <= deg; ++k) {
        partial += d.coeff(k);
        if (partial == 0) gaps.push_back(k);
        else if (partial != 1)
            throw NotLSpaceForm("coefficients do not alternate through +1/-1 (partial sum " +
                                partial.str() + " at degree " + std::to_string(k) + ")");
    }
    if (partial != 1)
        throw NotLSpaceForm("value at t = 1 must be +1");
    // implied by palindromy once the partial sums pass, so a miss is a bug here
    if (static_cast<std::int64_t>(gaps.size()) != g)
        throw ContractError("gap count " + std::to_string(gaps.size()) +
                            " differs from genus " + std::to_string(g));
    return gaps;
}

FormalSemigroup formal_semigroup(const LaurentPoly& d)
{
    std::vector<std::int64_t> gaps = validate_lspace_form(d);

    // cross-check: each -1 coefficient opens a gap run, the next +1 closes it
    std::vector<std::int64_t> runs;
    std::int64_t open = -1;
    for (std::int64_t k = 0; k <= d.degree(); ++k) {
        BigInt c = d.coeff(k);
        if (c == -1) open = k;
        else if (c == 1 && open >= 0) {
            for (std::int64_t j = open; j < k; ++j) runs.push_back(j);
            open = -1;
        }
    }
    if (runs != gaps)
        throw ContractError("semigroup gap extraction routes disagree");

    FormalSemigroup s;
    s.genus = d.degree() / 2;
    s.gaps = std::move(gaps);
    return s;
}

std::optional<std::pair<std::int64_t, std::int64_t>>
is_closed_under_addition(const FormalSemigroup& s)
{
    std::vector<std::int64_t> members;
    for (std::int64_t n = 0; n < 2 * s.genus; ++n)
        if (s.contains(n)) members.push_back(n);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i; j < members.size(); ++j)
            if (!s.contains(members[i] + members[j]))
                return std::make_pair(members[i], members[j]);
    return std::nullopt;
}

} // namespace ulab
