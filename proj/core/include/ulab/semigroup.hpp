#ifndef ULAB_SEMIGROUP_HPP
#define ULAB_SEMIGROUP_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ulab/laurent.hpp"

namespace ulab {

/** Complement of the gap set of a validated Alexander polynomial:
 *  S = Z_{>=0} \ {c_1 < ... < c_g}, with |gaps| = genus = deg/2 and every
 *  integer >= 2*genus a member. Need not be closed under addition. */
struct FormalSemigroup {
    std::int64_t genus = 0;
    std::vector<std::int64_t> gaps; // sorted ascending, all in [1, 2*genus)

    bool contains(std::int64_t n) const;
};

/* Check d = 1 + (t-1)(t^{c_1} + ... + t^{c_g}): minDegree 0, constant +1,
 * even degree, palindromic coefficients, and nonzero coefficients
 * alternating +1/-1 (equivalently all partial sums in {0,1}). Those force
 * exactly deg/2 gaps. Returns c_1 < ... < c_g. Throws NotLSpaceForm
 * otherwise. */
std::vector<std::int64_t> validate_lspace_form(const LaurentPoly& d);

/* Gap extraction re-derived two ways: partial sums of the coefficients
 * (power-series division by 1 - t through degree 2g) against a direct
 * parse of the sign runs. A mismatch is a ContractError. */
FormalSemigroup formal_semigroup(const LaurentPoly& d);

/* Scan members a <= b in [0, 2*genus) in lexicographic order; any sum that
 * leaves S is returned as the first failing pair. Sums >= 2*genus are
 * always members, so the window is complete. */
std::optional<std::pair<std::int64_t, std::int64_t>>
is_closed_under_addition(const FormalSemigroup& s);

} // namespace ulab

#endif
