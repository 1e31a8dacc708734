#ifndef ULAB_FAMILY_HPP
#define ULAB_FAMILY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "ulab/laurent.hpp"
#include "ulab/plfunction.hpp"
#include "ulab/trilaurent.hpp"

namespace ulab {

/** Fixed data for the braid family: the three-variable polynomial of the
 *  link the construction does surgery on (14 terms, transcribed verbatim)
 *  and the pairwise linking numbers of its components. */
struct FamilyConstants {
    TriLaurentPoly delta_l;
    std::int64_t lk_k_c1 = 4; // first axis links the knot 4 times
    std::int64_t lk_k_c2 = 2; // second axis twice
    std::int64_t lk_c1_c2 = 0;
};

const FamilyConstants& family_constants();

/* Closed form of the n-th Alexander polynomial: three high pairs
 * t^{2n+16} - t^{2n+15}, t^{2n+12} - t^{2n+11}, t^{2n+10} - t^{2n+9},
 * a middle chain t^9 (1 + sum_{i=1}^{n-1} (t^{2i} - t^{2i-1})), and the
 * fixed tail -t^7 + t^6 - t^5 + t^4 - t + 1. Degree 2n + 16. n >= 1. */
LaurentPoly family_alexander(std::int64_t n);

/* Same polynomial via the multivariable route: substitute
 * (x, y, z) -> (t, t^4, t^{2(n+1)}) in delta_l, then divide exactly by
 * (t^4 - 1)(t + 1) and normalize. */
LaurentPoly family_alexander_torres(std::int64_t n);

/* Closed-form upsilon: slopes -(n+8), -(n+4), -(n-1) on [0, 1/2],
 * [1/2, 4/5], [4/5, 1], mirrored on [1, 2]. Integral -(n + 34/5). */
PLFunction family_upsilon(std::int64_t n);

// family_upsilon(n+1) - family_upsilon(n); equals the trefoil tent
PLFunction family_upsilon_step(std::int64_t n);

// the trefoil tent max(-t, t-2), the increment above
PLFunction trefoil_tent();

// census names for the small members, where identified
std::optional<std::string> family_census_name(std::int64_t n);

} // namespace ulab

#endif
