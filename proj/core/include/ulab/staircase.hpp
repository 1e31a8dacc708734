#ifndef ULAB_STAIRCASE_HPP
#define ULAB_STAIRCASE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ulab/plfunction.hpp"

namespace ulab {

/** Lattice staircase of a gap set: start at (-g, 0) and take one step per
 *  integer k in [0, 2g): u = (1, 2) when k is a member, h = (1, 0) when k
 *  is a gap. Members and gaps alternate in runs, so the path is the usual
 *  group-by-group staircase ending at (g, 2g). */
struct GapStaircase {
    std::int64_t genus = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> points; // 2g + 1 points
};

/** Vertices of the lower convex hull of a staircase, x strictly increasing,
 *  chord slopes strictly increasing and inside [0, 2]. */
struct ConvexHullVertices {
    std::vector<std::pair<std::int64_t, std::int64_t>> vertices;
};

// throws MalformedStaircase if the walk does not end at (g, 2g)
GapStaircase gap_staircase(const std::vector<std::int64_t>& gaps, std::int64_t genus);

ConvexHullVertices convex_minorant(const GapStaircase& sc);

/* Legendre-Fenchel: upsilon(t) = max_j (t*x_j - y_j) over hull vertices,
 * as an exact PL function on [0, 2]. Convex, 0 at both ends, slope -g
 * at 0+. The max over hull vertices equals the max over all staircase
 * points, since dropped points lie above the minorant. */
PLFunction legendre_upsilon(const ConvexHullVertices& hull);

} // namespace ulab

#endif
