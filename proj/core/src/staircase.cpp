#include "ulab/staircase.hpp"

#include <algorithm>

#include "ulab/errors.hpp"

namespace ulab {

GapStaircase gap_staircase(const std::vector<std::int64_t>& gaps, std::int64_t genus)
{
    if (genus < 0) throw InvalidParameter("negative genus");
    GapStaircase sc;
    sc.genus = genus;
    sc.points.reserve(static_cast<std::size_t>(2 * genus) + 1);
    std::int64_t x = -genus;
    std::int64_t y = 0;
    sc.points.emplace_back(x, y);
    std::size_t gi = 0;
    for (std::int64_t k = 0; k < 2 * genus; ++k) {
        bool is_gap = gi < gaps.size() && gaps[gi] == k;
        if (is_gap) ++gi;
        else y += 2;
        ++x;
        sc.points.emplace_back(x, y);
    }
    if (gi != gaps.size() || x != genus || y != 2 * genus)
        throw MalformedStaircase("staircase does not terminate at (g, 2g); gap set and genus are inconsistent");
    return sc;
}

ConvexHullVertices convex_minorant(const GapStaircase& sc)
{
    // Andrew's monotone chain, lower hull only; points already sorted by x.
    // Collinear middle points are dropped, so chord slopes strictly increase.
    std::vector<std::pair<std::int64_t, std::int64_t>> hull;
    for (const auto& p : sc.points) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            std::int64_t cross = (b.first - a.first) * (p.second - a.second) -
                                 (b.second - a.second) * (p.first - a.first);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(p);
    }
    return {std::move(hull)};
}

PLFunction legendre_upsilon(const ConvexHullVertices& hull)
{
    const auto& v = hull.vertices;
    if (v.empty()) throw InvalidParameter("empty hull");

    auto line_max = [&](const Rational& t) {
        Rational best = t * v[0].first - v[0].second;
        for (std::size_t j = 1; j < v.size(); ++j) {
            Rational cand = t * v[j].first - v[j].second;
            if (cand > best) best = cand;
        }
        return best;
    };

    // candidate breakpoints: chord slopes (where the maximizing vertex
    // hands over), clipped to the open interval, plus both endpoints
    std::vector<Rational> xs;
    xs.emplace_back(0);
    for (std::size_t j = 1; j < v.size(); ++j) {
        Rational s(v[j].second - v[j - 1].second, v[j].first - v[j - 1].first);
        if (s > 0 && s < 2) xs.push_back(s);
    }
    xs.emplace_back(2);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<PLFunction::Point> pts;
    pts.reserve(xs.size());
    for (const auto& x : xs) pts.emplace_back(x, line_max(x));
    return PLFunction(std::move(pts));
}

} // namespace ulab
