#include "ulab/plfunction.hpp"

#include <algorithm>

#include "ulab/errors.hpp"

namespace ulab {

PLFunction::PLFunction()
{
    pts_.emplace_back(Rational(0), Rational(0));
    pts_.emplace_back(Rational(2), Rational(0));
}

PLFunction::PLFunction(std::vector<Point> points) : pts_(std::move(points))
{
    if (pts_.size() < 2)
        throw InvalidParameter("a PL function needs at least the two endpoint breakpoints");
    if (pts_.front().first != 0 || pts_.back().first != 2)
        throw InvalidParameter("PL breakpoints must start at 0 and end at 2");
    for (std::size_t i = 1; i < pts_.size(); ++i)
        if (!(pts_[i - 1].first < pts_[i].first))
            throw InvalidParameter("PL breakpoints must be strictly increasing");
    normalize();
}

void PLFunction::normalize()
{
    std::vector<Point> out;
    out.reserve(pts_.size());
    for (const auto& p : pts_) {
        while (out.size() >= 2) {
            const auto& a = out[out.size() - 2];
            const auto& b = out.back();
            // drop b if (a, b, p) are collinear
            if ((b.first - a.first) * (p.second - b.second) ==
                (p.first - b.first) * (b.second - a.second))
                out.pop_back();
            else
                break;
        }
        out.push_back(p);
    }
    pts_ = std::move(out);
}

Rational PLFunction::operator()(const Rational& t) const
{
    if (t < 0 || t > 2)
        throw DomainError("PL function evaluated outside [0, 2] at " + to_fraction_string(t));
    auto it = std::upper_bound(pts_.begin(), pts_.end(), t,
                               [](const Rational& v, const Point& p) { return v < p.first; });
    if (it == pts_.end()) return pts_.back().second; // t == 2
    const Point& hi = *it;
    const Point& lo = *std::prev(it);
    return lo.second + (hi.second - lo.second) * (t - lo.first) / (hi.first - lo.first);
}

PLFunction PLFunction::operator+(const PLFunction& o) const
{
    std::vector<Rational> xs;
    xs.reserve(pts_.size() + o.pts_.size());
    for (const auto& p : pts_) xs.push_back(p.first);
    for (const auto& p : o.pts_) xs.push_back(p.first);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Point> merged;
    merged.reserve(xs.size());
    for (const auto& x : xs) merged.emplace_back(x, (*this)(x) + o(x));
    return PLFunction(std::move(merged));
}

PLFunction PLFunction::operator-() const
{
    PLFunction r = *this;
    for (auto& p : r.pts_) p.second = -p.second;
    return r;
}

PLFunction PLFunction::operator-(const PLFunction& o) const
{
    return *this + (-o);
}

PLFunction PLFunction::scaled(const Rational& c) const
{
    std::vector<Point> pts = pts_;
    for (auto& p : pts) p.second *= c;
    return PLFunction(std::move(pts));
}

bool PLFunction::is_convex() const
{
    for (std::size_t i = 2; i < pts_.size(); ++i) {
        const auto& a = pts_[i - 2];
        const auto& b = pts_[i - 1];
        const auto& c = pts_[i];
        // slope(a,b) <= slope(b,c)
        if ((b.second - a.second) * (c.first - b.first) >
            (c.second - b.second) * (b.first - a.first))
            return false;
    }
    return true;
}

Rational pl_integrate(const PLFunction& f)
{
    Rational total = 0;
    const auto& pts = f.breakpoints();
    for (std::size_t i = 1; i < pts.size(); ++i)
        total += (pts[i].first - pts[i - 1].first) * (pts[i].second + pts[i - 1].second) / 2;
    return total;
}

} // namespace ulab
