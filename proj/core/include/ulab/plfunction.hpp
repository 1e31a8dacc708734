#ifndef ULAB_PLFUNCTION_HPP
#define ULAB_PLFUNCTION_HPP

#include <ostream>
#include <utility>
#include <vector>

#include "ulab/rational.hpp"

namespace ulab {

/** Piecewise-linear function on [0, 2] with rational breakpoints and values.
 *
 *  Kept in normal form: breakpoints strictly increasing, first 0, last 2,
 *  no interior breakpoint collinear with its neighbours. Equality on the
 *  normal form is therefore equality of functions.
 */
class PLFunction {
public:
    using Point = std::pair<Rational, Rational>;

    // identically zero on [0, 2]
    PLFunction();

    // points must cover [0, 2] with strictly increasing abscissae
    explicit PLFunction(std::vector<Point> points);

    static PLFunction zero() { return PLFunction(); }

    const std::vector<Point>& breakpoints() const { return pts_; }

    // exact evaluation; throws DomainError outside [0, 2]
    Rational operator()(const Rational& t) const;

    PLFunction operator+(const PLFunction& o) const;
    PLFunction operator-(const PLFunction& o) const;
    PLFunction operator-() const;
    PLFunction scaled(const Rational& c) const;
    bool operator==(const PLFunction& o) const = default;

    bool is_convex() const;

private:
    void normalize();

    std::vector<Point> pts_;
};

inline std::ostream& operator<<(std::ostream& os, const PLFunction& f)
{
    for (const auto& [t, v] : f.breakpoints())
        os << "(" << to_fraction_string(t) << ", " << to_fraction_string(v) << ") ";
    return os;
}

// exact integral over [0, 2]: sum of trapezoids between breakpoints
Rational pl_integrate(const PLFunction& f);

} // namespace ulab

#endif
