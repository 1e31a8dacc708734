#ifndef ULAB_CYCLO_HPP
#define ULAB_CYCLO_HPP

#include <string>

#include "ulab/laurent.hpp"

namespace ulab {

/** Element a + b*z of Z[z]/(z^2 - z + 1), z a primitive sixth root of unity.
 *  z^3 = -1 and z^6 = 1, so Laurent exponents reduce mod 6. */
struct CycloZ6 {
    BigInt a;
    BigInt b;

    CycloZ6() : a(0), b(0) {}
    CycloZ6(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}

    bool is_zero() const { return a == 0 && b == 0; }

    CycloZ6 operator-() const { return {-a, -b}; }
    CycloZ6 operator+(const CycloZ6& o) const { return {a + o.a, b + o.b}; }
    CycloZ6 operator-(const CycloZ6& o) const { return {a - o.a, b - o.b}; }
    // (a + bz)(c + dz) with z^2 = z - 1
    CycloZ6 operator*(const CycloZ6& o) const
    {
        return {a * o.a - b * o.b, a * o.b + b * o.a + b * o.b};
    }
    bool operator==(const CycloZ6& o) const = default;

    std::string to_string() const;
};

inline std::ostream& operator<<(std::ostream& os, const CycloZ6& v)
{
    return os << v.to_string();
}

// evaluate a Laurent polynomial at z; exponents (negative included) reduce mod 6
CycloZ6 cyclo_eval(const LaurentPoly& p);

} // namespace ulab

#endif
