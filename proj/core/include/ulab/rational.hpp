#ifndef ULAB_RATIONAL_HPP
#define ULAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "ulab/errors.hpp"

namespace ulab {

/* Exact arithmetic substrate. cpp_rational keeps values reduced with a
 * positive denominator, which is exactly the Rational contract we need;
 * everything downstream (PL functions, integrals, reports) stays exact. */

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// "p/q" with "/1" suppressed, so integral values print as plain integers
std::string to_fraction_string(const Rational& r);

// accepts "p", "p/q", optional leading sign; throws ParseError otherwise
Rational rational_from_string(std::string_view s);

// checked narrowing for JSON emission; coefficients in practice are tiny
std::int64_t to_int64_checked(const BigInt& v);

} // namespace ulab

#endif
