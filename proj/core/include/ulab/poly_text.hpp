#ifndef ULAB_POLY_TEXT_HPP
#define ULAB_POLY_TEXT_HPP

#include <string>
#include <string_view>

#include "ulab/laurent.hpp"

namespace ulab {

/** Parse "t^18 - t^17 + 2t^9 + 1" style input. Whitespace is ignored,
 *  exponents may be negative ("t^-3"), an optional '*' may separate a
 *  coefficient from its t part. Throws ParseError on malformed input. */
LaurentPoly parse_poly(std::string_view text);

// {"minDegree": m, "coeffs": [c0, c1, ...]}; inverse of poly_from_json
std::string poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(std::string_view json_text);

} // namespace ulab

#endif
