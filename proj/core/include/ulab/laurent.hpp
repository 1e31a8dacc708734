#ifndef ULAB_LAURENT_HPP
#define ULAB_LAURENT_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "ulab/rational.hpp"

namespace ulab {

/** Laurent polynomial in one variable t with BigInt coefficients.
 *
 *  Canonical form: coeffs_ is empty for the zero polynomial (min_deg_ 0),
 *  otherwise coeffs_.front() and coeffs_.back() are nonzero and coeffs_[i]
 *  is the coefficient of t^(min_deg_ + i).
 */
class LaurentPoly {
public:
    LaurentPoly() = default;

    // trims leading/trailing zeros; coeffs[i] is the coefficient of t^(min_degree + i)
    LaurentPoly(std::int64_t min_degree, std::vector<BigInt> coeffs);

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(1, 0); }
    static LaurentPoly monomial(BigInt c, std::int64_t e);
    static LaurentPoly from_terms(const std::map<std::int64_t, BigInt>& terms);

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t min_degree() const { return min_deg_; }
    std::int64_t degree() const; // throws InvalidParameter on the zero polynomial
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(std::int64_t e) const;
    std::size_t term_count() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const = default;

    LaurentPoly shifted(std::int64_t k) const; // multiply by t^k
    LaurentPoly scaled(const BigInt& c) const;
    LaurentPoly mirrored() const; // t -> 1/t

    BigInt value_at_one() const;
    bool is_palindromic() const; // coeff(min + i) == coeff(max - i)

    std::string to_string() const; // "t^18 - t^17 + 2t^9 + 1", descending

private:
    void trim();

    std::int64_t min_deg_ = 0;
    std::vector<BigInt> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p)
{
    return os << p.to_string();
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);

// exact quotient a / b over the Laurent ring; throws InexactDivision if b
// does not divide a (nonzero remainder or a non-divisible leading step)
LaurentPoly laurent_divexact(const LaurentPoly& a, const LaurentPoly& b);

// unit-normalize an Alexander polynomial: minDegree 0, value +1 at t = 1
// (constant term +1 follows for genuine knot polynomials); throws
// NormalizationFailure if the value at t = 1 is not a unit
LaurentPoly normalize_alexander(const LaurentPoly& p);

} // namespace ulab

#endif
