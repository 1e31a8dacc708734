#ifndef ULAB_TRILAURENT_HPP
#define ULAB_TRILAURENT_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "ulab/laurent.hpp"

namespace ulab {

/* Three-variable Laurent polynomial, sparse, lexicographically ordered
 * exponent triples. Just enough ring structure to hold multivariable
 * link polynomials and collapse them to one variable. */
class TriLaurentPoly {
public:
    using Exponents = std::array<std::int64_t, 3>;

    TriLaurentPoly() = default;
    explicit TriLaurentPoly(std::map<Exponents, BigInt> terms);

    static TriLaurentPoly zero() { return TriLaurentPoly(); }
    static TriLaurentPoly monomial(BigInt c, Exponents e);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    BigInt coeff(const Exponents& e) const;

    TriLaurentPoly operator-() const;
    TriLaurentPoly operator+(const TriLaurentPoly& o) const;
    TriLaurentPoly operator-(const TriLaurentPoly& o) const;
    TriLaurentPoly operator*(const TriLaurentPoly& o) const;
    bool operator==(const TriLaurentPoly& o) const = default;

    std::string to_string() const;

private:
    void prune();

    std::map<Exponents, BigInt> terms_; // no zero coefficients stored
};

// substitute (x, y, z) -> (t^ex, t^ey, t^ez) and collect like terms
LaurentPoly tri_substitute(const TriLaurentPoly& p, std::int64_t ex, std::int64_t ey, std::int64_t ez);

} // namespace ulab

#endif
