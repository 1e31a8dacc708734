#include "ulab/family.hpp"

#include <map>

#include "ulab/errors.hpp"

namespace ulab {

const FamilyConstants& family_constants()
{
    static const FamilyConstants fc = [] {
        FamilyConstants c;
        c.delta_l = TriLaurentPoly({
            {{7, 3, 1}, 1},
            {{5, 3, 1}, -1},
            {{5, 2, 1}, 1},
            {{5, 2, 0}, 1},
            {{4, 2, 0}, -1},
            {{5, 1, 0}, -1},
            {{3, 2, 1}, -2},
            {{4, 1, 0}, 2},
            {{2, 2, 1}, 1},
            {{3, 1, 1}, 1},
            {{2, 1, 1}, -1},
            {{2, 1, 0}, -1},
            {{2, 0, 0}, 1},
            {{0, 0, 0}, -1},
        });
        return c;
    }();
    return fc;
}

LaurentPoly family_alexander(std::int64_t n)
{
    if (n < 1) throw InvalidParameter("family index must be >= 1");
    std::map<std::int64_t, BigInt> terms;
    terms[2 * n + 16] = 1;
    terms[2 * n + 15] = -1;
    terms[2 * n + 12] = 1;
    terms[2 * n + 11] = -1;
    terms[2 * n + 10] = 1;
    terms[2 * n + 9] = -1;
    terms[9] = 1;
    for (std::int64_t i = 1; i <= n - 1; ++i) {
        terms[9 + 2 * i] = 1;
        terms[9 + 2 * i - 1] = -1;
    }
    terms[7] = -1;
    terms[6] = 1;
    terms[5] = -1;
    terms[4] = 1;
    terms[1] = -1;
    terms[0] = 1;
    return LaurentPoly::from_terms(terms);
}

LaurentPoly family_alexander_torres(std::int64_t n)
{
    if (n < 1) throw InvalidParameter("family index must be >= 1");
    LaurentPoly collapsed = tri_substitute(family_constants().delta_l, 1, 4, 2 * (n + 1));
    // (t - 1)/((t^4 - 1)(t^2 - 1)) with the (t - 1) cancelled already
    LaurentPoly denom = LaurentPoly::from_terms({{0, -1}, {4, 1}}) *
                        LaurentPoly::from_terms({{0, 1}, {1, 1}});
    return normalize_alexander(laurent_divexact(collapsed, denom));
}

PLFunction family_upsilon(std::int64_t n)
{
    if (n < 1) throw InvalidParameter("family index must be >= 1");
    auto at = [&](std::int64_t num, std::int64_t den) { return Rational(num, den); };
    std::vector<PLFunction::Point> pts;
    pts.emplace_back(at(0, 1), Rational(0));
    pts.emplace_back(at(1, 2), Rational(-(n + 8), 2));
    pts.emplace_back(at(4, 5), Rational(-(4 * n + 26), 5));
    pts.emplace_back(at(1, 1), Rational(-(n + 5)));
    pts.emplace_back(at(6, 5), Rational(-(4 * n + 26), 5));
    pts.emplace_back(at(3, 2), Rational(-(n + 8), 2));
    pts.emplace_back(at(2, 1), Rational(0));
    return PLFunction(std::move(pts));
}

PLFunction family_upsilon_step(std::int64_t n)
{
    return family_upsilon(n + 1) - family_upsilon(n);
}

PLFunction trefoil_tent()
{
    return PLFunction({{Rational(0), Rational(0)}, {Rational(1), Rational(-1)}, {Rational(2), Rational(0)}});
}

std::optional<std::string> family_census_name(std::int64_t n)
{
    if (n == 1) return "m211";
    if (n == 2) return "t09284";
    return std::nullopt;
}

} // namespace ulab
