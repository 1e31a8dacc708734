#include "ulab/cyclo.hpp"

namespace ulab {

std::string CycloZ6::to_string() const
{
    if (b == 0) return a.str();
    std::string out;
    if (a != 0) out += a.str() + (b < 0 ? " - " : " + ");
    else if (b < 0) out += "-";
    BigInt m = abs(b);
    if (m != 1) out += m.str() + "*";
    out += "z";
    return out;
}

CycloZ6 cyclo_eval(const LaurentPoly& p)
{
    // powers of z written as a + bz
    static const int table[6][2] = {
        {1, 0},  // z^0
        {0, 1},  // z^1
        {-1, 1}, // z^2 = z - 1
        {-1, 0}, // z^3 = -1
        {0, -1}, // z^4
        {1, -1}, // z^5
    };
    CycloZ6 acc;
    const auto& cs = p.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i] == 0) continue;
        std::int64_t e = p.min_degree() + static_cast<std::int64_t>(i);
        int r = static_cast<int>(((e % 6) + 6) % 6);
        acc.a += cs[i] * table[r][0];
        acc.b += cs[i] * table[r][1];
    }
    return acc;
}

} // namespace ulab
