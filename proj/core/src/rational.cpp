#include "ulab/rational.hpp"

#include <limits>

namespace ulab {

std::string to_fraction_string(const Rational& r)
{
    std::string s = rat_num(r).str();
    if (!is_integer(r)) {
        s += '/';
        s += rat_den(r).str();
    }
    return s;
}

Rational rational_from_string(std::string_view s)
{
    auto bad = [&] { throw ParseError("malformed rational: '" + std::string(s) + "'"); };
    std::size_t slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    auto parse_int = [&](std::string_view part, bool allow_sign) -> BigInt {
        if (part.empty()) bad();
        std::size_t i = 0;
        if (allow_sign && (part[0] == '+' || part[0] == '-')) i = 1;
        if (i == part.size()) bad();
        for (std::size_t j = i; j < part.size(); ++j)
            if (part[j] < '0' || part[j] > '9') bad();
        return BigInt(std::string(part));
    };
    BigInt n = parse_int(num, true);
    BigInt d = parse_int(den, false);
    if (d == 0) bad();
    return Rational(n, d);
}

std::int64_t to_int64_checked(const BigInt& v)
{
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
        throw ContractError("integer out of int64 range: " + v.str());
    return static_cast<std::int64_t>(v);
}

} // namespace ulab
