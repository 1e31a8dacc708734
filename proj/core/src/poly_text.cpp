#include "ulab/poly_text.hpp"

#include <cctype>
#include <map>

#include <nlohmann/json.hpp>

#include "ulab/errors.hpp"

namespace ulab {

namespace {

struct Cursor {
    std::string s; // input with whitespace stripped
    std::size_t i = 0;

    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("polynomial parse error at position " + std::to_string(i) + ": " + what);
    }

    BigInt digits()
    {
        std::size_t start = i;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++i;
        if (i == start) fail("expected digits");
        return BigInt(s.substr(start, i - start));
    }

    std::int64_t signed_int()
    {
        bool neg = false;
        if (!done() && (peek() == '+' || peek() == '-')) {
            neg = peek() == '-';
            ++i;
        }
        BigInt v = digits();
        std::int64_t out = to_int64_checked(v);
        return neg ? -out : out;
    }
};

} // namespace

LaurentPoly parse_poly(std::string_view text)
{
    Cursor c;
    c.s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) c.s.push_back(ch);
    if (c.s.empty()) throw ParseError("empty polynomial");

    std::map<std::int64_t, BigInt> terms;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
            sign = c.peek() == '-' ? -1 : 1;
            ++c.i;
        } else if (!first) {
            c.fail("expected '+' or '-' between terms");
        }
        BigInt coeff = 1;
        bool saw_coeff = false;
        if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = c.digits();
            saw_coeff = true;
            if (!c.done() && c.peek() == '*') ++c.i;
        }
        std::int64_t expo = 0;
        if (!c.done() && (c.peek() == 't' || c.peek() == 'T')) {
            ++c.i;
            expo = 1;
            if (!c.done() && c.peek() == '^') {
                ++c.i;
                expo = c.signed_int();
            }
        } else if (!saw_coeff) {
            c.fail("expected a coefficient or 't'");
        }
        terms[expo] += sign * coeff;
        first = false;
    }
    return LaurentPoly::from_terms(terms);
}

std::string poly_to_json(const LaurentPoly& p)
{
    nlohmann::json j;
    j["minDegree"] = p.min_degree();
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_int64_checked(c));
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

LaurentPoly poly_from_json(std::string_view json_text)
{
    nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw ParseError("polynomial JSON must be an object with a \"coeffs\" array");
    std::int64_t min_deg = 0;
    if (j.contains("minDegree")) {
        if (!j["minDegree"].is_number_integer()) throw ParseError("\"minDegree\" must be an integer");
        min_deg = j["minDegree"].get<std::int64_t>();
    }
    std::vector<BigInt> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (!c.is_number_integer()) throw ParseError("\"coeffs\" entries must be integers");
        coeffs.emplace_back(c.get<std::int64_t>());
    }
    return LaurentPoly(min_deg, std::move(coeffs));
}

} // namespace ulab
