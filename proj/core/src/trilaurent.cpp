#include "ulab/trilaurent.hpp"

namespace ulab {

TriLaurentPoly::TriLaurentPoly(std::map<Exponents, BigInt> terms) : terms_(std::move(terms))
{
    prune();
}

void TriLaurentPoly::prune()
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
}

TriLaurentPoly TriLaurentPoly::monomial(BigInt c, Exponents e)
{
    TriLaurentPoly p;
    if (c != 0) p.terms_.emplace(e, std::move(c));
    return p;
}

BigInt TriLaurentPoly::coeff(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

TriLaurentPoly TriLaurentPoly::operator-() const
{
    TriLaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

TriLaurentPoly TriLaurentPoly::operator+(const TriLaurentPoly& o) const
{
    TriLaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.terms_[e] += c;
    r.prune();
    return r;
}

TriLaurentPoly TriLaurentPoly::operator-(const TriLaurentPoly& o) const
{
    return *this + (-o);
}

TriLaurentPoly TriLaurentPoly::operator*(const TriLaurentPoly& o) const
{
    TriLaurentPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.terms_[{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}] += ca * cb;
    r.prune();
    return r;
}

std::string TriLaurentPoly::to_string() const
{
    if (is_zero()) return "0";
    std::string out;
    static const char* vars[3] = {"x", "y", "z"};
    for (const auto& [e, c] : terms_) {
        BigInt a = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        bool any = a != 1;
        if (any) out += a.str();
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            any = true;
            out += vars[v];
            if (e[v] != 1) out += "^" + std::to_string(e[v]);
        }
        if (!any) out += a.str();
    }
    return out;
}

LaurentPoly tri_substitute(const TriLaurentPoly& p, std::int64_t ex, std::int64_t ey, std::int64_t ez)
{
    std::map<std::int64_t, BigInt> collected;
    for (const auto& [e, c] : p.terms())
        collected[e[0] * ex + e[1] * ey + e[2] * ez] += c;
    return LaurentPoly::from_terms(collected);
}

} // namespace ulab
