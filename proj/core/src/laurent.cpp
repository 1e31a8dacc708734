#include "ulab/laurent.hpp"

#include <algorithm>

#include "ulab/errors.hpp"

namespace ulab {

LaurentPoly::LaurentPoly(std::int64_t min_degree, std::vector<BigInt> coeffs)
    : min_deg_(min_degree), coeffs_(std::move(coeffs))
{
    trim();
}

void LaurentPoly::trim()
{
    std::size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
    if (lo == coeffs_.size()) {
        coeffs_.clear();
        min_deg_ = 0;
        return;
    }
    std::size_t hi = coeffs_.size();
    while (coeffs_[hi - 1] == 0) --hi;
    if (lo > 0 || hi < coeffs_.size()) {
        coeffs_ = std::vector<BigInt>(coeffs_.begin() + lo, coeffs_.begin() + hi);
        min_deg_ += static_cast<std::int64_t>(lo);
    }
}

LaurentPoly LaurentPoly::monomial(BigInt c, std::int64_t e)
{
    if (c == 0) return LaurentPoly();
    LaurentPoly p;
    p.min_deg_ = e;
    p.coeffs_.push_back(std::move(c));
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<std::int64_t, BigInt>& terms)
{
    LaurentPoly p;
    auto first = terms.begin();
    while (first != terms.end() && first->second == 0) ++first;
    if (first == terms.end()) return p;
    auto last = std::prev(terms.end());
    while (last->second == 0) --last;
    p.min_deg_ = first->first;
    p.coeffs_.assign(static_cast<std::size_t>(last->first - first->first) + 1, BigInt(0));
    for (auto it = first; ; ++it) {
        p.coeffs_[static_cast<std::size_t>(it->first - p.min_deg_)] = it->second;
        if (it == last) break;
    }
    return p;
}

std::int64_t LaurentPoly::degree() const
{
    if (is_zero()) throw InvalidParameter("degree of the zero polynomial");
    return min_deg_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
}

BigInt LaurentPoly::coeff(std::int64_t e) const
{
    if (is_zero() || e < min_deg_) return 0;
    std::size_t i = static_cast<std::size_t>(e - min_deg_);
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

std::size_t LaurentPoly::term_count() const
{
    std::size_t n = 0;
    for (const auto& c : coeffs_)
        if (c != 0) ++n;
    return n;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const
{
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    std::int64_t lo = std::min(min_deg_, o.min_deg_);
    std::int64_t hi = std::max(degree(), o.degree());
    std::vector<BigInt> sum(static_cast<std::size_t>(hi - lo) + 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        sum[static_cast<std::size_t>(min_deg_ - lo) + i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        sum[static_cast<std::size_t>(o.min_deg_ - lo) + i] += o.coeffs_[i];
    return LaurentPoly(lo, std::move(sum));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const
{
    return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const
{
    return laurent_mul(*this, o);
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const
{
    if (is_zero()) return *this;
    LaurentPoly r = *this;
    r.min_deg_ += k;
    return r;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const
{
    if (c == 0) return LaurentPoly();
    LaurentPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

LaurentPoly LaurentPoly::mirrored() const
{
    if (is_zero()) return *this;
    LaurentPoly r;
    r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    r.min_deg_ = -degree();
    return r;
}

BigInt LaurentPoly::value_at_one() const
{
    BigInt v = 0;
    for (const auto& c : coeffs_) v += c;
    return v;
}

bool LaurentPoly::is_palindromic() const
{
    std::size_t n = coeffs_.size();
    for (std::size_t i = 0; i < n / 2; ++i)
        if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
    return true;
}

std::string LaurentPoly::to_string() const
{
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t j = coeffs_.size(); j-- > 0;) {
        const BigInt& c = coeffs_[j];
        if (c == 0) continue;
        BigInt a = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::int64_t e = min_deg_ + static_cast<std::int64_t>(j);
        if (e == 0) {
            out += a.str();
        } else {
            if (a != 1) out += a.str();
            out += "t";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<BigInt> prod(ac.size() + bc.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) {
            if (bc[j] == 0) continue;
            prod[i + j] += ac[i] * bc[j];
        }
    }
    return LaurentPoly(a.min_degree() + b.min_degree(), std::move(prod));
}

LaurentPoly laurent_divexact(const LaurentPoly& a, const LaurentPoly& b)
{
    if (b.is_zero()) throw InvalidParameter("division by the zero polynomial");
    if (a.is_zero()) return LaurentPoly();

    /* t is a unit, so divide the t-power-free parts as ordinary polynomials
     * (both have nonzero constant term after the shift) and restore the
     * exponent offset at the end. */
    std::vector<BigInt> rem = a.coeffs();
    const auto& d = b.coeffs();
    if (rem.size() < d.size())
        throw InexactDivision("quotient support would be empty: " + a.to_string() + " / " + b.to_string());
    const BigInt& lead = d.back();
    std::vector<BigInt> quot(rem.size() - d.size() + 1, BigInt(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt top = rem[k + d.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0)
            throw InexactDivision("leading coefficient step not divisible: " + a.to_string() + " / " + b.to_string());
        BigInt q = top / lead;
        quot[k] = q;
        for (std::size_t j = 0; j < d.size(); ++j)
            rem[k + j] -= q * d[j];
    }
    for (const auto& c : rem)
        if (c != 0)
            throw InexactDivision("nonzero remainder: " + a.to_string() + " / " + b.to_string());
    return LaurentPoly(a.min_degree() - b.min_degree(), std::move(quot));
}

LaurentPoly normalize_alexander(const LaurentPoly& p)
{
    if (p.is_zero()) throw NormalizationFailure("cannot normalize the zero polynomial");
    LaurentPoly q = p.shifted(-p.min_degree());
    BigInt v = q.value_at_one();
    if (v == -1) q = -q;
    else if (v != 1) throw NormalizationFailure("value at t = 1 is " + v.str() + ", not a unit");
    return q;
}

} // namespace ulab
