#include "ulab/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "ulab/errors.hpp"

namespace ulab {

BraidWord::BraidWord(int strands_, std::vector<int> letters_)
    : strands(strands_), letters(std::move(letters_))
{
    if (strands < 2) throw InvalidParameter("a braid needs at least 2 strands");
    for (int l : letters) {
        if (l == 0 || std::abs(l) > strands - 1)
            throw InvalidParameter("braid letter " + std::to_string(l) + " out of range for " +
                                   std::to_string(strands) + " strands");
    }
}

BraidWord parse_braid(const std::string& text)
{
    std::istringstream in(text);
    std::string head;
    in >> head;
    const std::string prefix = "strands:";
    if (head.rfind(prefix, 0) != 0)
        throw ParseError("braid word must start with \"strands:<n>\"");
    int strands = 0;
    try {
        strands = std::stoi(head.substr(prefix.size()));
    } catch (const std::exception&) {
        throw ParseError("malformed strand count in \"" + head + "\"");
    }
    std::vector<int> letters;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            int l = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            letters.push_back(l);
        } catch (const std::exception&) {
            throw ParseError("malformed braid letter \"" + tok + "\"");
        }
    }
    return BraidWord(strands, std::move(letters));
}

BurauMatrix BurauMatrix::identity(std::size_t n)
{
    BurauMatrix m;
    m.n = n;
    m.a.assign(n * n, LaurentPoly::zero());
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one();
    return m;
}

BurauMatrix BurauMatrix::operator*(const BurauMatrix& o) const
{
    BurauMatrix r;
    r.n = n;
    r.a.assign(n * n, LaurentPoly::zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

namespace {

LaurentPoly det_recursive(const BurauMatrix& m, std::vector<std::size_t>& cols, std::size_t row)
{
    if (cols.size() == 1) return m.at(row, cols[0]);
    LaurentPoly acc;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const LaurentPoly& pivot = m.at(row, cols[k]);
        if (pivot.is_zero()) continue;
        std::size_t c = cols[k];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
        LaurentPoly minor = det_recursive(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
        LaurentPoly term = pivot * minor;
        acc = k % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

// image of a single letter: identity except row |letter|
BurauMatrix burau_letter(int strands, int letter)
{
    std::size_t n = static_cast<std::size_t>(strands - 1);
    BurauMatrix m = BurauMatrix::identity(n);
    std::size_t i = static_cast<std::size_t>(std::abs(letter)) - 1; // 0-based row
    if (letter > 0) {
        if (i > 0) m.at(i, i - 1) = LaurentPoly::monomial(1, 1);
        m.at(i, i) = LaurentPoly::monomial(-1, 1);
        if (i + 1 < n) m.at(i, i + 1) = LaurentPoly::one();
    } else {
        if (i > 0) m.at(i, i - 1) = LaurentPoly::one();
        m.at(i, i) = LaurentPoly::monomial(-1, -1);
        if (i + 1 < n) m.at(i, i + 1) = LaurentPoly::monomial(1, -1);
    }
    return m;
}

} // namespace

LaurentPoly burau_det(const BurauMatrix& m)
{
    if (m.n == 0) return LaurentPoly::one();
    std::vector<std::size_t> cols(m.n);
    std::iota(cols.begin(), cols.end(), 0);
    return det_recursive(m, cols, 0);
}

BurauMatrix burau(const BraidWord& w)
{
    BurauMatrix m = BurauMatrix::identity(static_cast<std::size_t>(w.strands - 1));
    for (int l : w.letters) m = m * burau_letter(w.strands, l);
    return m;
}

int closure_components(const BraidWord& w)
{
    std::vector<int> perm(static_cast<std::size_t>(w.strands));
    std::iota(perm.begin(), perm.end(), 0);
    for (int l : w.letters) {
        int k = std::abs(l) - 1;
        std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(k) + 1]);
    }
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        std::size_t j = s;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(perm[j]);
        }
    }
    return cycles;
}

LaurentPoly alexander_of_closure(const BraidWord& w)
{
    if (closure_components(w) != 1)
        throw NotAKnot("closure has " + std::to_string(closure_components(w)) + " components");
    BurauMatrix b = burau(w);
    BurauMatrix m = b;
    for (std::size_t i = 0; i < m.n; ++i)
        m.at(i, i) = m.at(i, i) - LaurentPoly::one();
    LaurentPoly d = burau_det(m);
    // one_minus_t / one_minus_t_to_s is Alexander's unit-ambiguous value
    LaurentPoly numer = d * LaurentPoly::from_terms({{0, 1}, {1, -1}});
    LaurentPoly denom = LaurentPoly::from_terms({{0, 1}, {w.strands, -1}});
    return normalize_alexander(laurent_divexact(numer, denom));
}

std::int64_t positive_braid_genus(const BraidWord& w)
{
    for (int l : w.letters)
        if (l < 0) throw NotPositive("word contains negative letter " + std::to_string(l));
    if (closure_components(w) != 1)
        throw NotAKnot("closure has " + std::to_string(closure_components(w)) + " components");
    return (static_cast<std::int64_t>(w.letters.size()) - w.strands + 1) / 2;
}

BraidWord family_braid_word(std::int64_t n)
{
    if (n < 1) throw InvalidParameter("family index must be >= 1");
    std::vector<int> letters = {2, 1, 3, 2};
    for (int rep = 0; rep < 4; ++rep) {
        letters.push_back(3);
        letters.push_back(2);
        letters.push_back(1);
    }
    for (std::int64_t k = 0; k < 2 * (n + 1); ++k) letters.push_back(3);
    letters.push_back(2);
    return BraidWord(4, std::move(letters));
}

} // namespace ulab
