#ifndef ULAB_BRAID_HPP
#define ULAB_BRAID_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ulab/laurent.hpp"

namespace ulab {

/** Braid word on a fixed strand count. Letters are nonzero integers,
 *  letter k (resp. -k) the positive (resp. negative) Artin generator
 *  sigma_k, 1 <= k <= strands - 1. */
struct BraidWord {
    int strands = 2;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int strands_, std::vector<int> letters_); // throws InvalidParameter
};

// parse "strands:4 2 1 3 2 -1 ..." (whitespace separated letters)
BraidWord parse_braid(const std::string& text);

/** Square matrix over the Laurent ring; the image of a braid under the
 *  reduced Burau representation has determinant a unit (-t)^w. */
struct BurauMatrix {
    std::size_t n = 0;
    std::vector<LaurentPoly> a; // row-major, n*n entries

    static BurauMatrix identity(std::size_t n);
    LaurentPoly& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    BurauMatrix operator*(const BurauMatrix& o) const;
    bool operator==(const BurauMatrix& o) const = default;
};

LaurentPoly burau_det(const BurauMatrix& m);

/* Reduced Burau image on (strands-1) generators v_1..v_{s-1}:
 * sigma_i sends v_{i-1} -> v_{i-1} + t v_i, v_i -> -t v_i,
 * v_{i+1} -> v_i + v_{i+1}; as a matrix this differs from the identity
 * only in row i (the familiar [[-t, 1], [0, 1]]-type block at i = 1).
 * The word maps to the left-to-right product of its letters' images. */
BurauMatrix burau(const BraidWord& w);

// number of cycles of the word's strand permutation (closure components)
int closure_components(const BraidWord& w);

/* Alexander polynomial of the closure (which must be a knot), computed as
 * det(burau(w) - I) * (1 - t) / (1 - t^strands) and normalized to
 * minDegree 0, constant +1, value +1 at t = 1. */
LaurentPoly alexander_of_closure(const BraidWord& w);

// Bennequin: genus of a positive braid knot closure = (length - strands + 1)/2
std::int64_t positive_braid_genus(const BraidWord& w);

/* The built-in 4-strand family: [2, 1, 3, 2, (3,2,1)^4, 3^{2(n+1)}, 2],
 * length 2n + 19; its closure is the genus n+8 knot the family module
 * studies. n >= 1. */
BraidWord family_braid_word(std::int64_t n);

} // namespace ulab

#endif
