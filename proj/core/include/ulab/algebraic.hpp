#ifndef ULAB_ALGEBRAIC_HPP
#define ULAB_ALGEBRAIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ulab/laurent.hpp"
#include "ulab/plfunction.hpp"

namespace ulab {

/** Multiplicity sequence of a plane curve singularity, entries >= 2 in
 *  nonincreasing order (trailing 1s discarded). Empty = smooth point. */
struct MultiplicitySequence {
    std::vector<std::int64_t> entries;

    MultiplicitySequence() = default;
    explicit MultiplicitySequence(std::vector<std::int64_t> ms); // sorts, validates >= 2

    std::int64_t milnor() const;          // sum m_i(m_i - 1)
    std::int64_t genus() const;           // milnor / 2
    std::int64_t omega() const;           // sum (m_i - 1)
    std::int64_t minus3_integral() const; // sum (m_i^2 - 1)
};

/* Blow-up bookkeeping for the cusp x^p = y^q, 2 <= p < q coprime: repeat
 * (a, b) -> sorted(a, b - a) recording the smaller entry until it hits 1.
 * Throws InvalidParameters on bad (p, q). */
MultiplicitySequence multiplicity_sequence(std::int64_t p, std::int64_t q);

/* One multiplicity-m building block: value -i(i+1) - m(m-1-2i)t/2 on
 * [2i/m, 2(i+1)/m], i = 0..m-1; integral (1 - m^2)/3. m = 2 is the
 * trefoil tent. */
PLFunction upsilon_block(std::int64_t m);

// sum of blocks; empty sequence gives the zero function
PLFunction upsilon_from_mults(const MultiplicitySequence& ms);

struct SingularityReport {
    MultiplicitySequence mults;
    std::int64_t milnor = 0;
    std::int64_t genus = 0;
    std::int64_t omega = 0;
    std::int64_t minus3_integral = 0;
    PLFunction upsilon;
};

// the closed-form counts, with minus3_integral re-verified against the
// exact integral of the summed blocks (ContractError on mismatch)
SingularityReport singularity_report(const MultiplicitySequence& ms);
std::string singularity_report_to_json(const SingularityReport& r);

struct InequalityVerdicts {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t omega = 0;
    std::int64_t milnor = 0;
    std::int64_t m1 = 0; // leading multiplicity (0 for the empty sequence)
    bool omega_lt_p_plus_q = false;
    bool milnor_le_m1_omega = false;
};

// evaluate omega < p + q and milnor <= m_1 * omega for the (p, q) cusp
InequalityVerdicts check_inequalities(std::int64_t p, std::int64_t q);

// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), normalized; the Alexander
// polynomial of the (p, q) torus knot
LaurentPoly torus_alexander(std::int64_t p, std::int64_t q);

} // namespace ulab

#endif
