#ifndef ULAB_SIGNATURE_HPP
#define ULAB_SIGNATURE_HPP

#include <cstdint>
#include <vector>

#include "ulab/cyclo.hpp"
#include "ulab/laurent.hpp"

namespace ulab {

/** family_alexander(n) recentred by t^{-(n+8)}: palindromic, value 1 at
 *  t = 1, so its unit-circle values are real. */
struct SymmetrizedPoly {
    std::int64_t n = 0;
    LaurentPoly psi;
};

SymmetrizedPoly symmetrized_family_poly(std::int64_t n); // n >= 1

/* Oscillating part, product form:
 * -4 sin(u/2) [ sin((n + 11/2)u) cos(2u) + sin(nu) cos(3u/2) ];
 * identical to the raw eight-cosine sum it collects. Negative on
 * (0, 2pi/(2n+11)). */
double alpha_eval(std::int64_t n, double u);

// the same quantity as the raw sum of eight cosines (identity check)
double alpha_raw_eval(std::int64_t n, double u);

/* Slow envelope cos((n - 5/2)u) / (2 cos(u/2)); its first positive zero
 * is at pi/(2n - 5). */
double beta_eval(std::int64_t n, double u);

/* gamma_n = alpha_n + beta_n = psi_n(e^{iu})/2, real for u in (0, pi).
 * gamma_n(0+) = 1/2. Throws DomainError outside the open interval. */
double gamma_eval(std::int64_t n, double u);

struct RootLocalization {
    std::int64_t n = 0;
    double lo = 0;       // gamma > 0 here
    double hi = 0;       // gamma <= 0 here, hi - lo < 1e-12
    double root = 0;     // bracket midpoint
    double residual = 0; // |gamma(root)|
};

/* First sign change of gamma_n on (0, pi/(2n - 5)), n >= 11: scan a
 * 4096-point uniform grid for the first nonpositive sample, then bisect
 * the bracketing interval below width 1e-12. Throws NoSignChangeFound
 * if every sample stays positive. */
RootLocalization locate_first_root(std::int64_t n);

/** Indices a_1 < a_2 < ... with shrinking exclusion radii lambda_m; each
 *  later gamma_{a_k} keeps its first root inside every earlier radius. */
struct GreedySequence {
    std::vector<std::int64_t> terms;
    std::vector<double> radii;
};

/* a_1 = 11; lambda_m = min(lambda_{m-1}, 0.99 * root of gamma_{a_m});
 * a_{m+1} = least integer > a_m with pi/(2 a_{m+1} - 5) < lambda_m. */
GreedySequence greedy_sequence(std::int64_t count);

// symmetrized polynomial evaluated at the sixth root of unity; depends
// only on n mod 6 and never vanishes
CycloZ6 psi_at_zeta6(std::int64_t n);

} // namespace ulab

#endif
