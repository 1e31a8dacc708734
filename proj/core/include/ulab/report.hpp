#ifndef ULAB_REPORT_HPP
#define ULAB_REPORT_HPP

#include <optional>
#include <string>
#include <utility>

#include "ulab/laurent.hpp"
#include "ulab/plfunction.hpp"
#include "ulab/semigroup.hpp"

namespace ulab {

/** Everything the pipeline derives from one validated Alexander polynomial.
 *  tau = genus throughout (the polynomials this library accepts are exactly
 *  the ones for which that identity holds). minus3_integral integrality is
 *  the certificate the whole tool exists to produce. */
struct InvariantReport {
    std::string name;
    std::int64_t genus = 0;
    std::int64_t tau = 0;
    PLFunction upsilon;
    Rational integral;        // exact value of the integral of upsilon over [0, 2]
    Rational minus3_integral; // -3 times the integral
    Rational omega;           // minus3_integral - 2 * tau
    bool is_integral = false; // whether minus3_integral is an integer
    bool semigroup_closed = false;
    std::optional<std::pair<std::int64_t, std::int64_t>> witness; // first failing pair
};

// full pipeline: validate -> semigroup -> staircase -> minorant -> upsilon
// -> exact integral -> closure scan; throws NotLSpaceForm on bad input
InvariantReport report(const LaurentPoly& delta, std::string name);

// schema: {"name","genus","tau","upsilon","integral","minus3I","omega",
// "integral_verdict","semigroup_closed","witness"}; rationals as "p/q"
// strings, upsilon as breakpoint [t, value] pairs
std::string report_to_json(const InvariantReport& r);

} // namespace ulab

#endif
