#include "ulab/signature.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "ulab/errors.hpp"
#include "ulab/family.hpp"

namespace ulab {

SymmetrizedPoly symmetrized_family_poly(std::int64_t n)
{
    SymmetrizedPoly s;
    s.n = n;
    s.psi = family_alexander(n).shifted(-(n + 8));
    return s;
}

namespace {

double checked(std::int64_t n, double u)
{
    if (n < 1) throw InvalidParameter("index must be >= 1");
    if (!(u > 0.0) || !(u < std::numbers::pi))
        throw DomainError("evaluation point must lie in the open interval (0, pi)");
    return static_cast<double>(n);
}

} // namespace

double alpha_eval(std::int64_t n, double u)
{
    double nn = checked(n, u);
    return -4.0 * std::sin(u / 2) *
           (std::sin((nn + 5.5) * u) * std::cos(2 * u) + std::sin(nn * u) * std::cos(1.5 * u));
}

double alpha_raw_eval(std::int64_t n, double u)
{
    double nn = checked(n, u);
    return std::cos((nn + 8) * u) - std::cos((nn + 7) * u) + std::cos((nn + 4) * u) -
           std::cos((nn + 3) * u) + std::cos((nn + 2) * u) - std::cos((nn + 1) * u) +
           std::cos((nn - 1) * u) - std::cos((nn - 2) * u);
}

double beta_eval(std::int64_t n, double u)
{
    double nn = checked(n, u);
    return std::cos((nn - 2.5) * u) / (2 * std::cos(u / 2));
}

double gamma_eval(std::int64_t n, double u)
{
    return alpha_eval(n, u) + beta_eval(n, u);
}

RootLocalization locate_first_root(std::int64_t n)
{
    if (n < 11) throw InvalidParameter("root localization needs n >= 11");
    constexpr int kGrid = 4096;
    const double right = std::numbers::pi / static_cast<double>(2 * n - 5);

    double lo = 0.0; // gamma(0+) = 1/2, treated as positive
    double hi = 0.0;
    bool found = false;
    for (int k = 1; k < kGrid; ++k) {
        double u = right * k / kGrid;
        if (gamma_eval(n, u) <= 0.0) {
            hi = u;
            lo = right * (k - 1) / kGrid;
            found = true;
            break;
        }
    }
    if (!found)
        throw NoSignChangeFound("gamma_" + std::to_string(n) + " stays positive on the sampled grid");

    // keep gamma(lo) > 0 >= gamma(hi); lo = 0 is fine, the limit is 1/2
    while (hi - lo >= 1e-12) {
        double mid = lo + (hi - lo) / 2;
        if (gamma_eval(n, mid) <= 0.0) hi = mid;
        else lo = mid;
    }
    RootLocalization r;
    r.n = n;
    r.lo = lo;
    r.hi = hi;
    r.root = lo + (hi - lo) / 2;
    r.residual = std::abs(gamma_eval(n, r.root));
    return r;
}

GreedySequence greedy_sequence(std::int64_t count)
{
    if (count < 1) throw InvalidParameter("greedy sequence needs count >= 1");
    GreedySequence g;
    double lambda = std::numeric_limits<double>::infinity();
    std::int64_t a = 11;
    for (std::int64_t m = 0; m < count; ++m) {
        RootLocalization r = locate_first_root(a);
        lambda = std::min(lambda, 0.99 * r.root);
        g.terms.push_back(a);
        g.radii.push_back(lambda);
        // least a' > a with pi/(2a' - 5) < lambda
        std::int64_t next = static_cast<std::int64_t>(
                                std::floor((std::numbers::pi / lambda + 5.0) / 2.0)) + 1;
        a = std::max(a + 1, next);
    }
    return g;
}

CycloZ6 psi_at_zeta6(std::int64_t n)
{
    return cyclo_eval(symmetrized_family_poly(n).psi);
}

} // namespace ulab
