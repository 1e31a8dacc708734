// Acceptance gate: one numbered criterion per invariant the library promises.
// Run with no arguments for the full battery, or with a criterion number.
// Each criterion prints exactly one [PASS]/[FAIL] line.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ulab/algebraic.hpp"
#include "ulab/braid.hpp"
#include "ulab/census.hpp"
#include "ulab/errors.hpp"
#include "ulab/family.hpp"
#include "ulab/plfunction.hpp"
#include "ulab/rational.hpp"
#include "ulab/report.hpp"
#include "ulab/signature.hpp"

using namespace ulab;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::ostringstream& fail(std::ostringstream& why, const std::string& msg)
{
    if (!why.str().empty()) why << "; ";
    why << msg;
    return why;
}

std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs()
{
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t p = 2; p <= 12; ++p)
        for (std::int64_t q = p + 1; q <= 12; ++q)
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    return out;
}

// numeric unit-circle value of a Laurent polynomial; imaginary part is a
// cross-check that the input was palindromic
std::complex<double> circle_value(const LaurentPoly& p, double u)
{
    std::complex<double> acc(0, 0);
    std::int64_t e = p.min_degree();
    for (const auto& c : p.coeffs()) {
        acc += static_cast<double>(c) * std::polar(1.0, static_cast<double>(e) * u);
        ++e;
    }
    return acc;
}

bool criterion_family_formula(std::ostringstream& why)
{
    auto t0 = Clock::now();
    for (std::int64_t n = 1; n <= 50; ++n) {
        auto r = report(family_alexander(n), "K" + std::to_string(n));
        Rational want = Rational(3 * n) + Rational(102, 5);
        if (r.minus3_integral != want) {
            fail(why, "n=" + std::to_string(n) + ": -3*integral = " +
                          to_fraction_string(r.minus3_integral) + ", want " + to_fraction_string(want));
            return false;
        }
        if (r.is_integral) {
            fail(why, "n=" + std::to_string(n) + " flagged integral");
            return false;
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 5.0) {
        fail(why, "took " + std::to_string(dt) + "s, budget 5s");
        return false;
    }
    return true;
}

bool criterion_family_upsilon(std::ostringstream& why)
{
    for (std::int64_t n = 1; n <= 50; ++n) {
        auto r = report(family_alexander(n), "K");
        if (!(r.upsilon == family_upsilon(n))) {
            fail(why, "n=" + std::to_string(n) + ": pipeline and closed form differ");
            return false;
        }
        for (const auto& [t, v] : r.upsilon.breakpoints())
            if (r.upsilon(Rational(2) - t) != v) {
                fail(why, "n=" + std::to_string(n) + ": not symmetric at t=" + to_fraction_string(t));
                return false;
            }
    }
    return true;
}

bool criterion_family_routes(std::ostringstream& why)
{
    for (std::int64_t n = 1; n <= 50; ++n)
        if (!(family_alexander(n) == family_alexander_torres(n))) {
            fail(why, "n=" + std::to_string(n) + ": closed form and Torres route differ");
            return false;
        }
    for (std::int64_t n = 1; n <= 20; ++n)
        if (!(family_alexander(n) == alexander_of_closure(family_braid_word(n)))) {
            fail(why, "n=" + std::to_string(n) + ": closed form and braid closure differ");
            return false;
        }
    return true;
}

bool criterion_named_knots(std::ostringstream& why)
{
    auto r1 = report(family_alexander(1), "m211");
    auto r2 = report(family_alexander(2), "t09284");
    bool ok = true;
    if (r1.minus3_integral != Rational(117, 5)) {
        fail(why, "m211: " + to_fraction_string(r1.minus3_integral) + ", want 117/5");
        ok = false;
    }
    if (r2.minus3_integral != Rational(132, 5)) {
        fail(why, "t09284: " + to_fraction_string(r2.minus3_integral) + ", want 132/5");
        ok = false;
    }
    return ok;
}

bool criterion_torus_agreement(std::ostringstream& why)
{
    auto t0 = Clock::now();
    for (const auto& [p, q] : coprime_pairs()) {
        std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
        auto ms = multiplicity_sequence(p, q);
        auto sing = singularity_report(ms);
        auto stair = report(torus_alexander(p, q), "T" + tag);
        if (!(sing.upsilon == stair.upsilon)) {
            fail(why, tag + ": multiplicity and staircase upsilons differ");
            return false;
        }
        std::int64_t g = (p - 1) * (q - 1) / 2;
        if (sing.milnor != 2 * g || stair.genus != g || sing.genus != g) {
            fail(why, tag + ": milnor/genus bookkeeping wrong");
            return false;
        }
        if (Rational(sing.minus3_integral) != stair.minus3_integral) {
            fail(why, tag + ": -3*integral disagrees between routes");
            return false;
        }
        if (Rational(sing.omega) != stair.omega) {
            fail(why, tag + ": omega disagrees between routes");
            return false;
        }
        if (!stair.is_integral) {
            fail(why, tag + ": torus -3*integral should be an integer");
            return false;
        }
        auto ineq = check_inequalities(p, q);
        if (!ineq.omega_lt_p_plus_q || !ineq.milnor_le_m1_omega) {
            fail(why, tag + ": count inequality failed");
            return false;
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 2.0) {
        fail(why, "took " + std::to_string(dt) + "s, budget 2s");
        return false;
    }
    return true;
}

bool criterion_semigroup_closure(std::ostringstream& why)
{
    for (const auto& [p, q] : coprime_pairs()) {
        auto r = report(torus_alexander(p, q), "T");
        if (!r.semigroup_closed || r.witness) {
            fail(why, "torus (" + std::to_string(p) + "," + std::to_string(q) +
                          ") semigroup not recognized as closed");
            return false;
        }
    }
    for (std::int64_t n = 1; n <= 50; ++n) {
        auto r = report(family_alexander(n), "K");
        if (r.semigroup_closed || !r.witness) {
            fail(why, "K_" + std::to_string(n) + " semigroup not recognized as non-closed");
            return false;
        }
        if (*r.witness != std::pair<std::int64_t, std::int64_t>{4, 4}) {
            fail(why, "K_" + std::to_string(n) + " witness (" + std::to_string(r.witness->first) +
                          "," + std::to_string(r.witness->second) + "), want (4,4)");
            return false;
        }
    }
    return true;
}

bool criterion_block_integrals(std::ostringstream& why)
{
    for (std::int64_t m = 2; m <= 10; ++m) {
        Rational got = pl_integrate(upsilon_block(m));
        Rational want = Rational(1 - m * m, 3);
        if (got != want) {
            fail(why, "m=" + std::to_string(m) + ": integral " + to_fraction_string(got) +
                          ", want " + to_fraction_string(want));
            return false;
        }
    }
    return true;
}

bool criterion_upsilon_step(std::ostringstream& why)
{
    PLFunction tent = trefoil_tent();
    PLFunction prev = report(family_alexander(1), "K").upsilon;
    for (std::int64_t n = 1; n <= 49; ++n) {
        PLFunction next = report(family_alexander(n + 1), "K").upsilon;
        if (!(next - prev == tent)) {
            fail(why, "n=" + std::to_string(n) + ": upsilon step is not the trefoil tent");
            return false;
        }
        if (!(family_upsilon_step(n) == tent)) {
            fail(why, "n=" + std::to_string(n) + ": closed-form step is not the trefoil tent");
            return false;
        }
        prev = next;
    }
    return true;
}

bool criterion_signature_roots(std::ostringstream& why)
{
    auto t0 = Clock::now();
    std::mt19937 rng(1114);
    for (std::int64_t n : {std::int64_t{11}, std::int64_t{20}, std::int64_t{50}, std::int64_t{100}}) {
        std::string tag = "n=" + std::to_string(n);
        auto psi = symmetrized_family_poly(n).psi;
        std::uniform_real_distribution<double> us(1e-3, 3.14059);
        for (int k = 0; k < 100; ++k) {
            double u = us(rng);
            auto z = circle_value(psi, u);
            if (std::abs(z.imag()) > 1e-9 || std::abs(gamma_eval(n, u) - z.real() / 2) > 1e-9) {
                fail(why, tag + ": gamma disagrees with polynomial circle value at u=" +
                              std::to_string(u));
                return false;
            }
        }
        auto loc = locate_first_root(n);
        if (!(loc.hi - loc.lo < 1e-12) || !(loc.lo > 0) ||
            !(loc.hi < std::numbers::pi / static_cast<double>(2 * n - 5))) {
            fail(why, tag + ": root bracket not localized");
            return false;
        }
        if (gamma_eval(n, loc.lo) <= 0 || gamma_eval(n, loc.hi) > 0) {
            fail(why, tag + ": bracket endpoints have wrong signs");
            return false;
        }
        double zero = std::numbers::pi / static_cast<double>(2 * n - 5);
        if (std::abs(beta_eval(n, zero)) > 1e-12) {
            fail(why, tag + ": beta not zero at pi/(2n-5)");
            return false;
        }
    }
    auto seq = greedy_sequence(5);
    if (seq.terms.size() != 5 || seq.terms.front() != 11) {
        fail(why, "greedy sequence wrong length or start");
        return false;
    }
    for (std::size_t i = 1; i < seq.terms.size(); ++i)
        if (seq.terms[i] <= seq.terms[i - 1]) {
            fail(why, "greedy sequence not strictly increasing");
            return false;
        }
    double dt = seconds_since(t0);
    if (dt >= 10.0) {
        fail(why, "took " + std::to_string(dt) + "s, budget 10s");
        return false;
    }
    return true;
}

bool criterion_zeta6(std::ostringstream& why)
{
    for (std::int64_t n = 1; n <= 12; ++n)
        if (psi_at_zeta6(n).is_zero()) {
            fail(why, "psi_" + std::to_string(n) + " vanishes at zeta_6");
            return false;
        }
    for (std::int64_t n = 1; n <= 6; ++n)
        if (!(psi_at_zeta6(n) == psi_at_zeta6(n + 6))) {
            fail(why, "zeta_6 values not 6-periodic at n=" + std::to_string(n));
            return false;
        }
    return true;
}

bool criterion_census(std::ostringstream& why)
{
    namespace fs = std::filesystem;
    std::mt19937 rng(std::random_device{}());
    fs::path path = fs::temp_directory_path() /
                    ("ulab-acceptance-" + std::to_string(rng()) + ".csv");
    {
        std::ofstream out(path);
        out << "name,polynomial\n";
        for (std::int64_t n = 1; n <= 50; ++n) {
            std::string name = family_census_name(n).value_or("K" + std::to_string(n));
            out << name << "," << family_alexander(n).to_string() << "\n";
        }
        for (const auto& [p, q] : coprime_pairs())
            out << "T(" << p << ";" << q << ")," << torus_alexander(p, q).to_string() << "\n";
    }
    auto rep = run_census(path.string(), CensusFormat::Csv);
    fs::remove(path);

    bool ok = true;
    if (rep.rows.size() != 84 || !rep.rejects.empty()) {
        fail(why, "expected 84 rows and no rejects, got " + std::to_string(rep.rows.size()) +
                      " rows, " + std::to_string(rep.rejects.size()) + " rejects");
        ok = false;
    }
    if (rep.non_integral_count != 50) {
        fail(why, "non-integral count " + std::to_string(rep.non_integral_count) + ", want 50");
        ok = false;
    }
    if (rep.denominators != std::vector<BigInt>{5}) {
        fail(why, "denominator set is not {5}");
        ok = false;
    }
    for (const auto& row : rep.rows) {
        if (row.name == "m211" && row.minus3_integral != Rational(117, 5)) {
            fail(why, "m211 row: " + to_fraction_string(row.minus3_integral));
            ok = false;
        }
        if (row.name == "t09284" && row.minus3_integral != Rational(132, 5)) {
            fail(why, "t09284 row: " + to_fraction_string(row.minus3_integral));
            ok = false;
        }
    }
    return ok;
}

struct Criterion {
    int id;
    const char* summary;
    bool (*run)(std::ostringstream&);
};

const Criterion kCriteria[] = {
    {1, "family -3*integral equals 3n + 102/5 for n = 1..50 within 5s", criterion_family_formula},
    {2, "family pipeline upsilon matches closed form and is symmetric", criterion_family_upsilon},
    {3, "closed form, Torres route and braid closure agree", criterion_family_routes},
    {4, "m211 and t09284 report 117/5 and 132/5", criterion_named_knots},
    {5, "multiplicity and staircase routes agree on torus knots within 2s", criterion_torus_agreement},
    {6, "torus semigroups closed, family semigroups fail at (4,4)", criterion_semigroup_closure},
    {7, "upsilon block integral equals (1 - m^2)/3 for m = 2..10", criterion_block_integrals},
    {8, "upsilon step from K_n to K_{n+1} is the trefoil tent", criterion_upsilon_step},
    {9, "gamma matches the polynomial on the circle; roots localize within 10s",
     criterion_signature_roots},
    {10, "psi at zeta_6 is nonzero and 6-periodic", criterion_zeta6},
    {11, "synthetic census: 50 non-integral rows, denominators {5}", criterion_census},
};

} // namespace

int main(int argc, char** argv)
{
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > 11) {
            std::fprintf(stderr, "usage: %s [1-11]\n", argv[0]);
            return 2;
        }
    }
    int failures = 0;
    for (const auto& c : kCriteria) {
        if (only && c.id != only) continue;
        std::ostringstream why;
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            fail(why, std::string("exception: ") + e.what());
        }
        if (ok) {
            std::printf("[PASS] criterion %d: %s\n", c.id, c.summary);
        } else {
            std::printf("[FAIL] criterion %d: %s (%s)\n", c.id, c.summary, why.str().c_str());
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
