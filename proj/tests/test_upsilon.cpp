#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <vector>

#include "ulab/errors.hpp"
#include "ulab/poly_text.hpp"
#include "ulab/report.hpp"
#include "ulab/semigroup.hpp"
#include "ulab/staircase.hpp"

using namespace ulab;

namespace {

using Pt = std::pair<std::int64_t, std::int64_t>;

LaurentPoly delta_from_gaps(const std::vector<std::int64_t>& gaps)
{
    std::map<std::int64_t, BigInt> terms;
    terms[0] = 1;
    for (std::int64_t c : gaps) {
        terms[c + 1] += 1;
        terms[c] -= 1;
    }
    return LaurentPoly::from_terms(terms);
}

// gap sets with the 0 <-> 2g-1 pairing built in, so every sample is valid
std::vector<std::int64_t> random_symmetric_gaps(std::mt19937& rng, std::int64_t genus)
{
    std::bernoulli_distribution coin;
    std::vector<std::int64_t> gaps{2 * genus - 1};
    for (std::int64_t k = 1; k <= genus - 1; ++k)
        gaps.push_back(coin(rng) ? k : 2 * genus - 1 - k);
    std::sort(gaps.begin(), gaps.end());
    return gaps;
}

// the hull maximum equals the maximum over every staircase point
Rational brute_force_upsilon(const GapStaircase& sc, const Rational& t)
{
    Rational best = Rational(t * sc.points.front().first - sc.points.front().second);
    for (const auto& [x, y] : sc.points) best = std::max(best, Rational(t * x - y));
    return best;
}

} // namespace

TEST_CASE("validation accepts the staircase shapes")
{
    CHECK(validate_lspace_form(parse_poly("1")).empty());
    CHECK(validate_lspace_form(parse_poly("t^2 - t + 1")) == std::vector<std::int64_t>{1});
    CHECK(validate_lspace_form(parse_poly("t^6 - t^5 + t^4 - t^3 + t^2 - t + 1")) ==
          std::vector<std::int64_t>{1, 3, 5});
    CHECK(validate_lspace_form(parse_poly("t^6 - t^5 + t^3 - t + 1")) ==
          std::vector<std::int64_t>{1, 2, 5});
}

TEST_CASE("validation rejects everything else")
{
    CHECK_THROWS_AS(validate_lspace_form(LaurentPoly::zero()), NotLSpaceForm);
    CHECK_THROWS_AS(validate_lspace_form(parse_poly("t^-1 + 1")), NotLSpaceForm);
    CHECK_THROWS_AS(validate_lspace_form(parse_poly("t^2 - t + 2")), NotLSpaceForm);
    CHECK_THROWS_AS(validate_lspace_form(parse_poly("2t^2 - t + 1")), NotLSpaceForm);
    CHECK_THROWS_AS(validate_lspace_form(parse_poly("t^2 + t + 1")), NotLSpaceForm);
    CHECK_THROWS_AS(validate_lspace_form(parse_poly("t^3 - t + 1")), NotLSpaceForm);
    CHECK_THROWS_AS(validate_lspace_form(parse_poly("t^4 - t^3 + t^2 - t + 1 - t + t^2")),
                    NotLSpaceForm);
    // right coefficient alphabet, wrong symmetry
    CHECK_THROWS_AS(validate_lspace_form(parse_poly("t^6 - t^4 + t^2 - t + 1")), NotLSpaceForm);
}

TEST_CASE("formal semigroup membership")
{
    FormalSemigroup s = formal_semigroup(parse_poly("t^6 - t^5 + t^4 - t^3 + t^2 - t + 1"));
    CHECK(s.genus == 3);
    CHECK(s.gaps == std::vector<std::int64_t>{1, 3, 5});
    CHECK(s.contains(0));
    CHECK(s.contains(2));
    CHECK(s.contains(6));
    CHECK(s.contains(100));
    CHECK_FALSE(s.contains(1));
    CHECK_FALSE(s.contains(5));
    CHECK_FALSE(s.contains(-2));
}

TEST_CASE("first family member has the frozen gap set")
{
    LaurentPoly k1 = parse_poly(
        "t^18 - t^17 + t^14 - t^13 + t^12 - t^11 + t^9 - t^7 + t^6 - t^5 + t^4 - t + 1");
    FormalSemigroup s = formal_semigroup(k1);
    CHECK(s.genus == 9);
    CHECK(s.gaps == std::vector<std::int64_t>{1, 2, 3, 5, 7, 8, 11, 13, 17});
}

TEST_CASE("closure scan returns the first failing pair")
{
    CHECK_FALSE(is_closed_under_addition(formal_semigroup(parse_poly("t^2 - t + 1"))));
    CHECK_FALSE(is_closed_under_addition(formal_semigroup(parse_poly("t^6 - t^5 + t^3 - t + 1"))));

    LaurentPoly k1 = parse_poly(
        "t^18 - t^17 + t^14 - t^13 + t^12 - t^11 + t^9 - t^7 + t^6 - t^5 + t^4 - t + 1");
    auto witness = is_closed_under_addition(formal_semigroup(k1));
    REQUIRE(witness.has_value());
    CHECK(*witness == std::pair<std::int64_t, std::int64_t>{4, 4});
}

TEST_CASE("staircase walk takes one step per integer below 2g")
{
    GapStaircase tref = gap_staircase({1}, 1);
    CHECK(tref.points == std::vector<Pt>{{-1, 0}, {0, 2}, {1, 2}});

    GapStaircase t27 = gap_staircase({1, 3, 5}, 3);
    CHECK(t27.points ==
          std::vector<Pt>{{-3, 0}, {-2, 2}, {-1, 2}, {0, 4}, {1, 4}, {2, 6}, {3, 6}});

    CHECK(gap_staircase({}, 0).points == std::vector<Pt>{{0, 0}});

    CHECK_THROWS_AS(gap_staircase({1}, 2), MalformedStaircase);
    CHECK_THROWS_AS(gap_staircase({5}, 1), MalformedStaircase);
}

TEST_CASE("convex minorant keeps only the supporting vertices")
{
    CHECK(convex_minorant(gap_staircase({1}, 1)).vertices == std::vector<Pt>{{-1, 0}, {1, 2}});

    // interior points all sit above the single chord
    CHECK(convex_minorant(gap_staircase({1, 3, 5}, 3)).vertices ==
          std::vector<Pt>{{-3, 0}, {3, 6}});

    GapStaircase k1 = gap_staircase({1, 2, 3, 5, 7, 8, 11, 13, 17}, 9);
    CHECK(convex_minorant(k1).vertices ==
          std::vector<Pt>{{-9, 0}, {-5, 2}, {0, 6}, {5, 12}, {9, 18}});
}

TEST_CASE("legendre transform of small hulls")
{
    PLFunction tref = legendre_upsilon(convex_minorant(gap_staircase({1}, 1)));
    CHECK(tref == PLFunction({{Rational(0), Rational(0)},
                              {Rational(1), Rational(-1)},
                              {Rational(2), Rational(0)}}));

    PLFunction unknot = legendre_upsilon(convex_minorant(gap_staircase({}, 0)));
    CHECK(unknot == PLFunction::zero());

    PLFunction t27 = legendre_upsilon(convex_minorant(gap_staircase({1, 3, 5}, 3)));
    CHECK(t27(Rational(1)) == Rational(-3));
    CHECK(t27.breakpoints().size() == 3);
}

TEST_CASE("report assembles the invariants")
{
    auto r = report(parse_poly("t^2 - t + 1"), "trefoil");
    CHECK(r.name == "trefoil");
    CHECK(r.genus == 1);
    CHECK(r.tau == 1);
    CHECK(r.integral == Rational(-1));
    CHECK(r.minus3_integral == Rational(3));
    CHECK(r.omega == Rational(1));
    CHECK(r.is_integral);
    CHECK(r.semigroup_closed);
    CHECK_FALSE(r.witness);

    CHECK_THROWS_AS(report(parse_poly("t^2 + t + 1"), "bad"), NotLSpaceForm);
}

TEST_CASE("report serializes with the documented keys")
{
    std::string js = report_to_json(report(parse_poly("t^2 - t + 1"), "trefoil"));
    for (const char* key : {"\"name\"", "\"genus\"", "\"tau\"", "\"upsilon\"", "\"integral\"",
                            "\"minus3I\"", "\"omega\"", "\"integral_verdict\"",
                            "\"semigroup_closed\"", "\"witness\""})
        CHECK(js.find(key) != std::string::npos);
    CHECK(js.find("\"minus3I\":\"3\"") != std::string::npos);
}

TEST_CASE("upsilon on random symmetric gap sets matches the direct maximum")
{
    std::mt19937 rng(5150);
    std::uniform_int_distribution<std::int64_t> pick_genus(1, 12);
    std::uniform_int_distribution<std::int64_t> num(0, 16);
    for (int trial = 0; trial < 200; ++trial) {
        std::int64_t g = pick_genus(rng);
        std::vector<std::int64_t> gaps = random_symmetric_gaps(rng, g);
        LaurentPoly delta = delta_from_gaps(gaps);
        REQUIRE(delta.is_palindromic());
        FormalSemigroup s = formal_semigroup(delta);
        REQUIRE(s.gaps == gaps);

        GapStaircase sc = gap_staircase(s.gaps, s.genus);
        PLFunction up = legendre_upsilon(convex_minorant(sc));
        CHECK(up(Rational(0)) == 0);
        CHECK(up(Rational(2)) == 0);
        CHECK(up.is_convex());
        for (const auto& [t, v] : up.breakpoints()) CHECK(up(Rational(2) - t) == v);
        for (int probe = 0; probe < 5; ++probe) {
            Rational t(num(rng), 8);
            CHECK(up(t) == brute_force_upsilon(sc, t));
            CHECK(up(t) <= 0);
        }
    }
}
