#include <doctest.h>

#include "ccf/tangle.hpp"

using namespace ccf;

namespace {
LaurentPoly LP(const char* s) { return LaurentPoly::parse(s); }
BracketVector BV(const char* n, const char* d) { return {LP(n), LP(d)}; }
} // namespace

TEST_CASE("twist blocks") {
    CHECK(integer_tangle(0) == BV("0", "1"));
    CHECK(integer_tangle(1) == BV("A^-1", "A"));
    CHECK(integer_tangle(3) == BV("A-A^-3+A^-7", "A^3"));
    CHECK(vertical_tangle(0) == BV("1", "0"));
    CHECK(vertical_tangle(1) == BV("A^-1", "A"));
    CHECK(vertical_tangle(2) == BV("A^-2", "1-A^4"));
    CHECK_THROWS_AS(integer_tangle(-1), std::domain_error);
}

TEST_CASE("sum and product") {
    BracketVector zero = integer_tangle(0), inf = vertical_tangle(0);
    CHECK(tangle_sum(zero, zero) == zero);
    CHECK(tangle_product(inf, inf) == inf);
    // The two operations are exchanged by rotation.
    BracketVector t = BV("A^2-1", "A^-3"), u = BV("A", "2-A^-2");
    CHECK(rot(tangle_sum(t, u)) == tangle_product(rot(t), rot(u)));
}

TEST_CASE("mirror, rotation, inversion") {
    BracketVector t = BV("A^5-2A", "3+A^-4");
    CHECK(rot(t) == BV("3+A^-4", "A^5-2A"));
    CHECK(rot(rot(t)) == t);
    CHECK(inv(t) == mirror(rot(t)));
    CHECK(inv(t) == rot(mirror(t)));
    // The mirror bars both components; this is the bracket of the negative
    // twist block.
    CHECK(mirror(integer_tangle(2)).n == integer_tangle(2).n.bar());
    CHECK(mirror(integer_tangle(2)).d == integer_tangle(2).d.bar());
}

TEST_CASE("v and closures") {
    CHECK(v_map(integer_tangle(0)) == LP("1"));
    CHECK(v_map(vertical_tangle(0)) == delta());
    for (std::int64_t n = 0; n <= 8; ++n)
        CHECK(v_map(integer_tangle(n)) == neg_a3_pow(-n));
    CHECK(denominator_closure(integer_tangle(0)) == LP("1"));
    CHECK(numerator_closure(integer_tangle(0)) == delta());
}

TEST_CASE("tangles of fractions") {
    CHECK(tangle_of_fraction(Fraction(0, 1)) == BV("0", "1"));
    CHECK(tangle_of_fraction(Fraction::infinity()) == BV("1", "0"));
    for (std::int64_t n = 1; n <= 8; ++n)
        CHECK(tangle_of_fraction(Fraction(1, n)) == vertical_tangle(n));
    for (std::int64_t m = 1; m <= 6; ++m)
        for (std::int64_t n = 1; n <= 6; ++n) {
            Fraction x(m * n + 1, n);
            BracketVector expect{
                LaurentPoly::monomial(1, static_cast<int>(-n)) * neg_a3_pow(-m) +
                    vertical_tangle(n).d * integer_tangle(m).n,
                vertical_tangle(n).d * integer_tangle(m).d};
            CHECK(tangle_of_fraction(x) == expect);
        }
    CHECK_THROWS_AS(tangle_of_fraction(Fraction(-1, 2)), std::domain_error);
}

TEST_CASE("denominator closure of the 7/19 tangle") {
    CHECK(denominator_closure(tangle_of_fraction(Fraction(7, 19))) ==
          LP("A^15-2A^11+3A^7-4A^3+3A^-1-3A^-5+2A^-9-A^-13"));
}
