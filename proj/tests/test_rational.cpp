#include <doctest.h>

#include <numeric>

#include "ccf/rational.hpp"

using namespace ccf;

TEST_CASE("fraction normalization") {
    CHECK(Fraction(6, 9) == Fraction(2, 3));
    CHECK(Fraction(2, -4) == Fraction(-1, 2));
    CHECK(Fraction(-3, 0).is_infinity());
    CHECK(Fraction::infinity().num() == 1);
    CHECK_THROWS_AS(Fraction(0, 0), std::domain_error);
    CHECK(Fraction(1, 2) < Fraction(2, 3));
    CHECK(Fraction(5, 3) < Fraction::infinity());
    CHECK(Fraction::parse("7/19") == Fraction(7, 19));
    CHECK(Fraction::parse("inf").is_infinity());
    CHECK(Fraction(7, 19).str() == "7/19");
    CHECK(Fraction::infinity().str() == "inf");
    CHECK_THROWS_AS(Fraction::parse("a/b"), std::invalid_argument);
}

TEST_CASE("farey neighbors") {
    CHECK(is_farey_neighbor(Fraction(1, 2), Fraction(4, 7)));
    CHECK(is_farey_neighbor(Fraction(0, 1), Fraction::infinity()));
    CHECK_FALSE(is_farey_neighbor(Fraction(1, 3), Fraction(2, 3)));
}

TEST_CASE("farey sum") {
    CHECK(farey_sum(Fraction(4, 11), Fraction(3, 8)) == Fraction(7, 19));
    CHECK(farey_sum(Fraction(0, 1), Fraction::infinity()) == Fraction(1, 1));
    CHECK(farey_sum(Fraction(1, 2), Fraction(4, 7)) == Fraction(5, 9));
    CHECK_THROWS_AS(farey_sum(Fraction(1, 3), Fraction(2, 3)), std::domain_error);
    // Descending order is rejected too.
    CHECK_THROWS_AS(farey_sum(Fraction(3, 8), Fraction(4, 11)), std::domain_error);
}

TEST_CASE("parents") {
    CHECK(parents(Fraction(7, 19)) == std::pair{Fraction(4, 11), Fraction(3, 8)});
    CHECK(parents(Fraction(1, 2)) == std::pair{Fraction(0, 1), Fraction(1, 1)});
    CHECK(parents(Fraction(7, 4)) == std::pair{Fraction(5, 3), Fraction(2, 1)});
    CHECK(parents(Fraction(1, 1)) == std::pair{Fraction(0, 1), Fraction::infinity()});
    CHECK_THROWS_AS(parents(Fraction(0, 1)), std::domain_error);
    CHECK_THROWS_AS(parents(Fraction::infinity()), std::domain_error);
}

TEST_CASE("even-length continued fractions") {
    CHECK(continued_fraction_even(Fraction(7, 19)).a == std::vector<std::int64_t>{0, 2, 1, 2, 2});
    CHECK(continued_fraction_even(Fraction(3, 7)).a == std::vector<std::int64_t>{0, 2, 3});
    // The Euclidean expansion of 1/2 is [0;2]; the parity rule splits it.
    CHECK(continued_fraction_even(Fraction(1, 2)).a == std::vector<std::int64_t>{0, 1, 1});
    CHECK(continued_fraction_even(Fraction(0, 1)).a == std::vector<std::int64_t>{0});
    CHECK(continued_fraction_even(Fraction(5, 1)).a == std::vector<std::int64_t>{5});
    CHECK(continued_fraction_even(Fraction(7, 19)).str() == "[0;2,1,2,2]");
    for (std::int64_t q = 1; q <= 50; ++q)
        for (std::int64_t p = 0; p <= 2 * q; ++p) {
            if (std::gcd(p, q) != 1)
                continue;
            ContinuedFraction cf = continued_fraction_even(Fraction(p, q));
            CHECK(cf.order() % 2 == 0);
            CHECK(cf.evaluate() == Fraction(p, q));
            for (std::size_t i = 1; i < cf.a.size(); ++i)
                CHECK(cf.a[i] >= 1);
        }
}

TEST_CASE("reversed expansion") {
    CHECK(ir_fraction(Fraction(7, 19)) == Fraction(8, 19));
    // Independent route for the same value: the parents pair (4/11, 3/8)
    // puts the reversal at s/y = 8/19.
    CHECK(parents(Fraction(7, 19)).second.den() == 8);
    CHECK(ContinuedFraction{{0, 2, 2, 1, 2}}.evaluate() == Fraction(8, 19));
    CHECK(ir_fraction(Fraction(1, 2)) == Fraction(1, 2));
    for (std::int64_t q = 2; q <= 50; ++q)
        for (std::int64_t p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1)
                continue;
            Fraction x(p, q);
            CHECK(ir_fraction(ir_fraction(x)) == x);
            CHECK(ir_fraction(x).den() == q);
        }
    CHECK_THROWS_AS(ir_fraction(Fraction(3, 2)), std::domain_error);
}
