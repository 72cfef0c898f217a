#include <doctest.h>

#include "ccf/lrword.hpp"

using namespace ccf;

namespace {
LRWord W(const char* s) { return LRWord::parse(s); }
} // namespace

TEST_CASE("parsing and rendering") {
    CHECK(W("RL^2RL") == W("RLLRL"));
    CHECK(W("-") == LRWord());
    CHECK(LRWord().str() == "-");
    CHECK(W("L^3").str() == "LLL");
    CHECK_THROWS_AS(W("LX"), std::invalid_argument);
    CHECK_THROWS_AS(W("L^0"), std::invalid_argument);
    CHECK_THROWS_AS(LRWord("lr"), std::invalid_argument);
    CHECK(W("RLLRL").count_l() == 3);
    CHECK(W("RLLRL").count_r() == 2);
}

TEST_CASE("words of fractions") {
    CHECK(word_of(Fraction(1, 5)) == W("LLL"));
    CHECK(word_of(Fraction(2, 7)) == W("RLL"));
    CHECK(word_of(Fraction(3, 8)) == W("LRL"));
    CHECK(word_of(Fraction(3, 7)) == W("RRL"));
    CHECK(word_of(Fraction(1, 2)) == LRWord());
    CHECK(word_of(Fraction(5, 12)) == W("LR^2L"));
    CHECK_THROWS_AS(word_of(Fraction(3, 2)), std::domain_error);
    CHECK_THROWS_AS(word_of(Fraction(0, 1)), std::domain_error);
}

TEST_CASE("fractions of words by the letter fold") {
    // Fold of RL^2RL, one letter at a time: 1/2, 2/3, 2/5, 2/7, 7/12, 7/19.
    CHECK(fraction_of(LRWord()) == Fraction(1, 2));
    CHECK(fraction_of(W("R")) == Fraction(2, 3));
    CHECK(fraction_of(W("RL")) == Fraction(2, 5));
    CHECK(fraction_of(W("RLL")) == Fraction(2, 7));
    CHECK(fraction_of(W("RLLR")) == Fraction(7, 12));
    CHECK(fraction_of(W("RL^2RL")) == Fraction(7, 19));

    CHECK(fraction_of(W("L^2RL")) == Fraction(4, 11));
    CHECK(fraction_of(W("LRL")) == Fraction(3, 8));
    CHECK(fraction_of(W("RL")) == Fraction(2, 5));
    CHECK(fraction_of(W("L")) == Fraction(1, 3));
}

TEST_CASE("letter operations") {
    CHECK(i_word(W("LLLR")) == W("RRRL"));
    CHECK(r_word(W("LLLR")) == W("RLLL"));
    CHECK(ir_word(W("LLLR")) == W("LRRR"));
    CHECK(i_word(LRWord()) == LRWord());
    CHECK(r_word(W("L")) == W("L"));

    // Fraction rows of the two operation tables.
    CHECK(fraction_of(W("LLLR")) == Fraction(5, 9));
    CHECK(fraction_of(W("RRRL")) == Fraction(4, 9));
    CHECK(fraction_of(W("RLLL")) == Fraction(2, 9));
    CHECK(fraction_of(W("LRRR")) == Fraction(7, 9));

    CHECK(i_word(W("LLRR")) == W("RRLL"));
    CHECK(r_word(W("LLRR")) == W("RRLL"));
    CHECK(ir_word(W("LLRR")) == W("LLRR"));
    CHECK(fraction_of(W("LLRR")) == Fraction(7, 10));
    CHECK(fraction_of(W("RRLL")) == Fraction(3, 10));
}

TEST_CASE("join") {
    CHECK(join(LRWord(), W("L^2R")) == W("L^3R"));
    CHECK(fraction_of(W("L^3R")) == Fraction(5, 9));
    CHECK(join(W("RL"), W("R^2L")) == W("LR^2L"));
    CHECK(join(W("L"), LRWord()) == W("RL"));
    CHECK(fraction_of(W("RL")) == Fraction(2, 5));
    // 1/2 and 1/3 are neighbors but in descending order here.
    CHECK_THROWS_AS(join(LRWord(), W("L")), std::domain_error);
    // 1/3 and 2/3 are not neighbors.
    CHECK_THROWS_AS(join(W("L"), W("R")), std::domain_error);
}
