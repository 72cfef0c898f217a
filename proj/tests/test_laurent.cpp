#include <doctest.h>

#include <limits>
#include <random>

#include "ccf/laurent.hpp"

using namespace ccf;

namespace {
LaurentPoly LP(const char* s) { return LaurentPoly::parse(s); }
} // namespace

TEST_CASE("addition with cancellation") {
    CHECK(LP("A^4") + LP("-A^4") == LaurentPoly());
    CHECK(LP("-A^4-A^-4") + LP("A^4") == LP("-A^-4"));
    CHECK(delta() + delta() == LP("-2A^2-2A^-2"));
}

TEST_CASE("multiplication") {
    CHECK(delta() * delta() == LP("A^4+2+A^-4"));
    CHECK(LP("A^3") * LP("A^-3") == LP("1"));
    CHECK(LP("-A^3") * LP("-A^-3") == LP("1"));
    CHECK(neg_a3_pow(2) * neg_a3_pow(-1) == neg_a3_pow(1));
    CHECK(neg_a3_pow(-5) == LP("-A^-15"));
}

TEST_CASE("bar involution") {
    CHECK(LP("A^4").bar() == LP("A^-4"));
    CHECK(LP("-A^4+1+A^-8").bar() == LP("-A^-4+1+A^8"));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> exp(-10, 10);
    std::uniform_int_distribution<std::int64_t> coeff(-5, 5);
    for (int i = 0; i < 50; ++i) {
        std::vector<LaurentPoly::Term> terms;
        for (int k = 0; k < 5; ++k)
            terms.push_back({exp(rng), coeff(rng)});
        LaurentPoly p = LaurentPoly::from_terms(terms);
        CHECK(p.bar().bar() == p);
    }
}

TEST_CASE("substitution A^4 = -1") {
    CHECK(LP("-A^4-A^-4").eval_at_a4_minus1() == 2);
    CHECK(LP("-A^12+2A^8-3A^4+4-3A^-4+3A^-8-2A^-12+A^-16").eval_at_a4_minus1() == 19);
    CHECK(LP("1-A^-4+2A^-8-2A^-12+A^-16").eval_at_a4_minus1() == 7);
    CHECK_THROWS_AS(LP("A^3").eval_at_a4_minus1(), std::domain_error);
    CHECK_THROWS_AS(delta().eval_at_a4_minus1(), std::domain_error);
}

TEST_CASE("canonical form up to bar") {
    CHECK(LP("-A^4+1+A^-8").canonical_up_to_bar() == LP("A^8+1-A^-4").canonical_up_to_bar());
    CHECK(delta().canonical_up_to_bar() == delta());
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> exp(-8, 8);
    std::uniform_int_distribution<std::int64_t> coeff(-4, 4);
    for (int i = 0; i < 50; ++i) {
        std::vector<LaurentPoly::Term> terms;
        for (int k = 0; k < 4; ++k)
            terms.push_back({exp(rng), coeff(rng)});
        LaurentPoly p = LaurentPoly::from_terms(terms);
        LaurentPoly canon = p.canonical_up_to_bar();
        CHECK((canon == p || canon == p.bar()));
        CHECK(canon.canonical_up_to_bar() == canon);
    }
}

TEST_CASE("rendering and parsing") {
    const char* example = "-A^12+2A^8-3A^4+4-3A^-4+3A^-8-2A^-12+A^-16";
    CHECK(LP(example).str() == example);
    CHECK(LaurentPoly().str() == "0");
    CHECK(LP("0") == LaurentPoly());
    CHECK(LP("A").str() == "A");
    CHECK(LP("-2A+3A^-1").str() == "-2A+3A^-1");
    CHECK(LP(" A^4 + A^-4 ") == LP("A^4+A^-4"));
    CHECK_THROWS_AS(LP("x+1"), std::invalid_argument);
    CHECK_THROWS_AS(LP(""), std::invalid_argument);
    CHECK_THROWS_AS(LP("A^"), std::invalid_argument);
}

TEST_CASE("overflow aborts loudly") {
    LaurentPoly big = LaurentPoly::monomial(std::numeric_limits<std::int64_t>::max(), 0);
    CHECK_THROWS_AS(big + big, OverflowError);
    CHECK_THROWS_AS(big * LaurentPoly::constant(2), OverflowError);
}
