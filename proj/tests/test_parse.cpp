#include <catch2/catch_amalgamated.hpp>

#include "unital/parse.hpp"

using namespace unital;

TEST_CASE("atoms and juxtaposition") {
    const UnitalFn x = parse_unital("x", 1);
    CHECK(x.constant() == CycNum::one(1));
    CHECK(x.exps() == std::map<Site, int>{{Site::origin(), 1}});

    CHECK(parse_unital("2x", 2).constant() == CycNum::from_rat(2, Rat(2)));
    CHECK(parse_unital("2(1+i)x/((x+1)(x+i))", 4).canonical_key() ==
          parse_unital("(2+2i)x/((x+1)(x+i))", 4).canonical_key());
}

TEST_CASE("division binds to the next factor only") {
    CHECK(parse_unital("4/2x", 2).canonical_key() == parse_unital("2x", 2).canonical_key());
    // (x-1)(x-u) expands to x^2 + u^2 x + u since u^2 = -1-u
    CHECK(parse_unital("3x/((x-1)(x-u))", 3).canonical_key() ==
          parse_unital("3x/(x^2+u^2x+u)", 3).canonical_key());
}

TEST_CASE("powers") {
    CHECK(parse_unital("x^-1", 1).exps() == std::map<Site, int>{{Site::origin(), -1}});
    const UnitalFn q = parse_unital("((x+1)/(x-1))^4", 4);
    CHECK(q.exps() == std::map<Site, int>{{Site::root(0), -4}, {Site::root(2), 4}});
}

TEST_CASE("fractions reduce through factored form") {
    // (x^2-1)/(x-1) collapses to x+1
    CHECK(parse_unital("(x^2-1)/(x-1)", 2).canonical_key() == parse_unital("x+1", 2).canonical_key());
}

TEST_CASE("symbols are order-checked") {
    CHECK_THROWS_AS(parse_unital("ix", 3), ParseError);
    CHECK_THROWS_AS(parse_unital("ux", 4), ParseError);
    CHECK_NOTHROW(parse_unital("zx", 5));
    CHECK(parse_unital("ux", 3).canonical_key() == parse_unital("zx", 3).canonical_key());
    CHECK(parse_unital("ix", 4).canonical_key() == parse_unital("zx", 4).canonical_key());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_fraction("x +", 2), ParseError);
    CHECK_THROWS_AS(parse_fraction("(x", 2), ParseError);
    CHECK_THROWS_AS(parse_fraction("x)", 2), ParseError);
    CHECK_THROWS_AS(parse_unital("x/(x-2)", 2), ParseError);    // root outside Gamma_N^0
    CHECK_THROWS_AS(parse_unital("5", 2), ParseError);          // constant
    CHECK_THROWS_AS(parse_fraction("1/(x-x)", 2), ParseError);  // zero denominator
}

TEST_CASE("value-line parsing") {
    CHECK(parse_p1("inf", 4).infinite);
    CHECK(parse_p1("1/2", 2) == P1Value::finite(CycNum::from_rat(2, make_rat(1, 2))));
    CHECK(parse_p1("-u^2", 3) == P1Value::finite(-CycNum::root_of_unity(3, 2)));
    CHECK(parse_p1("(1+i)/2", 4) ==
          P1Value::finite(CycNum::from_coeffs(4, {make_rat(1, 2), make_rat(1, 2)})));
    CHECK_THROWS_AS(parse_p1("x+1", 2), ParseError);
}
