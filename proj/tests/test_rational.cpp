#include <catch2/catch_amalgamated.hpp>

#include "affprox/rational.hpp"

using namespace affprox;

TEST_CASE("rationals are canonical after construction") {
    const Rational a = make_rational(2, 6);
    CHECK(numerator(a) == 1);
    CHECK(denominator(a) == 3);

    const Rational b = make_rational(3, -6);
    CHECK(numerator(b) == -1);
    CHECK(denominator(b) == 2);

    CHECK(make_rational(0, 7) == 0);
    CHECK(denominator(make_rational(0, 7)) == 1);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * 3 == 1);
    CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
    CHECK(Rational(7, 2) - Rational(7, 2) == 0);
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("division by zero is an error") {
    CHECK_THROWS_AS(make_rational(1, 0), ValidationError);
    CHECK_THROWS(Rational(1, 2) / Rational(0));
}

TEST_CASE("parsing accepts integers and fractions only") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-7/2") == Rational(-7, 2));
    CHECK(parse_rational("4/8") == Rational(1, 2));
    CHECK(parse_rational("-0") == 0);

    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/"), ParseError);
    CHECK_THROWS_AS(parse_rational("/2"), ParseError);
    CHECK_THROWS_AS(parse_rational("1 / 2"), ParseError);
    CHECK_THROWS_AS(parse_rational("--3"), ParseError);
    CHECK_THROWS_AS(parse_rational("2/3/4"), ParseError);
}

TEST_CASE("formatting round-trips") {
    CHECK(format_rational(Rational(1, 3)) == "1/3");
    CHECK(format_rational(Rational(-2)) == "-2");
    CHECK(format_rational(Rational(0)) == "0");

    // hand-rolled sweep over small numerators and denominators
    for (int num = -20; num <= 20; ++num) {
        for (int den = 1; den <= 12; ++den) {
            const Rational v = make_rational(num, den);
            CHECK(parse_rational(format_rational(v)) == v);
        }
    }
}
