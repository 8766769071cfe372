#include <doctest.h>

#include "ecctree/rational.hpp"

using ecc::BigInt;
using ecc::Rational;

TEST_CASE("rationals are stored reduced with positive denominator") {
    Rational r = Rational::of(6, 4);
    CHECK(r.num() == 3);
    CHECK(r.den() == 2);

    Rational negative = Rational::of(3, -6);
    CHECK(negative.num() == -1);
    CHECK(negative.den() == 2);

    Rational zero = Rational::of(0, 7);
    CHECK(zero.num() == 0);
    CHECK(zero.den() == 1);

    CHECK_THROWS_AS(Rational::of(1, 0), ecc::Error);
}

TEST_CASE("arithmetic and comparisons are exact") {
    Rational a = Rational::of(1, 3);
    Rational b = Rational::of(1, 6);
    CHECK(a + b == Rational::of(1, 2));
    CHECK(a - b == Rational::of(1, 6));
    CHECK(a * b == Rational::of(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational::of(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), ecc::Error);

    CHECK(Rational::of(37, 4) > Rational(9));
    CHECK(Rational::of(37, 4) < Rational::of(19, 2));
    CHECK(Rational::of(2, 4) == Rational::of(1, 2));
    CHECK(Rational::of(-1, 2) < Rational::of(1, 3));
}

TEST_CASE("values keep full precision beyond 64 bits") {
    Rational big(1);
    for (int i = 1; i <= 40; ++i) big = big * Rational(i); // 40!
    Rational other = big + Rational::of(1, 3);
    CHECK((other - big) == Rational::of(1, 3));
    CHECK(big.den() == 1);
    CHECK(big.num() > BigInt("1000000000000000000000000000000000000000000000"));
}

TEST_CASE("string form is always p/q") {
    CHECK(Rational(9).str() == "9/1");
    CHECK(Rational::of(37, 4).str() == "37/4");
    CHECK(Rational::of(-3, 9).str() == "-1/3");
    CHECK(Rational::of(19, 4).approx() == doctest::Approx(4.75));
}
