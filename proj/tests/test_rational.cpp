#include <doctest.h>

#include "ratsode/rational.hpp"

using namespace ratsode;

TEST_CASE("rational canonical form") {
    Rational a(4, 6);
    CHECK(a.numerator() == 2);
    CHECK(a.denominator() == 3);
    Rational b(3, -6);
    CHECK(b.numerator() == -1);
    CHECK(b.denominator() == 2);
    CHECK(Rational(0, 5) == Rational(0));
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS(Rational(1).operator/=(Rational(0)));
}

TEST_CASE("rational parsing") {
    CHECK(*Rational::parse("17/16") == Rational(17, 16));
    CHECK(*Rational::parse("-5") == Rational(-5));
    CHECK(!Rational::parse("1/0").has_value());
    CHECK(!Rational::parse("abc").has_value());
}

TEST_CASE("perfect square detection") {
    CHECK(*Rational(9).integer_sqrt_if_square() == 3);
    CHECK(!Rational(8).integer_sqrt_if_square().has_value());
    CHECK(!Rational(9, 4).integer_sqrt_if_square().has_value());
    CHECK(!Rational(-4).integer_sqrt_if_square().has_value());
    // 4*beta + 1 with beta = 3/4 gives 4, the Example 2 pole pattern.
    Rational beta(3, 4);
    CHECK(*(Rational(4) * beta + Rational(1)).integer_sqrt_if_square() == 2);
}
