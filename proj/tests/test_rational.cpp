#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "smallminors/rational.hpp"

using smallminors::Rational;

TEST_SUITE("rational") {
    TEST_CASE("lowest terms and sign") {
        Rational r(6, -4);
        CHECK(r.num() == -3);
        CHECK(r.den() == 2);
        CHECK(r.str() == "-3/2");
        CHECK(Rational(4, 2).str() == "2");
        CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    }

    TEST_CASE("arithmetic and order") {
        Rational a(1, 3), b(1, 6);
        CHECK(a + b == Rational(1, 2));
        CHECK(a - b == b);
        CHECK(a * b == Rational(1, 18));
        CHECK(a / b == Rational(2));
        CHECK(b < a);
        CHECK(-a < b);
        CHECK_THROWS(a / Rational(0));
    }

    TEST_CASE("ceil and floor") {
        CHECK(Rational(8, 3).ceil() == 3);
        CHECK(Rational(8, 3).floor() == 2);
        CHECK(Rational(-8, 3).ceil() == -2);
        CHECK(Rational(-8, 3).floor() == -3);
        CHECK(Rational(6, 3).ceil() == 2);
    }

    TEST_CASE("parse") {
        CHECK(Rational::parse("1/3") == Rational(1, 3));
        CHECK(Rational::parse("0.25") == Rational(1, 4));
        CHECK(Rational::parse("-2") == Rational(-2));
        CHECK(Rational::parse("1.5") == Rational(3, 2));
        CHECK_THROWS(Rational::parse("x"));
        CHECK_THROWS(Rational::parse("1/0"));
        CHECK_THROWS(Rational::parse(""));
    }

    TEST_CASE("overflow is reported") {
        Rational big(INT64_MAX / 2);
        CHECK_THROWS_AS(big * big, std::overflow_error);
    }
}
