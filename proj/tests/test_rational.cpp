#include "doctest.h"
#include "g2v/rational.hpp"

#include <stdexcept>

using namespace g2v;

TEST_CASE("frac canonicalizes") {
    CHECK(frac(2, 4) == Rational(1, 2));
    CHECK(frac(-2, 4) == frac(-1, 2));
    CHECK(frac(1, -2) == frac(-1, 2));
    CHECK(frac(-3, -6) == Rational(1, 2));
    CHECK(frac(0, 7) == 0);
    CHECK(frac(10, 5) == 2);
}

TEST_CASE("rat_to_string always prints num/den in lowest terms") {
    CHECK(rat_to_string(Rational(0)) == "0/1");
    CHECK(rat_to_string(Rational(7)) == "7/1");
    CHECK(rat_to_string(frac(3, 4)) == "3/4");
    CHECK(rat_to_string(frac(-5, 2)) == "-5/2");
    CHECK(rat_to_string(frac(6, -4)) == "-3/2");
}

TEST_CASE("rat_from_string parses the flag grammar") {
    CHECK(rat_from_string("5/4") == frac(5, 4));
    CHECK(rat_from_string("-1/3") == frac(-1, 3));
    CHECK(rat_from_string("7") == 7);
    CHECK(rat_from_string("-2") == -2);
    CHECK(rat_from_string("0") == 0);
    CHECK(rat_from_string("4/6") == frac(2, 3));
}

TEST_CASE("rat_from_string rejects malformed input") {
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("+1/2"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string(" 1/2"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("/2"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("--1"), std::invalid_argument);
}

TEST_CASE("string round trips") {
    for (long num = -9; num <= 9; ++num)
        for (long den : {1L, 2L, 3L, 4L, 8L}) {
            Rational r = frac(num, den);
            CHECK(rat_from_string(rat_to_string(r)) == r);
        }
}

TEST_CASE("integer predicates") {
    CHECK(is_integer(Rational(0)));
    CHECK(is_integer(Rational(-3)));
    CHECK(is_integer(frac(4, 2)));
    CHECK_FALSE(is_integer(frac(1, 2)));

    CHECK(is_positive_integer(Rational(1)));
    CHECK(is_positive_integer(frac(6, 2)));
    CHECK_FALSE(is_positive_integer(Rational(0)));
    CHECK_FALSE(is_positive_integer(Rational(-2)));
    CHECK_FALSE(is_positive_integer(frac(5, 2)));
}

TEST_CASE("to_long on integers") {
    CHECK(to_long(Rational(5)) == 5);
    CHECK(to_long(frac(-6, 2)) == -3);
    CHECK(to_long(Rational(0)) == 0);
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
}

TEST_CASE("rising_factorial") {
    CHECK(rising_factorial(frac(7, 3), 0) == 1);
    CHECK(rising_factorial(Rational(1), 3) == 6);
    CHECK(rising_factorial(frac(-1, 2), 2) == frac(-1, 4));
    CHECK(rising_factorial(frac(1, 2), 3) == frac(15, 8));
    CHECK(rising_factorial(Rational(-2), 3) == 0);
    CHECK(rising_factorial(Rational(4), 2) == 20);
}
