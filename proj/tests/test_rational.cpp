#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ratrel/rational.hpp"
#include "ratrel/sampling.hpp"

using namespace ratrel;

TEST_CASE("canonical form") {
    CHECK(Rational(6, 4).num() == 3);
    CHECK(Rational(6, 4).den() == 2);
    CHECK(Rational(3, -6).num() == -1);
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(-10, -5) == Rational(2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse and str round trip") {
    CHECK(Rational::parse("3/5") == Rational(3, 5));
    CHECK(Rational::parse("-3/5") == Rational(-3, 5));
    CHECK(Rational::parse("+7") == Rational(7));
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(5).str() == "5");

    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1 / 2"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
    CHECK(sq(Rational(-3, 4)) == Rational(9, 16));
}

TEST_CASE("round trips on random rationals") {
    SplitMix64 g(11);
    for (int i = 0; i < 500; ++i) {
        Rational a = sample_rational(g);
        Rational b = sample_rational(g);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("ordered field laws on random triples") {
    SplitMix64 g(12);
    for (int i = 0; i < 500; ++i) {
        Rational x = sample_rational(g);
        Rational y = sample_rational(g);
        Rational z = sample_rational(g);
        if (x <= y) CHECK(x + z <= y + z);
        if (Rational(0) <= x && Rational(0) <= y) CHECK(Rational(0) <= x * y);
        CHECK((x <= y || y <= x));
    }
}

TEST_CASE("rational_sqrt") {
    CHECK(rational_sqrt(Rational(9, 16)) == Rational(3, 4));
    CHECK(!rational_sqrt(Rational(2)).has_value());
    // 1 - (3/5)^2 = 16/25: the Pythagorean identity behind rational boosts.
    CHECK(rational_sqrt(Rational(1) - sq(Rational(3, 5))) == Rational(4, 5));
    CHECK(rational_sqrt(Rational(0)) == Rational(0));
    CHECK_THROWS_AS(rational_sqrt(Rational(-1)), std::domain_error);

    SplitMix64 g(13);
    for (int i = 0; i < 300; ++i) {
        Rational x = sample_rational(g);
        auto r = rational_sqrt(sq(x));
        REQUIRE(r.has_value());
        CHECK(sq(*r) == sq(x));
        if (auto s = rational_sqrt(abs(x))) CHECK(sq(*s) == abs(x));
    }
}

TEST_CASE("dyadic helpers") {
    CHECK(dyadic_round(Rational(1, 3), 2) == Rational(1, 4));
    CHECK(dyadic_round(Rational(-1, 3), 2) == Rational(-1, 4));
    CHECK(dyadic_round(Rational(5, 8), 3) == Rational(5, 8));
    int k = dyadic_bits_for(Rational(1, 100));
    CHECK(k >= 2);
    CHECK(Rational(mpz_class(1), mpz_class(1) << static_cast<unsigned>(k)) <= Rational(1, 400));
    CHECK(dyadic_bits_for(Rational(10)) == 2);
    CHECK_THROWS_AS(dyadic_bits_for(Rational(0)), std::invalid_argument);
}
