#include <doctest.h>

#include "tauber/rational.hpp"
#include "test_support.hpp"

using tauber::Rational;
using tauber::numeric_error;

TEST_CASE("rational arithmetic basics") {
    CHECK(Rational(2, 3) * Rational(2, 3) == Rational(4, 9));
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("rational stays in lowest terms with positive denominator") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).den() > 0);
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).den() == 1);
}

TEST_CASE("rational error paths") {
    CHECK_THROWS_AS(Rational(1, 0), numeric_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), numeric_error);
    CHECK_THROWS_AS(Rational(0).pow(-1), numeric_error);
    CHECK_THROWS_AS(Rational::from_string("abc"), numeric_error);
    CHECK_THROWS_AS(Rational::from_string("1/0"), numeric_error);
}

TEST_CASE("rational string round trip") {
    CHECK(Rational::from_string("2/3") == Rational(2, 3));
    CHECK(Rational::from_string("-5/3") == Rational(-5, 3));
    CHECK(Rational::from_string("7") == Rational(7));
    CHECK(Rational(-8, 27).str() == "-8/27");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational::from_string(Rational(10, 27).str()) == Rational(10, 27));
}

TEST_CASE("rational arithmetic is exact on random inputs") {
    auto rng = tauber::testing::make_rng();
    for (int i = 0; i < 500; ++i) {
        const Rational a = tauber::testing::random_rational(rng);
        const Rational b = tauber::testing::random_rational(rng);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        // canonical: gcd(|num|, den) = 1, den > 0
        const Rational s = a + b;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), s.num().get_mpz_t(), s.den().get_mpz_t());
        CHECK(g == 1);
        CHECK(s.den() > 0);
    }
}
