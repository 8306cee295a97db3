#include <doctest.h>

#include "tauber/poly.hpp"
#include "test_support.hpp"

using namespace tauber;

namespace {
const Poly kOnePlusT{Rational(1), Rational(1)};
const Poly kOneMinusT{Rational(1), Rational(-1)};
const Poly kCubicFactor{Rational(1), Rational(-2, 3)};  // 1 - (2/3)t
}  // namespace

TEST_CASE("poly_mul reproduces the quintic product") {
    const Poly product = poly_mul(poly_pow(kOnePlusT, 2), poly_pow(kCubicFactor, 3));
    const Poly expected{Rational(1),      Rational(0),      Rational(-5, 3),
                        Rational(10, 27), Rational(20, 27), Rational(-8, 27)};
    CHECK(product == expected);
}

TEST_CASE("poly_mul identities") {
    auto rng = tauber::testing::make_rng(7);
    const Poly p = tauber::testing::random_poly(rng, 6);
    CHECK(poly_mul(p, Poly::one()) == p);
    CHECK(poly_mul(kOneMinusT, kOnePlusT) ==
          Poly{Rational(1), Rational(0), Rational(-1)});
}

TEST_CASE("poly_pow matches known expansions") {
    CHECK(poly_pow(kCubicFactor, 3) ==
          Poly{Rational(1), Rational(-2), Rational(4, 3), Rational(-8, 27)});
    CHECK(poly_pow(kOnePlusT, 2) == Poly{Rational(1), Rational(2), Rational(1)});
    auto rng = tauber::testing::make_rng(8);
    CHECK(poly_pow(tauber::testing::random_poly(rng, 4), 0) == Poly::one());
    CHECK(poly_pow(Poly(), 0) == Poly::one());
}

TEST_CASE("poly_mul is commutative and associative") {
    auto rng = tauber::testing::make_rng(9);
    for (int i = 0; i < 60; ++i) {
        const Poly a = tauber::testing::random_poly(rng, 5);
        const Poly b = tauber::testing::random_poly(rng, 5);
        const Poly c = tauber::testing::random_poly(rng, 5);
        CHECK(poly_mul(a, b) == poly_mul(b, a));
        CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
    }
}

TEST_CASE("zero polynomial is the empty list") {
    CHECK(Poly{}.is_zero());
    CHECK((kOneMinusT - kOneMinusT).is_zero());
    CHECK(poly_mul(Poly{}, kOnePlusT).is_zero());
    CHECK_THROWS_AS(Poly{}.degree(), numeric_error);
    CHECK(Poly{Rational(0), Rational(0)}.is_zero());
}

TEST_CASE("series_inv of the geometric factor") {
    const TruncatedSeries inv = series_inv(kCubicFactor, 3);
    CHECK(inv.coeff(0) == Rational(1));
    CHECK(inv.coeff(1) == Rational(2, 3));
    CHECK(inv.coeff(2) == Rational(4, 9));
    CHECK(inv.coeff(3) == Rational(8, 27));
}

TEST_CASE("series_inv identity and cube cases") {
    CHECK(series_inv(Poly::one(), 5) == TruncatedSeries::from_poly(Poly::one(), 5));
    // oracle: coefficients of (1 - ct)^{-m} are C(m+k-1, k) c^k
    const TruncatedSeries inv = series_inv(poly_pow(kCubicFactor, 3), 2);
    const TruncatedSeries oracle = tauber::testing::neg_binom_series(Rational(2, 3), 3, 2);
    CHECK(inv == oracle);
    CHECK(inv.coeff(2) == Rational(8, 3));
}

TEST_CASE("series_inv requires constant term 1") {
    CHECK_THROWS_AS(series_inv(Poly{Rational(2)}, 3), numeric_error);
    CHECK_THROWS_AS(series_inv(Poly{}, 3), numeric_error);
}

TEST_CASE("series_inv inverts random polynomials exactly") {
    auto rng = tauber::testing::make_rng(10);
    std::uniform_int_distribution<std::size_t> orders(0, 10);
    for (int i = 0; i < 60; ++i) {
        Poly p = tauber::testing::random_poly(rng, 6);
        std::vector<Rational> coeffs(p.coeffs());
        if (coeffs.empty()) coeffs.push_back(Rational(1));
        coeffs[0] = Rational(1);
        p = Poly(std::move(coeffs));
        const std::size_t order = orders(rng);
        const TruncatedSeries inv = series_inv(p, order);
        const TruncatedSeries product = TruncatedSeries::from_poly(p, order) * inv;
        CHECK(product == TruncatedSeries::from_poly(Poly::one(), order));
    }
}

TEST_CASE("truncated series keeps its order") {
    const TruncatedSeries a = TruncatedSeries::from_poly(kOnePlusT, 4);
    const TruncatedSeries b = TruncatedSeries::from_poly(poly_pow(kOnePlusT, 3), 4);
    CHECK((a * b).order() == 4);
    CHECK((a + b).order() == 4);
    CHECK(a.coeffs().size() == 5);
    const TruncatedSeries other(6);
    CHECK_THROWS_AS(a * other, numeric_error);
}

TEST_CASE("both quintic factorizations agree at t = 1/2") {
    const Poly product = poly_mul(poly_pow(kOnePlusT, 2), poly_pow(kCubicFactor, 3));
    const Rational half(1, 2);
    const Rational lhs = product.eval(half);
    const Rational rhs =
        poly_pow(kOnePlusT, 2).eval(half) * poly_pow(kCubicFactor, 3).eval(half);
    CHECK(lhs == rhs);
    CHECK(rhs == Rational(9, 4) * Rational(8, 27));
}
