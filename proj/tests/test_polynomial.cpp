#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vieta/polynomial.hpp"

using vieta::Error;
using vieta::parse_polynomial;
using vieta::Polynomial;
using vieta::Rational;

TEST_CASE("zero polynomial is exactly {0}") {
    Polynomial z;
    CHECK(z.is_zero());
    CHECK(z.coefficients() == std::vector<Rational>{Rational(0)});
    CHECK(Polynomial({Rational(0), Rational(0), Rational(0)}) == z);
}

TEST_CASE("trailing zero coefficients are trimmed") {
    Polynomial p({Rational(1), Rational(2), Rational(0), Rational(0)});
    CHECK(p.degree() == 1);
    CHECK(p.leading() == 2);
}

TEST_CASE("exact arithmetic") {
    Polynomial xm1({Rational(-1), Rational(1)});
    Polynomial xp1({Rational(1), Rational(1)});
    CHECK(xm1 * xp1 == Polynomial({Rational(-1), Rational(0), Rational(1)}));
    CHECK(xm1 + xp1 == Polynomial({Rational(0), Rational(2)}));
    CHECK(xm1 - xm1 == Polynomial());

    Polynomial cubic({Rational(-6), Rational(11), Rational(-6), Rational(1)});
    CHECK(cubic.evaluate(Rational(1)) == 0);
    CHECK(cubic.evaluate(Rational(2)) == 0);
    CHECK(cubic.evaluate(Rational(1, 2)) == Rational(-15, 8));
    CHECK(cubic.derivative() == Polynomial({Rational(11), Rational(-12), Rational(3)}));
}

TEST_CASE("text format examples") {
    Polynomial cubic({Rational(-6), Rational(11), Rational(-6), Rational(1)});
    CHECK(vieta::to_string(cubic) == "x^3 - 6 x^2 + 11 x - 6");
    CHECK(parse_polynomial("x^3 - 6 x^2 + 11 x - 6") == cubic);
    CHECK(parse_polynomial("x^3-6x^2+11x-6") == cubic);

    Polynomial halves({Rational(1, 2), Rational(0), Rational(3, 2)});
    CHECK(vieta::to_string(halves) == "3/2 x^2 + 1/2");
    CHECK(parse_polynomial("3/2 x^2 + 1/2") == halves);
    CHECK(parse_polynomial("3/2*x^2 + 1/2") == halves);

    CHECK(vieta::to_string(Polynomial()) == "0");
    CHECK(parse_polynomial("0") == Polynomial());
    CHECK(parse_polynomial("-x") == Polynomial({Rational(0), Rational(-1)}));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_polynomial(""), Error);
    CHECK_THROWS_AS(parse_polynomial("x^3 +"), Error);
    CHECK_THROWS_AS(parse_polynomial("x^3 2x"), Error);
    CHECK_THROWS_AS(parse_polynomial("3/"), Error);
    CHECK_THROWS_AS(parse_polynomial("y^2"), Error);
}

TEST_CASE("text format round-trips bit-exactly on random polynomials") {
    std::mt19937 rng(20260814);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 20);
    std::uniform_int_distribution<int> deg(0, 8);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Rational> coeffs;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) coeffs.emplace_back(num(rng), den(rng));
        Polynomial p(std::move(coeffs));
        Polynomial back = parse_polynomial(vieta::to_string(p));
        REQUIRE(back == p);
    }
}
