#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>
#include <vector>

#include "vieta/polynomial.hpp"
#include "vieta/vieta_formulas.hpp"

using vieta::elementary_symmetric;
using vieta::Error;
using vieta::GaussianRational;
using vieta::parse_polynomial;
using vieta::poly_from_roots;
using vieta::Polynomial;
using vieta::Rational;
using vieta::RootMultiset;
using vieta::verify_vieta;
using vieta::vieta_from_coefficients;

namespace {

// Brace lists of two doubles would collapse into a single complex value, so
// build real multisets explicitly.
RootMultiset reals(std::initializer_list<double> xs) {
    RootMultiset m;
    for (double x : xs) m.roots.emplace_back(x, 0.0);
    return m;
}

// Independent oracle: enumerate every j-subset explicitly and sum the
// products. Exponential, test-only.
GaussianRational brute_force_symmetric(const std::vector<std::complex<double>>& roots,
                                       std::size_t j) {
    GaussianRational total{Rational(0)};
    std::vector<std::size_t> pick(j);
    // iterative combinations
    if (j == 0) return GaussianRational{Rational(1)};
    for (std::size_t i = 0; i < j; ++i) pick[i] = i;
    if (j > roots.size()) return total;
    while (true) {
        GaussianRational prod{Rational(1)};
        for (std::size_t idx : pick) prod *= GaussianRational::from(roots[idx]);
        total += prod;
        // advance combination
        std::size_t k = j;
        while (k > 0 && pick[k - 1] == roots.size() - j + (k - 1)) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t i = k; i < j; ++i) pick[i] = pick[i - 1] + 1;
    }
    return total;
}

} // namespace

TEST_CASE("poly_from_roots examples") {
    CHECK(poly_from_roots(reals({1, 2, 3}), Rational(1)) ==
          parse_polynomial("x^3 - 6 x^2 + 11 x - 6"));
    CHECK(poly_from_roots(RootMultiset{}, Rational(5)) == Polynomial::constant(Rational(5)));
    CHECK(poly_from_roots(reals({2, -2}), Rational(1)) == parse_polynomial("x^2 - 4"));
    CHECK_THROWS_AS(poly_from_roots(reals({1}), Rational(0)), Error);
    // an unpaired complex root cannot yield rational coefficients
    CHECK_THROWS_AS(poly_from_roots(RootMultiset{{{0.0, 1.0}}}, Rational(1)), Error);
}

TEST_CASE("poly_from_roots with conjugate pair is exact") {
    RootMultiset conj{{{1.5, 2.0}, {1.5, -2.0}}};
    // (x - (1.5+2i))(x - (1.5-2i)) = x^2 - 3x + 6.25
    CHECK(poly_from_roots(conj, Rational(1)) ==
          Polynomial({Rational(25, 4), Rational(-3), Rational(1)}));
}

TEST_CASE("elementary_symmetric examples") {
    RootMultiset r123{{1, 2, 3}};
    CHECK(elementary_symmetric(r123, 2) == GaussianRational(Rational(11)));
    CHECK(elementary_symmetric(r123, 3) == GaussianRational(Rational(6)));
    CHECK(elementary_symmetric(r123, 0) == GaussianRational(Rational(1)));
    CHECK(elementary_symmetric(reals({3.5}), 1) == GaussianRational(Rational(7, 2)));
    CHECK_THROWS_AS(elementary_symmetric(r123, 4), Error);
}

TEST_CASE("elementary_symmetric matches subset enumeration oracle") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> root(-6, 6);
    std::uniform_int_distribution<int> deg(1, 7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = deg(rng);
        std::vector<std::complex<double>> roots;
        for (int i = 0; i < n; ++i) roots.emplace_back(root(rng), 0.0);
        RootMultiset rm{roots};
        for (std::size_t j = 0; j <= roots.size(); ++j)
            REQUIRE(elementary_symmetric(rm, j) == brute_force_symmetric(roots, j));
    }
}

TEST_CASE("vieta_from_coefficients examples") {
    auto sv = vieta_from_coefficients(parse_polynomial("x^3 - 6 x^2 + 11 x - 6"));
    CHECK(sv.s == std::vector<Rational>{Rational(6), Rational(11), Rational(6)});

    auto sv2 = vieta_from_coefficients(parse_polynomial("x^2 - 4"));
    CHECK(sv2.s == std::vector<Rational>{Rational(0), Rational(-4)});

    auto sv3 = vieta_from_coefficients(parse_polynomial("2 x^2 - 2 x - 12"));
    CHECK(sv3.s == std::vector<Rational>{Rational(1), Rational(-6)});

    CHECK_THROWS_AS(vieta_from_coefficients(Polynomial()), Error);
}

TEST_CASE("vieta_from_coefficients is scaling invariant") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<int> deg(1, 8);
    std::uniform_int_distribution<int> scale_num(1, 12);
    std::uniform_int_distribution<int> scale_den(1, 12);
    for (int trial = 0; trial < 200; ++trial) {
        int n = deg(rng);
        std::vector<Rational> coeffs;
        for (int i = 0; i < n; ++i) coeffs.emplace_back(coef(rng));
        coeffs.emplace_back(coef(rng) * 2 + 1); // nonzero leading
        Polynomial p(coeffs);
        int sn = scale_num(rng) * (trial % 2 ? 1 : -1);
        Rational s(sn, scale_den(rng));
        Polynomial scaled = p * s;
        REQUIRE(vieta_from_coefficients(p).s == vieta_from_coefficients(scaled).s);
    }
}

TEST_CASE("verify_vieta examples") {
    auto cubic = parse_polynomial("x^3 - 6 x^2 + 11 x - 6");
    auto good = verify_vieta(cubic, reals({1, 2, 3}), 0.0);
    CHECK(good.all_pass);
    for (const auto& c : good.checks) CHECK(c.exact);

    auto bad = verify_vieta(parse_polynomial("x^2 - 4 x + 3"), reals({2, 2}), 0.0);
    CHECK_FALSE(bad.all_pass);
    CHECK(bad.checks[0].pass);       // s1: 2 + 2 == 4
    CHECK_FALSE(bad.checks[1].pass); // s2: 2 * 2 != 3

    auto imag = verify_vieta(parse_polynomial("x^2 + 1"),
                             RootMultiset{{{0.0, 1.0}, {0.0, -1.0}}}, 0.0);
    CHECK(imag.all_pass);

    CHECK_THROWS_AS(verify_vieta(cubic, reals({1, 2}), 0.0), Error);
}

TEST_CASE("coefficient route equals root route exactly, 500 random cases") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> root(-10, 10);
    std::uniform_int_distribution<int> deg(1, 8);
    for (int trial = 0; trial < 500; ++trial) {
        int n = deg(rng);
        std::vector<std::complex<double>> roots;
        for (int i = 0; i < n; ++i) roots.emplace_back(root(rng), 0.0);
        RootMultiset rm{roots};
        Polynomial p = poly_from_roots(rm, Rational(1));
        auto report = verify_vieta(p, rm, 0.0);
        REQUIRE(report.all_pass);
        for (const auto& c : report.checks) REQUIRE(c.exact);
    }
}
