#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "vieta/heptagon.hpp"
#include "vieta/numeric_roots.hpp"

using namespace vieta;

namespace {

constexpr double kPi = std::numbers::pi;

bool has_step(const ConstructionTrace& trace, const std::string& name) {
    for (const auto& step : trace.steps())
        if (step.name == name) return true;
    return false;
}

}  // namespace

TEST_CASE("heptagon point I solves the trisection cubic") {
    HeptagonPointI fig = heptagon_point_I();

    // x³ − (7/3)x = 7/27 for the unit radius.
    CHECK(std::abs(fig.x * fig.x * fig.x - (7.0 / 3.0) * fig.x - 7.0 / 27.0) <= 1e-10);
    CHECK(fig.x == Catch::Approx(1.5803129).epsilon(1e-6));
    CHECK(std::abs(fig.x - fig.x_analytic) <= 1e-10);
    CHECK(fig.i.y == Catch::Approx(0.0).margin(1e-12));

    // Exact-coefficient companion-matrix oracle for 27x³ − 63x − 7 = 0.
    NumericRootReport oracle = numeric_roots(
        Polynomial({Rational(-7, 27), Rational(-7, 3), Rational(0), Rational(1)}));
    double positive = 0.0;
    for (const auto& r : oracle.roots.roots)
        if (r.real() > 0.0) positive = r.real();
    CHECK(std::abs(fig.x - positive) <= 1e-10);
}

TEST_CASE("heptagon segment relation IB.IC^2 = IA.AB^2") {
    HeptagonPointI fig = heptagon_point_I();
    const double x = fig.x;
    CHECK(std::abs((x - 4.0 / 3.0) * (x + 2.0 / 3.0) * (x + 2.0 / 3.0) - (x - 1.0 / 3.0)) <= 1e-10);

    // The same segments measured off the figure itself.
    const Point a{0.0, 0.0}, b{-1.0, 0.0}, c{1.0, 0.0};
    CHECK(std::abs(distance(fig.i, b) - (x - 4.0 / 3.0)) <= 1e-10);
    CHECK(std::abs(distance(fig.i, c) - (x + 2.0 / 3.0)) <= 1e-10);
    CHECK(std::abs(distance(fig.i, a) - (x - 1.0 / 3.0)) <= 1e-10);
}

TEST_CASE("heptagon point I scales with the radius") {
    const double unit = heptagon_point_I(1.0).x;
    for (double rho : {0.5, 2.0, 3.7, 10.0, 0.03}) {
        HeptagonPointI fig = heptagon_point_I(rho);
        CHECK(std::abs(fig.x - rho * unit) <= 1e-12 * rho * unit);
        CHECK(fig.radius == rho);
    }
}

TEST_CASE("heptagon point I rejects bad radii") {
    auto kind_is = [](ErrorKind kind) {
        return Catch::Matchers::Predicate<Error>(
            [kind](const Error& e) { return e.kind() == kind; }, to_string(kind));
    };
    CHECK_THROWS_MATCHES(heptagon_point_I(0.0), Error, kind_is(ErrorKind::degenerate_input));
    CHECK_THROWS_MATCHES(heptagon_point_I(-1.0), Error, kind_is(ErrorKind::degenerate_input));
    CHECK_THROWS_MATCHES(heptagon_point_I(std::nan("")), Error,
                         kind_is(ErrorKind::degenerate_input));
}

TEST_CASE("heptagon point I trace carries the neusis proof") {
    HeptagonPointI fig = heptagon_point_I();
    const ConstructionTrace& trace = fig.trace;
    REQUIRE(trace.verified());
    for (const char* name : {"diameter cut in thirds", "segment DE", "neusis through F",
                             "ratio of segments", "trisection cubic for x",
                             "geometric vs analytic"})
        CHECK(has_step(trace, name));
    for (const auto& step : trace.steps())
        CHECK(step.residual <= step.tolerance);

    auto j = trace.to_json();
    REQUIRE(j.contains("steps"));
    CHECK(j["verified"].get<bool>());
    CHECK(j["steps"].size() == trace.steps().size());
}

TEST_CASE("heptagon inscribed in the unit circle") {
    HeptagonResult hep = heptagon_construct(Circle{{0.0, 0.0}, 1.0});

    CHECK(std::abs(hep.side - 2.0 * std::sin(kPi / 7.0)) <= 1e-9);
    CHECK(std::abs(hep.central_angle - 2.0 * kPi / 7.0) <= 1e-9);
    REQUIRE(hep.trace.verified());

    for (const auto& v : hep.vertices) CHECK(std::abs(v.norm() - 1.0) <= 1e-9);

    // All seven sides equal, and the vertices are pairwise distinct.
    for (std::size_t k = 0; k < 7; ++k) {
        double edge = distance(hep.vertices[k], hep.vertices[(k + 1) % 7]);
        CHECK(std::abs(edge - hep.side) <= 1e-9);
        for (std::size_t m = k + 1; m < 7; ++m)
            CHECK(distance(hep.vertices[k], hep.vertices[m]) > 0.5);
    }

    for (const char* name : {"point D from the first figure", "chord DE = AB",
                             "power of the point (III.36)", "central angle",
                             "equilateral closure", "one seventh of two right angles"})
        CHECK(has_step(hep.trace, name));
}

TEST_CASE("heptagon in a translated and scaled circle") {
    const Point center{3.0, -2.0};
    const double rho = 1.5;
    HeptagonResult hep = heptagon_construct(Circle{center, rho});

    CHECK(std::abs(hep.side - rho * 2.0 * std::sin(kPi / 7.0)) <= 1e-9 * (1.0 + rho));
    CHECK(std::abs(hep.central_angle - 2.0 * kPi / 7.0) <= 1e-9);
    for (const auto& v : hep.vertices)
        CHECK(std::abs(distance(v, center) - rho) <= 1e-9 * (1.0 + rho));
    CHECK(hep.trace.verified());
}

TEST_CASE("heptagon construction rejects degenerate circles") {
    auto kind_is = [](ErrorKind kind) {
        return Catch::Matchers::Predicate<Error>(
            [kind](const Error& e) { return e.kind() == kind; }, to_string(kind));
    };
    CHECK_THROWS_MATCHES(heptagon_construct(Circle{{0.0, 0.0}, 0.0}), Error,
                         kind_is(ErrorKind::degenerate_input));
    CHECK_THROWS_MATCHES(heptagon_construct(Circle{{1.0, 1.0}, -2.0}), Error,
                         kind_is(ErrorKind::degenerate_input));
}

TEST_CASE("cyclotomic check ties the heptagon to y^3 + y^2 - 2y - 1") {
    CyclotomicReport report = heptagon_cyclotomic_check();

    CHECK(report.ok);
    CHECK(report.y == Catch::Approx(1.2469796).epsilon(1e-6));
    CHECK(report.residual <= 1e-12);
    CHECK(report.roots[0] == Catch::Approx(2.0 * std::cos(2.0 * kPi / 7.0)).margin(1e-14));
    CHECK(report.roots[1] == Catch::Approx(-0.4450419).epsilon(1e-6));
    CHECK(report.roots[2] == Catch::Approx(2.0 * std::cos(6.0 * kPi / 7.0)).margin(1e-14));
    for (double r : report.residuals) CHECK(r <= 1e-12);
    CHECK(std::abs(report.central_angle - 2.0 * kPi / 7.0) <= 1e-9);
    CHECK(report.angle_consistency <= 1e-8);

    // y = 1 is far from a root: the cubic evaluates to -1 there.
    auto poly = [](double y) { return ((y + 1.0) * y - 2.0) * y - 1.0; };
    CHECK(std::abs(poly(1.0)) == Catch::Approx(1.0));
}

TEST_CASE("heptagon neusis is stable across radii") {
    std::mt19937 rng(727272);
    std::uniform_real_distribution<double> radius_dist(0.1, 20.0);
    for (int k = 0; k < 25; ++k) {
        double rho = radius_dist(rng);
        HeptagonPointI fig = heptagon_point_I(rho);
        double scale = rho * rho * rho;
        CHECK(std::abs(fig.x * fig.x * fig.x - (7.0 / 3.0) * rho * rho * fig.x -
                       (7.0 / 27.0) * scale) <= 1e-10 * (1.0 + scale));
        CHECK(std::abs(fig.x - fig.x_analytic) <= 1e-10 * (1.0 + rho));
    }
}
