#pragma once

// Regular heptagon by neusis: a marked ruler locates the point I on the
// diameter with IB·IC² = IA·AB², which solves x³ − (7/3)x = 7/27 for
// x = |ID|; a second figure turns that point into the heptagon side, whose
// central angle is 2π/7. The cyclotomic check ties the construction to
// y³ + y² − 2y − 1 = 0 for y = 2cos(2π/7).

#include <array>
#include <cmath>
#include <optional>

#include "error.hpp"
#include "geometry.hpp"
#include "neusis.hpp"
#include "trace.hpp"
#include "trisection.hpp"

namespace vieta {

struct HeptagonPointI {
    double radius = 1.0;
    Point i;
    double x = 0.0;           // |ID| from the neusis figure
    double x_analytic = 0.0;  // closed-form root of x³ − (7/3)r²x = (7/27)r³
    Point d, e, f, g, h;
    ConstructionTrace trace;
};

// First figure: circle center A, diameter BC, AD = AB/3, hexagon vertex E,
// AF ∥ DE, then a neusis through F cutting the diameter at G and the circle
// at H with GH = AB; the parallel EI ∥ FG meets the diameter at I.
inline HeptagonPointI heptagon_point_I(double radius = 1.0) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw Error(ErrorKind::degenerate_input, "radius must be positive and finite");

    const double rho = radius;
    const Point a{0.0, 0.0};
    const Point b{-rho, 0.0};
    const Point c{rho, 0.0};
    const Point d{rho / 3.0, 0.0};
    const Point e{rho / 2.0, rho * std::sqrt(3.0) / 2.0};
    const Line axis = Line::from_points(a, c);
    const Circle circle{a, rho};

    HeptagonPointI result;
    result.radius = rho;
    result.d = d;
    result.e = e;

    const double len_tol = 1e-10 * (1.0 + rho);
    const double area_tol = 1e-10 * (1.0 + rho * rho);
    const double solid_tol = 1e-10 * (1.0 + rho * rho * rho);

    ConstructionTrace& trace = result.trace;
    trace.step("diameter cut in thirds")
        .object("A", a)
        .object("B", b)
        .object("C", c)
        .object("D", d)
        .assert_residual("AD = AB/3", distance(a, d) - rho / 3.0, 1e-12 * (1.0 + rho));
    trace.step("hexagon vertex E")
        .object("E", e)
        .assert_residual("CE = AB (hexagon side)", distance(c, e) - rho, len_tol);
    const double r = distance(d, e);
    trace.step("segment DE")
        .object("DE", r)
        .assert_residual("DE^2 = (7/9) AB^2", r * r - 7.0 * rho * rho / 9.0, area_tol);

    const Point f = (e - d) * (rho / r);
    result.f = f;
    {
        Point u = (e - d) * (1.0 / r);
        Point w = f * (1.0 / rho);
        trace.step("AF parallel to DE")
            .object("F", f)
            .assert_residual("AF parallel to DE", u.cross(w), 1e-12);
    }

    // Selection: G on the diameter on the B side; H on the circle strictly
    // between F (the pivot, s = 0) and G; of the candidates, the admissible
    // line is the one whose H trisects the angle FAC (angle HAB = angle FAC/3).
    NeusisProblem problem{f, axis, circle, rho};
    const double angle_fac = detail::angle_between(f - a, c - a);
    std::optional<NeusisSolution> chosen;
    double best_score = 1e-3;
    for (const auto& sol : solve_neusis(problem)) {
        if (!(sol.b.x < 0.0)) continue;
        if (std::abs(sol.s_c) <= 1e-6 * rho) continue;
        double ratio = sol.s_c / sol.s_b;
        if (!(ratio > 1e-12 && ratio < 1.0 - 1e-12)) continue;
        double score = std::abs(detail::angle_between(sol.c - a, b - a) - angle_fac / 3.0);
        if (score < best_score) {
            best_score = score;
            chosen = refine_neusis(problem, sol);
        }
    }
    if (!chosen)
        throw Error(ErrorKind::construction_failure,
                    "no admissible neusis line for the heptagon figure");
    const Point g = chosen->b;
    const Point h = chosen->c;
    result.g = g;
    result.h = h;

    trace.step("neusis through F")
        .object("G", g)
        .object("H", h)
        .assert_residual("GH = AB", distance(g, h) - rho, len_tol);
    trace.step("neusis incidences")
        .assert_residual("G on the diameter, H on the circle",
                         std::max(std::abs(g.y), std::abs(distance(a, h) - rho)), len_tol);

    const Point v = g - f;
    if (std::abs(v.y) < 1e-14 * rho)
        throw Error(ErrorKind::construction_failure, "neusis line parallel to the diameter");
    const Point i{e.x - e.y * v.x / v.y, 0.0};
    result.i = i;
    {
        Point u = (i - e) * (1.0 / distance(i, e));
        Point w = v * (1.0 / v.norm());
        trace.step("EI parallel to FG")
            .object("I", i)
            .assert_residual("EI parallel to FG", u.cross(w), 1e-12);
    }

    const double x = std::abs(i.x - d.x);
    result.x = x;

    const double ib = distance(i, b), ic = distance(i, c), ia = distance(i, a);
    trace.step("segments from I")
        .object("IB", ib)
        .object("IC", ic)
        .object("IA", ia)
        .assert_residual("IB = x - (4/3)AB, IC = x + (2/3)AB, IA = x - (1/3)AB",
                         std::max({std::abs(ib - (x - 4.0 * rho / 3.0)),
                                   std::abs(ic - (x + 2.0 * rho / 3.0)),
                                   std::abs(ia - (x - rho / 3.0))}),
                         len_tol);
    trace.step("ratio of segments")
        .assert_residual("IB * IC^2 = IA * AB^2", ib * ic * ic - ia * rho * rho, solid_tol);
    trace.step("trisection cubic for x")
        .object("x", x)
        .assert_residual("x^3 - (7/3) AB^2 x = (7/27) AB^3",
                         x * x * x - (7.0 / 3.0) * rho * rho * x - (7.0 / 27.0) * rho * rho * rho,
                         solid_tol);

    // Closed form through the canonical reduction x = λu, u³ − 3u = 1/√7.
    const double lambda = rho * std::sqrt(7.0) / 3.0;
    const double rhs = 1.0 / std::sqrt(7.0);
    result.x_analytic = lambda * 2.0 * std::cos(std::acos(rhs / 2.0) / 3.0);
    trace.step("geometric vs analytic")
        .object("x (neusis)", x)
        .object("x (closed form)", result.x_analytic)
        .assert_residual("neusis length matches closed form", x - result.x_analytic, len_tol);
    return result;
}

struct HeptagonResult {
    std::array<Point, 7> vertices{};
    double side = 0.0;
    double central_angle = 0.0;  // angle BAE
    Point d, e, f;               // second-figure points
    HeptagonPointI first;
    ConstructionTrace trace;
};

// Second figure: with D placed where the first figure put I, the chord DE of
// length AB cuts the circle at E; BE is the heptagon side.
inline HeptagonResult heptagon_construct(const Circle& circle) {
    if (!(circle.radius > 0.0) || !std::isfinite(circle.radius) ||
        !std::isfinite(circle.center.x) || !std::isfinite(circle.center.y))
        throw Error(ErrorKind::degenerate_input, "invalid circle");

    const double rho = circle.radius;
    const Point o = circle.center;
    HeptagonResult result;
    result.first = heptagon_point_I(rho);

    const Point b = o + Point{-rho, 0.0};
    const Point c = o + Point{rho, 0.0};
    const Point d = o + result.first.i;  // notation change: I of the first figure
    result.d = d;

    const double len_tol = 1e-10 * (1.0 + rho);
    const double area_tol = 1e-10 * (1.0 + rho * rho);

    ConstructionTrace& trace = result.trace;
    trace.step("point D from the first figure")
        .object("D", d)
        .object("x", result.first.x)
        .assert_residual("AD = x - AB/3", distance(o, d) - (result.first.x - rho / 3.0),
                         len_tol);

    auto cut_e = intersect(Circle{d, rho}, circle);
    if (cut_e.size() < 2)
        throw Error(ErrorKind::construction_failure, "circle through D misses the given circle");
    const Point e = cut_e[0].y > cut_e[1].y ? cut_e[0] : cut_e[1];
    result.e = e;
    trace.step("chord DE = AB")
        .object("E", e)
        .assert_residual("DE = AB and E on the circle",
                         std::max(std::abs(distance(d, e) - rho),
                                  std::abs(distance(o, e) - rho)),
                         len_tol);

    auto cut_f = intersect(Line::from_points(d, e), circle);
    const Point* f_pick = nullptr;
    for (const auto& p : cut_f)
        if (distance(p, e) > 1e-6 * rho) f_pick = &p;
    if (!f_pick)
        throw Error(ErrorKind::construction_failure, "secant DE does not cut the circle again");
    const Point f = *f_pick;
    result.f = f;

    const double df = distance(d, f), de = distance(d, e);
    const double db = distance(d, b), dc = distance(d, c), da = distance(d, o);
    trace.step("power of the point (III.36)")
        .object("F", f)
        .assert_residual("DF * DE = DB * DC", df * de - db * dc, area_tol);
    trace.step("proportion")
        .assert_residual("DF : DE = DA : DC", df * dc - da * de, area_tol);
    {
        Point u = (c - e) * (1.0 / distance(c, e));
        Point w = (f - o) * (1.0 / distance(f, o));
        trace.step("EC parallel to AF")
            .assert_residual("EC parallel to AF", u.cross(w), 1e-10);
    }

    const double angle = detail::angle_between(b - o, e - o);
    result.central_angle = angle;
    trace.step("central angle")
        .object("angle BAE", angle)
        .assert_residual("angle BAE = 2*pi/7", angle - 2.0 * M_PI / 7.0, 1e-9);

    result.side = distance(b, e);
    trace.step("heptagon side")
        .object("BE", result.side)
        .assert_residual("BE = 2 AB sin(pi/7)",
                         result.side - 2.0 * rho * std::sin(M_PI / 7.0), 1e-9 * (1.0 + rho));

    // E lies clockwise from B (below-axis sweep comes back around), so step
    // the measured angle with the matching sign.
    const double step = (b - o).cross(e - o) >= 0.0 ? angle : -angle;
    for (int k = 0; k < 7; ++k)
        result.vertices[std::size_t(k)] = RigidMotion::rotation(step * k, o).apply(b);
    trace.step("vertices by rotation")
        .object("V1", result.vertices[1])
        .assert_residual("rotating B by the central angle reproduces E",
                         distance(result.vertices[1], e), 1e-9 * (1.0 + rho));
    double side_worst = 0.0;
    for (int k = 0; k < 7; ++k)
        side_worst = std::max(side_worst,
                              std::abs(distance(result.vertices[std::size_t(k)],
                                                result.vertices[std::size_t((k + 1) % 7)]) -
                                       result.side));
    trace.step("equilateral closure")
        .assert_residual("all seven sides equal BE", side_worst, 1e-9 * (1.0 + rho));

    // Triangle on vertices 0, 3, 4: its base angles are three times its
    // vertex angle, the heptagon's defining proportion.
    const Point& v0 = result.vertices[0];
    const Point& v3 = result.vertices[3];
    const Point& v4 = result.vertices[4];
    const double vertex_angle = detail::angle_between(v3 - v0, v4 - v0);
    const double base_angle = detail::angle_between(v0 - v3, v4 - v3);
    trace.step("final isosceles triangle")
        .object("vertex", v0)
        .object("vertex angle", vertex_angle)
        .object("base angle", base_angle)
        .assert_residual("base angles are three times the vertex angle",
                         base_angle - 3.0 * vertex_angle, 1e-9);
    trace.step("one seventh of two right angles")
        .assert_residual("vertex angle = pi/7", vertex_angle - M_PI / 7.0, 1e-9);
    return result;
}

struct CyclotomicReport {
    double y = 0.0;                     // 2cos(2π/7)
    double residual = 0.0;              // |y³ + y² − 2y − 1|
    std::array<double, 3> roots{};      // 2cos(2πk/7), k = 1, 2, 3
    std::array<double, 3> residuals{};
    double central_angle = 0.0;         // from heptagon_construct
    double angle_consistency = 0.0;     // |2cos(central_angle) − y|
    bool ok = false;
};

// y = 2cos(2π/7) satisfies y³ + y² − 2y − 1 = 0, with the other roots at
// 2cos(4π/7) and 2cos(6π/7); the constructed central angle must agree.
inline CyclotomicReport heptagon_cyclotomic_check() {
    auto poly = [](double y) { return ((y + 1.0) * y - 2.0) * y - 1.0; };
    CyclotomicReport report;
    report.y = 2.0 * std::cos(2.0 * M_PI / 7.0);
    report.residual = std::abs(poly(report.y));
    for (int k = 1; k <= 3; ++k) {
        report.roots[std::size_t(k - 1)] = 2.0 * std::cos(2.0 * M_PI * k / 7.0);
        report.residuals[std::size_t(k - 1)] = std::abs(poly(report.roots[std::size_t(k - 1)]));
    }
    HeptagonResult built = heptagon_construct(Circle{{0.0, 0.0}, 1.0});
    report.central_angle = built.central_angle;
    report.angle_consistency = std::abs(2.0 * std::cos(built.central_angle) - report.y);
    bool roots_ok = true;
    for (double r : report.residuals) roots_ok = roots_ok && r <= 1e-12;
    report.ok = report.residual <= 1e-12 && roots_ok && report.angle_consistency <= 1e-8;
    return report;
}

}  // namespace vieta
