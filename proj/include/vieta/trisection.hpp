#pragma once

// Angle trisection by neusis and the cubic equations it solves: the marked
// ruler trisects any angle, the trisection realizes every three-real-root
// cubic x³ − 3x = b, and linear substitutions reduce the general cubic to
// that canonical form (or to a radical when only one root is real).

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "error.hpp"
#include "geometry.hpp"
#include "neusis.hpp"
#include "trace.hpp"

namespace vieta {

namespace detail {

inline double angle_between(const Point& u, const Point& v) {
    return std::atan2(std::abs(u.cross(v)), u.dot(v));
}

}  // namespace detail

struct TrisectionResult {
    double angle = 0.0;      // the given angle DBE
    double geometric = 0.0;  // measured angle at F from the neusis figure
    double analytic = 0.0;   // closed-form angle/3
    double difference = 0.0;
    Point e, f, g;
    ConstructionTrace trace;
};

// Archimedes-style trisection: unit circle centered B, given angle DBE; a line
// through E meets the extension of DB beyond B at F and the circle again at G
// with FG equal to the radius; the angle at F is a third of the angle at B.
inline TrisectionResult trisect_angle(double angle) {
    if (!(angle > 0.0 && angle < M_PI))
        throw Error(ErrorKind::out_of_range, "trisectable angle must lie in (0, pi)");

    const Point b_center{0.0, 0.0};
    const Point d{1.0, 0.0};
    const Point e{std::cos(angle), std::sin(angle)};
    const Line axis = Line::from_points(b_center, d);
    const Circle circle{b_center, 1.0};

    // Selection: F strictly beyond B on DB extended (not B itself), G a
    // genuine second circle cut (not the pivot E), and G on E's side of the
    // diameter. G sits between E and F when the angle is below 3π/4 and just
    // past E above it; either way the same line trisects.
    NeusisProblem problem{e, axis, circle, 1.0};
    std::optional<NeusisSolution> chosen;
    for (const auto& sol : solve_neusis(problem)) {
        if (!(sol.b.x < -1e-6)) continue;
        if (std::abs(sol.s_c) <= 1e-6) continue;
        if (!(sol.c.y > 1e-9)) continue;
        chosen = refine_neusis(problem, sol);
        break;
    }
    if (!chosen)
        throw Error(ErrorKind::construction_failure,
                    "no admissible neusis line for the trisection figure");

    const Point f = chosen->b;
    const Point g = chosen->c;

    TrisectionResult result;
    result.angle = angle;
    result.e = e;
    result.f = f;
    result.g = g;
    result.geometric = detail::angle_between(e - f, d - f);
    result.analytic = angle / 3.0;
    result.difference = std::abs(result.geometric - result.analytic);

    // Closed-form positions for the same figure.
    const double third = angle / 3.0;
    const Point f_exact{std::cos(angle) - std::sin(angle) / std::tan(third), 0.0};
    const Point g_exact{-std::cos(third), std::sin(third)};

    ConstructionTrace& trace = result.trace;
    trace.step("unit circle and given angle")
        .object("B", b_center)
        .object("D", d)
        .object("E", e)
        .object("angle DBE", angle)
        .assert_residual("BD = BE = radius",
                         std::max(std::abs(distance(b_center, d) - 1.0),
                                  std::abs(distance(b_center, e) - 1.0)),
                         1e-10);
    trace.step("neusis line through E")
        .object("F", f)
        .object("G", g)
        .assert_residual("FG = radius", std::abs(distance(f, g) - 1.0), 1e-10);
    trace.step("F beyond B on DB extended")
        .object("F", f)
        .assert_residual("F lies on line DB", std::abs(f.y), 1e-10);
    trace.step("triangle BFG is isosceles")
        .assert_residual("GF = GB", std::abs(distance(g, f) - distance(g, b_center)), 1e-10);
    trace.step("isosceles pair doubles the angle")
        .object("angle BEF", detail::angle_between(b_center - e, f - e))
        .assert_residual("angle BEF = 2 * angle GFB",
                         detail::angle_between(b_center - e, f - e) - 2.0 * result.geometric,
                         1e-9);
    trace.step("triangle BGE is isosceles")
        .assert_residual("BG = BE", std::abs(distance(b_center, g) - distance(b_center, e)),
                         1e-10);
    trace.step("angle at F")
        .object("measured", result.geometric)
        .object("angle DBE / 3", result.analytic)
        .assert_residual("angle at F = angle DBE / 3", result.geometric - result.analytic, 1e-9);
    trace.step("geometric vs analytic")
        .object("F (closed form)", f_exact)
        .object("G (closed form)", g_exact)
        .assert_residual("neusis points match closed form",
                         std::max(distance(f, f_exact), distance(g, g_exact)), 1e-10);
    return result;
}

struct TrisectionCubicRoots {
    double b = 0.0;
    std::array<double, 3> roots{};  // 2cos((phi + 2*pi*k)/3) in k order
    ConstructionTrace trace;
};

// Roots of x³ − 3x = b for |b| ≤ 2 via the angle-trisection identity
// 2cos(3α) = (2cosα)³ − 3(2cosα); the figure is a pair of isosceles triangles
// with unit legs, bases x and b, the base angle of the second triple that of
// the first.
inline TrisectionCubicRoots solve_trisection_cubic(double b) {
    if (!std::isfinite(b))
        throw Error(ErrorKind::degenerate_input, "non-finite right-hand side");
    if (std::abs(b) > 2.0 && std::abs(b) - 2.0 > 1e-14)
        throw Error(ErrorKind::out_of_range,
                    "|b| > 2: casus outside trisection (one real root); use the general cubic "
                    "solver");

    TrisectionCubicRoots result;
    result.b = b;

    const bool at_boundary = std::abs(std::abs(b) - 2.0) <= 1e-14;
    const double clamped = std::clamp(b, -2.0, 2.0);
    const double phi = std::acos(clamped / 2.0);
    const double alpha = phi / 3.0;

    if (at_boundary) {
        // Double root: (x ∓ 2)(x ± 1)² exactly.
        result.roots = b > 0.0 ? std::array<double, 3>{2.0, -1.0, -1.0}
                               : std::array<double, 3>{1.0, -2.0, 1.0};
    } else {
        for (int k = 0; k < 3; ++k)
            result.roots[std::size_t(k)] = 2.0 * std::cos((phi + 2.0 * M_PI * k) / 3.0);
    }
    const double x = result.roots[0];

    // Both triangles drawn with apex on the unit circle: vertices (0,0),
    // (cos t, sin t), (2cos t, 0) have unit legs and base 2cos t.
    const Point a{0.0, 0.0};
    const Point apex1{std::cos(alpha), std::sin(alpha)};
    const Point base1{2.0 * std::cos(alpha), 0.0};
    const Point apex2{std::cos(3.0 * alpha), std::sin(3.0 * alpha)};
    const Point base2{2.0 * std::cos(3.0 * alpha), 0.0};

    ConstructionTrace& trace = result.trace;
    trace.step("first isosceles triangle")
        .object("A", a)
        .object("apex", apex1)
        .object("base vertex", base1)
        .object("base x", 2.0 * std::cos(alpha))
        .assert_residual("unit legs", std::max(std::abs(distance(a, apex1) - 1.0),
                                               std::abs(distance(apex1, base1) - 1.0)),
                         1e-10);
    const double angle1 = std::atan2(apex1.y, apex1.x);
    const double angle2 = std::atan2(apex2.y, apex2.x);
    trace.step("second isosceles triangle")
        .object("apex", apex2)
        .object("base vertex", base2)
        .object("base b", 2.0 * std::cos(3.0 * alpha))
        .assert_residual("base angle of the second is triple that of the first",
                         angle2 - 3.0 * angle1, 1e-9);

    // The double-angle apex gives y = 2cos2α, the power of the point behind
    // 1·(1 + y) = (x − 1)(x + 1) (III.36) and the proportion
    // 1 : y = ½x : ½(x + b) (VI.2).
    const Point apex_double{std::cos(2.0 * alpha), std::sin(2.0 * alpha)};
    const double y = 2.0 * apex_double.x;
    trace.step("power of the point (III.36)")
        .object("double-angle apex", apex_double)
        .object("y", y)
        .assert_residual("1 * (1 + y) = (x - 1)(x + 1)", (1.0 + y) - (x - 1.0) * (x + 1.0),
                         1e-10);
    trace.step("proportion (VI.2)")
        .assert_residual("1 : y = x/2 : (x + b)/2", 0.5 * (x + b) - 0.5 * x * y, 1e-10);

    if (!at_boundary) {
        TrisectionResult tri = trisect_angle(phi);
        const double x_geometric = 2.0 * std::cos(tri.geometric);
        trace.step("geometric path")
            .object("x (neusis)", x_geometric)
            .object("x (closed form)", x)
            .assert_residual("neusis-trisected base matches closed form", x_geometric - x, 1e-10);
    } else {
        trace.step("geometric path")
            .object("x", x)
            .assert_residual("boundary double root taken exactly", 0.0, 1e-10);
    }

    double worst = 0.0;
    for (double r : result.roots) worst = std::max(worst, std::abs(r * r * r - 3.0 * r - b));
    trace.step("roots of the cubic")
        .object("root 0", result.roots[0])
        .object("root 1", result.roots[1])
        .object("root 2", result.roots[2])
        .assert_residual("x^3 - 3x = b at every root", worst, 1e-10);
    return result;
}

struct CubicProblem {
    double a2 = 0.0;
    double a1 = 0.0;
    double a0 = 0.0;
    bool canonical = false;  // already of the form x³ − 3x = b

    static CubicProblem monic(double a2, double a1, double a0) {
        CubicProblem p{a2, a1, a0, false};
        p.canonical = (a2 == 0.0 && a1 == -3.0);
        return p;
    }

    static CubicProblem general(double a3, double a2, double a1, double a0) {
        if (a3 == 0.0 || !std::isfinite(a3))
            throw Error(ErrorKind::invalid_leading_coefficient,
                        "cubic leading coefficient must be nonzero and finite");
        return monic(a2 / a3, a1 / a3, a0 / a3);
    }
};

enum class CubicMethod { trisection, radical };

inline const char* to_string(CubicMethod method) {
    return method == CubicMethod::trisection ? "trisection" : "radical";
}

struct CubicSolution {
    std::array<std::complex<double>, 3> roots{};
    std::vector<double> real_roots;  // ascending
    CubicMethod method = CubicMethod::radical;
    double shift = 0.0;   // x = t − shift
    double p = 0.0;       // depressed t³ + pt + q
    double q = 0.0;
    double lambda = 0.0;  // t = λu rescale (trisection branch)
    double v = 0.0;       // canonical right-hand side u³ − 3u = v
    std::optional<ConstructionTrace> trace;  // present on the trisection branch
};

// Any cubic reduces by x = t − a₂/3 and t = λu to u³ − 3u = v; three real
// roots (4p³ + 27q² < 0, the casus irreducibilis) go through the trisection,
// a single real root through the radical formula.
inline CubicSolution solve_cubic_general(const CubicProblem& problem) {
    if (!std::isfinite(problem.a2) || !std::isfinite(problem.a1) || !std::isfinite(problem.a0))
        throw Error(ErrorKind::degenerate_input, "non-finite cubic coefficient");

    CubicSolution solution;
    solution.shift = problem.a2 / 3.0;
    const double p = problem.a1 - problem.a2 * problem.a2 / 3.0;
    const double q = 2.0 * problem.a2 * problem.a2 * problem.a2 / 27.0 -
                     problem.a2 * problem.a1 / 3.0 + problem.a0;
    solution.p = p;
    solution.q = q;

    auto polish = [&](double x) {
        for (int i = 0; i < 2; ++i) {
            double fx = ((x + problem.a2) * x + problem.a1) * x + problem.a0;
            double dfx = (3.0 * x + 2.0 * problem.a2) * x + problem.a1;
            if (std::abs(dfx) < 1e-8 * (1.0 + std::abs(x))) break;
            x -= fx / dfx;
        }
        return x;
    };

    const double scale = 1.0 + std::abs(problem.a1) + problem.a2 * problem.a2;
    if (std::abs(p) <= 1e-14 * scale) {
        // Depressed form t³ = −q: pure cube root.
        solution.method = CubicMethod::radical;
        const double t = std::cbrt(-q);
        const double real = polish(t - solution.shift);
        solution.real_roots = {real};
        solution.roots[0] = real;
        const std::complex<double> omega(-0.5, std::sqrt(3.0) / 2.0);
        solution.roots[1] = std::complex<double>(t, 0.0) * omega -
                            std::complex<double>(solution.shift, 0.0);
        solution.roots[2] = std::complex<double>(t, 0.0) * std::conj(omega) -
                            std::complex<double>(solution.shift, 0.0);
        if (std::abs(t) <= 1e-14 * (1.0 + std::cbrt(std::abs(q)))) {
            // Triple root.
            solution.real_roots = {real, real, real};
            solution.roots[1] = solution.roots[2] = real;
        }
        return solution;
    }

    const double discriminant = 4.0 * p * p * p + 27.0 * q * q;
    if (discriminant < 0.0) {
        solution.method = CubicMethod::trisection;
        const double lambda = std::sqrt(-p / 3.0);
        const double v = -q / (lambda * lambda * lambda);
        solution.lambda = lambda;
        solution.v = std::clamp(v, -2.0, 2.0);
        TrisectionCubicRoots canonical = solve_trisection_cubic(solution.v);
        solution.trace = std::move(canonical.trace);
        for (std::size_t k = 0; k < 3; ++k) {
            double x = polish(lambda * canonical.roots[k] - solution.shift);
            solution.roots[k] = x;
            solution.real_roots.push_back(x);
        }
        std::sort(solution.real_roots.begin(), solution.real_roots.end());
        return solution;
    }

    solution.method = CubicMethod::radical;
    const double half_q = q / 2.0;
    const double s = std::sqrt(discriminant / 108.0);  // √(q²/4 + p³/27)
    const double m = half_q >= 0.0 ? -half_q - s : -half_q + s;
    const double u = std::cbrt(m);
    double t1 = u == 0.0 ? 0.0 : u - p / (3.0 * u);
    const double real = polish(t1 - solution.shift);
    solution.roots[0] = real;
    solution.real_roots = {real};
    // Remaining factor t² + t₁t + (p + t₁²).
    const double disc_q = -3.0 * t1 * t1 - 4.0 * p;
    if (disc_q >= 0.0 || discriminant == 0.0) {
        const double r2 = polish(-t1 / 2.0 - solution.shift);
        solution.roots[1] = solution.roots[2] = r2;
        solution.real_roots.push_back(r2);
        solution.real_roots.push_back(r2);
        std::sort(solution.real_roots.begin(), solution.real_roots.end());
    } else {
        const double im = std::sqrt(-disc_q) / 2.0;
        const double re = -t1 / 2.0 - solution.shift;
        solution.roots[1] = {re, im};
        solution.roots[2] = {re, -im};
    }
    return solution;
}

}  // namespace vieta
