#pragma once

// Tangency problem of Apollonius: every circle tangent to three given
// circles. Each of the 8 orientation triples (+1 keeps the given circle
// outside the solution, -1 nests one inside the other) turns the three
// tangency equations into two linear differences plus one quadratic in the
// radius. Centers of similitude are exposed as the classical guide; the
// algebraic route is what actually produces the circles.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "vieta/error.hpp"
#include "vieta/geometry.hpp"

namespace vieta {

struct TangencyOrientation {
    std::array<int, 3> signs{1, 1, 1};  // +1 external, -1 internal tangency
    friend bool operator==(const TangencyOrientation&, const TangencyOrientation&) = default;
};

struct ApolloniusSolution {
    Circle circle;
    std::vector<TangencyOrientation> orientations;  // every orientation yielding this circle
    std::array<double, 3> residuals{};              // | dist_i - |r + s_i r_i| |
};

enum class SimilitudeKind { external, internal };

struct SimilitudeCenter {
    Point point;
    SimilitudeKind kind = SimilitudeKind::external;
};

// Equal radii push the external center off to infinity along the center line.
struct SimilitudeAtInfinity {
    Point direction;  // unit vector from the first center toward the second
};

using SimilitudeResult = std::variant<SimilitudeCenter, SimilitudeAtInfinity>;

namespace detail {

inline void require_circle(const Circle& c, const char* label) {
    if (!std::isfinite(c.center.x) || !std::isfinite(c.center.y) || !std::isfinite(c.radius))
        throw Error(ErrorKind::degenerate_input, std::string(label) + " has non-finite data");
    if (!(c.radius > 0.0))
        throw Error(ErrorKind::degenerate_input,
                    std::string(label) + " must have a positive radius");
}

// Roots of a r^2 + b r + c = 0 with a near-linear fallback; `len` sets the
// length scale so the thresholds survive uniform rescaling of the input.
inline std::vector<double> tangency_quadratic_roots(double a, double b, double c, double len) {
    std::vector<double> roots;
    const double linear_cut = 1e-12 * (1.0 + std::abs(b) / len + std::abs(c) / (len * len));
    if (std::abs(a) <= linear_cut) {
        if (std::abs(b) > 1e-14 * len) roots.push_back(-c / b);
        return roots;
    }
    double disc = b * b - 4.0 * a * c;
    const double snap = 1e-12 * (b * b + 4.0 * std::abs(a * c));
    if (disc < 0.0) {
        if (disc < -snap) return roots;
        disc = 0.0;
    }
    const double root = std::sqrt(disc);
    const double q = -0.5 * (b + (b >= 0.0 ? root : -root));
    if (q == 0.0) {
        roots.push_back(0.0);
        return roots;
    }
    roots.push_back(q / a);
    if (disc > 0.0) roots.push_back(c / q);
    return roots;
}

}  // namespace detail

inline SimilitudeResult similitude_center(const Circle& c1, const Circle& c2,
                                          SimilitudeKind kind) {
    detail::require_circle(c1, "first circle");
    detail::require_circle(c2, "second circle");
    const Point gap = c2.center - c1.center;
    const double separation = gap.norm();
    const bool equal_radii =
        std::abs(c1.radius - c2.radius) <= 1e-14 * (c1.radius + c2.radius);
    if (separation <= 1e-14 * (1.0 + c1.radius + c2.radius) && equal_radii)
        throw Error(ErrorKind::degenerate_input, "identical circles have no similitude center");
    if (kind == SimilitudeKind::internal) {
        const double w = 1.0 / (c1.radius + c2.radius);
        return SimilitudeCenter{(c1.center * c2.radius + c2.center * c1.radius) * w,
                                SimilitudeKind::internal};
    }
    if (equal_radii) return SimilitudeAtInfinity{gap * (1.0 / separation)};
    const double w = 1.0 / (c2.radius - c1.radius);
    return SimilitudeCenter{(c1.center * c2.radius - c2.center * c1.radius) * w,
                            SimilitudeKind::external};
}

struct SimilitudePair {
    SimilitudeResult external;
    SimilitudeResult internal;
};

// The three pairs (1,2), (1,3), (2,3), each with its external and internal center.
inline std::array<SimilitudePair, 3> all_similitude_centers(const Circle& c1, const Circle& c2,
                                                            const Circle& c3) {
    auto pair = [](const Circle& a, const Circle& b) {
        return SimilitudePair{similitude_center(a, b, SimilitudeKind::external),
                              similitude_center(a, b, SimilitudeKind::internal)};
    };
    return {pair(c1, c2), pair(c1, c3), pair(c2, c3)};
}

inline std::vector<ApolloniusSolution> solve_ccc(const Circle& c1, const Circle& c2,
                                                 const Circle& c3) {
    const std::array<Circle, 3> cs{c1, c2, c3};
    const char* labels[3] = {"circle 1", "circle 2", "circle 3"};
    for (std::size_t i = 0; i < 3; ++i) detail::require_circle(cs[i], labels[i]);

    double extent = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        extent = std::max(extent, cs[i].radius);
        for (std::size_t j = i + 1; j < 3; ++j)
            extent = std::max(extent, distance(cs[i].center, cs[j].center));
    }
    const double len = 1.0 + extent;

    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (distance(cs[i].center, cs[j].center) <= 1e-12 * len)
                throw Error(ErrorKind::degenerate_configuration,
                            std::string(labels[i]) + " and " + labels[j] + " are concentric");

    struct Candidate {
        Circle circle;
        TangencyOrientation orientation;
        std::array<double, 3> residuals;
        double worst;
    };
    std::vector<Candidate> candidates;

    // Newton polish of the exact system dist_i^2 = (r + s_i r_i)^2 repairs
    // the roundoff accumulated through the frame changes and Cramer solves.
    auto polish = [&](double& x, double& y, double& r, const std::array<int, 3>& sg) {
        for (int pass = 0; pass < 3; ++pass) {
            std::array<double, 3> f{};
            std::array<std::array<double, 3>, 3> jac{};
            for (std::size_t i = 0; i < 3; ++i) {
                const double dx = x - cs[i].center.x;
                const double dy = y - cs[i].center.y;
                const double rr = r + sg[i] * cs[i].radius;
                f[i] = dx * dx + dy * dy - rr * rr;
                jac[i] = {2.0 * dx, 2.0 * dy, -2.0 * rr};
            }
            const double det = jac[0][0] * (jac[1][1] * jac[2][2] - jac[1][2] * jac[2][1]) -
                               jac[0][1] * (jac[1][0] * jac[2][2] - jac[1][2] * jac[2][0]) +
                               jac[0][2] * (jac[1][0] * jac[2][1] - jac[1][1] * jac[2][0]);
            if (std::abs(det) < 1e-13 * len * len * len) break;
            auto sub = [&](std::size_t col) {
                auto m = jac;
                for (std::size_t i = 0; i < 3; ++i) m[i][col] = -f[i];
                return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            };
            x += sub(0) / det;
            y += sub(1) / det;
            r += sub(2) / det;
        }
    };

    auto accept = [&](double x, double y, double r, const TangencyOrientation& o) {
        if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(r)) return;
        polish(x, y, r, o.signs);
        if (!(r > 1e-10 * len)) return;  // point "circles" at mutual tangency are not solutions
        Candidate cand{Circle{{x, y}, r}, o, {}, 0.0};
        for (std::size_t i = 0; i < 3; ++i) {
            const double sep = distance(cand.circle.center, cs[i].center);
            cand.residuals[i] = std::abs(sep - std::abs(r + o.signs[i] * cs[i].radius));
            if (cand.residuals[i] > 1e-9 * (1.0 + cs[i].radius)) return;
            cand.worst = std::max(cand.worst, cand.residuals[i] / (1.0 + cs[i].radius));
        }
        candidates.push_back(std::move(cand));
    };

    auto K = [&](std::size_t i) {
        return cs[i].center.x * cs[i].center.x + cs[i].center.y * cs[i].center.y -
               cs[i].radius * cs[i].radius;
    };
    const double k1 = K(0), k2 = K(1), k3 = K(2);

    for (int s1 : {1, -1})
        for (int s2 : {1, -1})
            for (int s3 : {1, -1}) {
                const TangencyOrientation o{{s1, s2, s3}};
                // Differences of tangency equations: A x + B y = C r + D.
                const double a1 = 2.0 * (cs[1].center.x - cs[0].center.x);
                const double b1 = 2.0 * (cs[1].center.y - cs[0].center.y);
                const double q1 = 2.0 * (s1 * cs[0].radius - s2 * cs[1].radius);
                const double d1 = k2 - k1;
                const double a2 = 2.0 * (cs[2].center.x - cs[0].center.x);
                const double b2 = 2.0 * (cs[2].center.y - cs[0].center.y);
                const double q2 = 2.0 * (s1 * cs[0].radius - s3 * cs[2].radius);
                const double d2 = k3 - k1;
                const double det = a1 * b2 - a2 * b1;

                if (std::abs(det) > 1e-12 * len * len) {
                    // Generic centers: x and y are affine in r; one quadratic remains.
                    const double px = (q1 * b2 - q2 * b1) / det;
                    const double qx = (d1 * b2 - d2 * b1) / det;
                    const double py = (a1 * q2 - a2 * q1) / det;
                    const double qy = (a1 * d2 - a2 * d1) / det;
                    const double ex = qx - cs[0].center.x;
                    const double ey = qy - cs[0].center.y;
                    const double qa = px * px + py * py - 1.0;
                    const double qb = 2.0 * (px * ex + py * ey - s1 * cs[0].radius);
                    const double qc = ex * ex + ey * ey - cs[0].radius * cs[0].radius;
                    for (double r : detail::tangency_quadratic_roots(qa, qb, qc, len))
                        accept(px * r + qx, py * r + qy, r, o);
                    continue;
                }

                // Collinear centers: rotate them onto the x-axis about the first
                // center, solve for (x, r) from the two linears, recover y by root.
                const Point u = cs[1].center - cs[0].center;
                const double nu = u.norm();
                const double ct = u.x / nu, st = u.y / nu;
                auto fwd_x = [&](const Point& p) {
                    const Point d = p - cs[0].center;
                    return ct * d.x + st * d.y;
                };
                const double t2 = fwd_x(cs[1].center);
                const double t3 = fwd_x(cs[2].center);
                const double e1 = t2 * t2 - cs[1].radius * cs[1].radius +
                                  cs[0].radius * cs[0].radius;
                const double e2 = t3 * t3 - cs[2].radius * cs[2].radius +
                                  cs[0].radius * cs[0].radius;
                // System: 2 t2 x - q1 r = e1, 2 t3 x - q2 r = e2.
                const double det2 = 2.0 * (t3 * q1 - t2 * q2);
                if (std::abs(det2) <= 1e-12 * len * len) {
                    if (std::abs(t2 * e2 - t3 * e1) <= 1e-9 * len * len * len)
                        throw Error(ErrorKind::degenerate_configuration,
                                    "circle 1, circle 2 and circle 3 share a tangency pencil "
                                    "(collinear centers)");
                    continue;  // parallel constraints, nothing tangent this way
                }
                const double x0 = (e2 * q1 - e1 * q2) / det2;
                const double r0 = 2.0 * (t2 * e2 - t3 * e1) / det2;
                if (!(r0 > 0.0)) continue;
                const double reach = r0 + s1 * cs[0].radius;
                double y2 = reach * reach - x0 * x0;
                if (y2 < 0.0) {
                    if (y2 < -1e-10 * len * len) continue;
                    y2 = 0.0;
                }
                const double y0 = std::sqrt(y2);
                auto back = [&](double xr, double yr) {
                    return Point{ct * xr - st * yr + cs[0].center.x,
                                 st * xr + ct * yr + cs[0].center.y};
                };
                const Point above = back(x0, y0);
                accept(above.x, above.y, r0, o);
                if (y0 > 0.0) {
                    const Point below = back(x0, -y0);
                    accept(below.x, below.y, r0, o);
                }
            }

    // Merge circles that coincide within 1e-8; the merged solution keeps every
    // orientation and the residuals of the best-fitting one.
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.circle.center.x != b.circle.center.x)
            return a.circle.center.x < b.circle.center.x;
        if (a.circle.center.y != b.circle.center.y)
            return a.circle.center.y < b.circle.center.y;
        return a.circle.radius < b.circle.radius;
    });
    std::vector<ApolloniusSolution> solutions;
    auto same_circle = [](const Circle& a, const Circle& b) {
        return std::abs(a.center.x - b.center.x) <= 1e-8 &&
               std::abs(a.center.y - b.center.y) <= 1e-8 &&
               std::abs(a.radius - b.radius) <= 1e-8;
    };
    for (std::size_t i = 0; i < candidates.size();) {
        std::size_t best = i, j = i;
        std::vector<TangencyOrientation> orientations;
        for (; j < candidates.size() && same_circle(candidates[i].circle, candidates[j].circle);
             ++j) {
            orientations.push_back(candidates[j].orientation);
            if (candidates[j].worst < candidates[best].worst) best = j;
        }
        std::sort(orientations.begin(), orientations.end(),
                  [](const TangencyOrientation& a, const TangencyOrientation& b) {
                      return a.signs > b.signs;  // (+1,+1,+1) first
                  });
        orientations.erase(std::unique(orientations.begin(), orientations.end()),
                           orientations.end());
        solutions.push_back(ApolloniusSolution{candidates[best].circle, std::move(orientations),
                                               candidates[best].residuals});
        i = j;
    }
    return solutions;
}

enum class PairRelation {
    separate,
    externally_tangent,
    intersecting,
    internally_tangent,
    contained,
    concentric
};

inline std::string to_string(PairRelation relation) {
    switch (relation) {
        case PairRelation::separate: return "separate";
        case PairRelation::externally_tangent: return "externally tangent";
        case PairRelation::intersecting: return "intersecting";
        case PairRelation::internally_tangent: return "internally tangent";
        case PairRelation::contained: return "contained";
        case PairRelation::concentric: return "concentric";
    }
    return "unknown";
}

struct ConfigurationReport {
    std::array<PairRelation, 3> relations{};  // pairs (1,2), (1,3), (2,3)
    std::size_t solution_count = 0;
    bool degenerate = false;  // the tangency solver refused the configuration
    std::string note;
};

// Descriptive classification: the pairwise relations plus the realized count
// of tangent circles. No fixed ten-case taxonomy is imposed.
inline ConfigurationReport classify_configuration(const Circle& c1, const Circle& c2,
                                                  const Circle& c3) {
    const std::array<Circle, 3> cs{c1, c2, c3};
    const char* labels[3] = {"circle 1", "circle 2", "circle 3"};
    for (std::size_t i = 0; i < 3; ++i) detail::require_circle(cs[i], labels[i]);

    ConfigurationReport report;
    const std::array<std::pair<std::size_t, std::size_t>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (std::size_t k = 0; k < 3; ++k) {
        const Circle& a = cs[pairs[k].first];
        const Circle& b = cs[pairs[k].second];
        const double d = distance(a.center, b.center);
        const double tol = 1e-9 * (1.0 + a.radius + b.radius);
        if (d <= 1e-12 * (1.0 + a.radius + b.radius))
            report.relations[k] = PairRelation::concentric;
        else if (std::abs(d - (a.radius + b.radius)) <= tol)
            report.relations[k] = PairRelation::externally_tangent;
        else if (d > a.radius + b.radius)
            report.relations[k] = PairRelation::separate;
        else if (std::abs(d - std::abs(a.radius - b.radius)) <= tol)
            report.relations[k] = PairRelation::internally_tangent;
        else if (d < std::abs(a.radius - b.radius))
            report.relations[k] = PairRelation::contained;
        else
            report.relations[k] = PairRelation::intersecting;
    }
    try {
        report.solution_count = solve_ccc(c1, c2, c3).size();
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::degenerate_configuration) throw;
        report.degenerate = true;
        report.note = e.what();
    }
    if (!report.degenerate) {
        report.note = to_string(report.relations[0]) + " / " + to_string(report.relations[1]) +
                      " / " + to_string(report.relations[2]) + "; tangent circles: " +
                      std::to_string(report.solution_count);
    }
    return report;
}

inline std::array<Circle, 3> apollonius_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("circles") || !j["circles"].is_array() ||
        j["circles"].size() != 3)
        throw Error(ErrorKind::parse,
                    R"(expected {"circles":[{"cx":..,"cy":..,"r":..} x3]})");
    std::array<Circle, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& e = j["circles"][i];
        if (!e.is_object() || !e.contains("cx") || !e.contains("cy") || !e.contains("r") ||
            !e["cx"].is_number() || !e["cy"].is_number() || !e["r"].is_number())
            throw Error(ErrorKind::parse,
                        "circle " + std::to_string(i + 1) + " needs numeric cx, cy, r");
        out[i] = Circle{{e["cx"].get<double>(), e["cy"].get<double>()}, e["r"].get<double>()};
    }
    return out;
}

inline nlohmann::json apollonius_to_json(const std::vector<ApolloniusSolution>& solutions) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& s : solutions) {
        nlohmann::json orientations = nlohmann::json::array();
        for (const auto& o : s.orientations)
            orientations.push_back({o.signs[0], o.signs[1], o.signs[2]});
        list.push_back({{"cx", s.circle.center.x},
                        {"cy", s.circle.center.y},
                        {"r", s.circle.radius},
                        {"orientations", std::move(orientations)},
                        {"residuals", {s.residuals[0], s.residuals[1], s.residuals[2]}}});
    }
    return nlohmann::json{{"solutions", std::move(list)}};
}

}  // namespace vieta
