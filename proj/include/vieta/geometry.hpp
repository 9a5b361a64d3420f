#pragma once

// Plane-geometry primitives for the construction kernel: points, normalized
// lines, circles, their intersections, and rigid motions.

#include <cmath>
#include <optional>
#include <variant>
#include <vector>

#include "error.hpp"

namespace vieta {

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(double s) const { return {x * s, y * s}; }
    double dot(const Point& o) const { return x * o.x + y * o.y; }
    double cross(const Point& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
};

inline double distance(const Point& a, const Point& b) { return (a - b).norm(); }

// ax + by = c with a² + b² = 1
struct Line {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    static Line from_points(const Point& p, const Point& q) {
        double dx = q.x - p.x, dy = q.y - p.y;
        double len = std::hypot(dx, dy);
        if (len == 0.0)
            throw Error(ErrorKind::degenerate_input, "line through two equal points");
        Line l;
        l.a = -dy / len;
        l.b = dx / len;
        l.c = l.a * p.x + l.b * p.y;
        return l;
    }

    static Line from_point_direction(const Point& p, double dir_x, double dir_y) {
        return from_points(p, {p.x + dir_x, p.y + dir_y});
    }

    double signed_distance(const Point& p) const { return a * p.x + b * p.y - c; }
    bool contains(const Point& p, double tol = 1e-10) const {
        return std::abs(signed_distance(p)) <= tol;
    }
    Point direction() const { return {b, -a}; }
    Point normal() const { return {a, b}; }
};

struct Circle {
    Point center;
    double radius = 1.0;

    bool on_boundary(const Point& p, double tol = 1e-10) const {
        return std::abs(distance(center, p) - radius) <= tol;
    }
};

using Locus = std::variant<Line, Circle>;

inline std::optional<Point> intersect(const Line& l1, const Line& l2) {
    double det = l1.a * l2.b - l2.a * l1.b;
    if (std::abs(det) < 1e-14) return std::nullopt;
    return Point{(l1.c * l2.b - l2.c * l1.b) / det, (l1.a * l2.c - l2.a * l1.c) / det};
}

// 0, 1 (tangency), or 2 points; two points ordered along the line direction
inline std::vector<Point> intersect(const Line& l, const Circle& c) {
    double d = l.signed_distance(c.center);
    double h2 = c.radius * c.radius - d * d;
    Point foot{c.center.x - d * l.a, c.center.y - d * l.b};
    if (h2 < 0.0) {
        if (h2 > -1e-14 * c.radius * c.radius) return {foot};
        return {};
    }
    double h = std::sqrt(h2);
    if (h == 0.0) return {foot};
    Point t = l.direction();
    return {{foot.x - h * t.x, foot.y - h * t.y}, {foot.x + h * t.x, foot.y + h * t.y}};
}

inline std::vector<Point> intersect(const Circle& c1, const Circle& c2) {
    Point delta = c2.center - c1.center;
    double d = delta.norm();
    if (d < 1e-14)
        throw Error(ErrorKind::degenerate_configuration, "concentric circles");
    double a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
    double h2 = c1.radius * c1.radius - a * a;
    Point u{delta.x / d, delta.y / d};
    Point base{c1.center.x + a * u.x, c1.center.y + a * u.y};
    if (h2 < 0.0) {
        if (h2 > -1e-12 * c1.radius * c1.radius) return {base};
        return {};
    }
    double h = std::sqrt(h2);
    if (h == 0.0) return {base};
    return {{base.x - h * u.y, base.y + h * u.x}, {base.x + h * u.y, base.y - h * u.x}};
}

struct RigidMotion {
    double cos_t = 1.0;
    double sin_t = 0.0;
    Point shift;

    static RigidMotion rotation(double angle, const Point& about = {0.0, 0.0}) {
        RigidMotion m;
        m.cos_t = std::cos(angle);
        m.sin_t = std::sin(angle);
        // rotate about a point: x ← R(x − about) + about
        m.shift = {about.x - (m.cos_t * about.x - m.sin_t * about.y),
                   about.y - (m.sin_t * about.x + m.cos_t * about.y)};
        return m;
    }

    static RigidMotion translation(const Point& by) {
        RigidMotion m;
        m.shift = by;
        return m;
    }

    Point apply(const Point& p) const {
        return {cos_t * p.x - sin_t * p.y + shift.x, sin_t * p.x + cos_t * p.y + shift.y};
    }

    Circle apply(const Circle& c) const { return {apply(c.center), c.radius}; }
};

}  // namespace vieta
