#pragma once

// Minimal static SVG figures: world-coordinate primitives collected into a
// unit-scaled viewBox with the y-axis pointing up. No interactivity, no
// styling beyond strokes and point labels.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "vieta/geometry.hpp"

namespace vieta {
namespace detail {

inline std::string svg_num(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 8);
    return std::string(buf, res.ptr);
}

}  // namespace detail

class SvgFigure {
public:
    void add_circle(const Circle& c, const std::string& stroke = "#1f77b4") {
        touch(c.center.x - c.radius, c.center.y - c.radius);
        touch(c.center.x + c.radius, c.center.y + c.radius);
        shapes_.push_back({Shape::circle, {c.center.x, c.center.y}, {}, c.radius, stroke, ""});
    }

    void add_segment(const Point& a, const Point& b, const std::string& stroke = "#555555") {
        touch(a.x, a.y);
        touch(b.x, b.y);
        shapes_.push_back({Shape::segment, a, b, 0.0, stroke, ""});
    }

    void add_polygon(const std::vector<Point>& pts, const std::string& stroke = "#2ca02c") {
        if (pts.size() < 2) return;
        for (std::size_t i = 0; i < pts.size(); ++i)
            add_segment(pts[i], pts[(i + 1) % pts.size()], stroke);
    }

    void add_point(const Point& p, const std::string& label = "",
                   const std::string& fill = "#d62728") {
        touch(p.x, p.y);
        shapes_.push_back({Shape::dot, p, {}, 0.0, fill, label});
    }

    std::string render() const {
        double lo_x = min_x_, lo_y = min_y_, hi_x = max_x_, hi_y = max_y_;
        if (!(lo_x < hi_x)) { lo_x -= 1.0; hi_x += 1.0; }
        if (!(lo_y < hi_y)) { lo_y -= 1.0; hi_y += 1.0; }
        const double margin = 0.06 * std::max(hi_x - lo_x, hi_y - lo_y);
        lo_x -= margin, lo_y -= margin, hi_x += margin, hi_y += margin;
        const double w = hi_x - lo_x, h = hi_y - lo_y;
        const double stroke = std::max(w, h) / 320.0;
        const double dot = 2.2 * stroke;
        const double font = std::max(w, h) / 28.0;
        using detail::svg_num;

        // World y points up; SVG y points down. Flip y at emission time so
        // text stays upright.
        auto X = [&](double x) { return svg_num(x); };
        auto Y = [&](double y) { return svg_num(-y); };

        std::string out;
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"" +
               svg_num(std::round(640.0 * h / w)) + "\" viewBox=\"" + svg_num(lo_x) + " " +
               svg_num(-hi_y) + " " + svg_num(w) + " " + svg_num(h) + "\">\n";
        out += "<rect x=\"" + svg_num(lo_x) + "\" y=\"" + svg_num(-hi_y) + "\" width=\"" +
               svg_num(w) + "\" height=\"" + svg_num(h) + "\" fill=\"#ffffff\"/>\n";
        for (const auto& s : shapes_) {
            switch (s.kind) {
                case Shape::circle:
                    out += "<circle cx=\"" + X(s.a.x) + "\" cy=\"" + Y(s.a.y) + "\" r=\"" +
                           svg_num(s.radius) + "\" fill=\"none\" stroke=\"" + s.color +
                           "\" stroke-width=\"" + svg_num(stroke) + "\"/>\n";
                    break;
                case Shape::segment:
                    out += "<line x1=\"" + X(s.a.x) + "\" y1=\"" + Y(s.a.y) + "\" x2=\"" +
                           X(s.b.x) + "\" y2=\"" + Y(s.b.y) + "\" stroke=\"" + s.color +
                           "\" stroke-width=\"" + svg_num(stroke) + "\"/>\n";
                    break;
                case Shape::dot:
                    out += "<circle cx=\"" + X(s.a.x) + "\" cy=\"" + Y(s.a.y) + "\" r=\"" +
                           svg_num(dot) + "\" fill=\"" + s.color + "\"/>\n";
                    if (!s.label.empty())
                        out += "<text x=\"" + X(s.a.x + 2.0 * dot) + "\" y=\"" +
                               Y(s.a.y + 2.0 * dot) + "\" font-size=\"" + svg_num(font) +
                               "\" font-family=\"sans-serif\" fill=\"#222222\">" + s.label +
                               "</text>\n";
                    break;
            }
        }
        out += "</svg>\n";
        return out;
    }

private:
    struct Shape {
        enum Kind { circle, segment, dot } kind;
        Point a, b;
        double radius;
        std::string color;
        std::string label;
    };

    void touch(double x, double y) {
        min_x_ = std::min(min_x_, x);
        max_x_ = std::max(max_x_, x);
        min_y_ = std::min(min_y_, y);
        max_y_ = std::max(max_y_, y);
    }

    std::vector<Shape> shapes_;
    double min_x_ = 1e300, min_y_ = 1e300, max_x_ = -1e300, max_y_ = -1e300;
};

}  // namespace vieta
