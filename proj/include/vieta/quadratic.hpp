#pragma once

#include <cmath>
#include <vector>

namespace vieta {

struct QuadraticRoot {
    double value = 0.0;
    bool positive = false; // strictly greater than zero
};

// All real roots of X^2 + bX = c, by completing the square:
// (X + b/2)^2 = c + b^2/4. A double root is reported twice.
// Negative discriminant yields an empty list (no real root), not an error.
inline std::vector<QuadraticRoot> solve_quadratic_canonical(double b, double c) {
    const double disc = b * b + 4.0 * c;
    if (disc < 0) return {};
    const double half = std::sqrt(disc) / 2.0;
    const double center = -b / 2.0;
    std::vector<QuadraticRoot> out;
    out.push_back({center + half, center + half > 0});
    out.push_back({center - half, center - half > 0});
    return out;
}

} // namespace vieta
