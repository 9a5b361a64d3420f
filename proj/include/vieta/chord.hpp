#pragma once

// Multiple-angle chord polynomials q_n (q_n(2cosθ) = 2cos nθ) via the
// recurrence q_{k+1} = y·q_k − q_{k−1}, their sine-kind companions, and the
// degree-45 chord equation with its 23 positive roots.

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace vieta {

inline constexpr double kChordMergeTolerance = 1e-12;

enum class ChordKind { cosine, sine };

namespace detail {

// Compensated Horner (error-free transformations via fma): evaluates a dense
// double-coefficient polynomial with roughly twice working precision.
inline double compensated_horner(const std::vector<double>& a, double x) {
    if (a.empty()) return 0.0;
    double s = a.back();
    double r = 0.0;
    for (std::size_t i = a.size() - 1; i-- > 0;) {
        double p = s * x;
        double pi = std::fma(s, x, -p);
        double t = p + a[i];
        double bb = t - p;
        double sigma = (p - (t - bb)) + (a[i] - bb);
        s = t;
        r = r * x + (pi + sigma);
    }
    return s + r;
}

}  // namespace detail

struct ChordPolynomial {
    int n = 0;
    ChordKind kind = ChordKind::cosine;
    std::map<int, BigInt> coefficients;  // power → nonzero coefficient

    int degree() const { return coefficients.empty() ? 0 : coefficients.rbegin()->first; }

    BigInt coefficient(int power) const {
        auto it = coefficients.find(power);
        return it == coefficients.end() ? BigInt(0) : it->second;
    }

    // a_0 .. a_degree; every coefficient of q_n fits a double exactly for the
    // degrees used here (max magnitude ~1e12 at n=45)
    std::vector<double> dense_double() const {
        std::vector<double> a(static_cast<std::size_t>(degree()) + 1, 0.0);
        for (const auto& [p, c] : coefficients)
            a[static_cast<std::size_t>(p)] = static_cast<double>(c);
        return a;
    }

    Polynomial to_polynomial() const {
        std::vector<Rational> a(static_cast<std::size_t>(degree()) + 1, Rational(0));
        for (const auto& [p, c] : coefficients) a[static_cast<std::size_t>(p)] = Rational(c);
        return Polynomial(a);
    }

    double evaluate_compensated(double x) const {
        return detail::compensated_horner(dense_double(), x);
    }
};

inline ChordPolynomial cos_multiple_poly(int n) {
    if (n < 0) throw Error(ErrorKind::out_of_range, "multiple-angle order must be >= 0");
    // dense recurrence: q_0 = 2, q_1 = y, q_{k+1} = y q_k − q_{k−1}
    std::vector<BigInt> prev{2}, cur{0, 1};
    if (n == 0) cur = prev;
    for (int k = 1; k < n; ++k) {
        std::vector<BigInt> next(cur.size() + 1);
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    ChordPolynomial q;
    q.n = n;
    q.kind = ChordKind::cosine;
    for (std::size_t i = 0; i < cur.size(); ++i)
        if (cur[i] != 0) q.coefficients[static_cast<int>(i)] = cur[i];
    return q;
}

inline ChordPolynomial sin_multiple_poly(int n) {
    if (n < 1) throw Error(ErrorKind::out_of_range, "multiple-angle order must be >= 1");
    if (n % 2 == 0)
        throw Error(ErrorKind::parity, "sine chord polynomial requires odd order, got " +
                                           std::to_string(n));
    ChordPolynomial s = cos_multiple_poly(n);
    s.kind = ChordKind::sine;
    if (((n - 1) / 2) % 2 != 0)
        for (auto& [p, c] : s.coefficients) c = -c;
    return s;
}

// Memoized degree-45 sine polynomial; (−1)^22 = +1, so s_45 = q_45.
inline const ChordPolynomial& chord_q45() {
    static const ChordPolynomial q45 = sin_multiple_poly(45);
    return q45;
}

struct ChordRoot {
    double value = 0.0;
    double angle = 0.0;  // φ + 2πk/n of the smallest generating index (radians)
    int k = 0;           // smallest generating index
    int multiplicity = 1;
};

// All real solutions of s_n(x) = c: x_k = 2 sin(φ + 2πk/n) with
// φ = asin(c/2)/n. Values within 1e−12 merge with multiplicity recorded.
inline std::vector<ChordRoot> solve_chord_equation(int n, double c) {
    if (n < 1) throw Error(ErrorKind::out_of_range, "chord equation order must be >= 1");
    if (n % 2 == 0)
        throw Error(ErrorKind::parity, "chord equation requires odd order, got " +
                                           std::to_string(n));
    if (!(std::abs(c) <= 2.0))
        throw Error(ErrorKind::out_of_range,
                    "right-hand side must satisfy |c| <= 2 for the full real-root family");

    const double pi = std::acos(-1.0);
    const double phi = std::asin(c / 2.0) / n;
    std::vector<ChordRoot> all;
    all.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double theta = phi + 2.0 * pi * k / n;
        all.push_back({2.0 * std::sin(theta), theta, k, 1});
    }
    std::sort(all.begin(), all.end(), [](const ChordRoot& a, const ChordRoot& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.k < b.k;
    });
    std::vector<ChordRoot> merged;
    for (const auto& r : all) {
        if (!merged.empty() && std::abs(r.value - merged.back().value) <= kChordMergeTolerance) {
            ++merged.back().multiplicity;
            if (r.k < merged.back().k) {
                merged.back().k = r.k;
                merged.back().angle = r.angle;
            }
        } else {
            merged.push_back(r);
        }
    }
    return merged;
}

struct VanRoomenRoot {
    double value = 0.0;
    double angle = 0.0;
    int k = 0;
    int multiplicity = 1;
    double residual = 0.0;       // |s45(x) − c| under compensated Horner
    double residual_trig = 0.0;  // |2 sin(45 asin(x/2)) − c|
};

// The strictly positive solutions of s_45(x) = c, ascending, each re-checked
// against the degree-45 polynomial.
inline std::vector<VanRoomenRoot> van_roomen_positive_roots(double c) {
    if (!(c > 0.0 && c <= 2.0))
        throw Error(ErrorKind::out_of_range, "van Roomen target must satisfy 0 < c <= 2");
    const auto& q45 = chord_q45();
    static const std::vector<double> dense = q45.dense_double();

    std::vector<VanRoomenRoot> out;
    for (const auto& r : solve_chord_equation(45, c)) {
        if (!(r.value > 0.0)) continue;
        VanRoomenRoot v;
        v.value = r.value;
        v.angle = r.angle;
        v.k = r.k;
        v.multiplicity = r.multiplicity;
        v.residual = std::abs(detail::compensated_horner(dense, r.value) - c);
        v.residual_trig = std::abs(2.0 * std::sin(45.0 * std::asin(r.value / 2.0)) - c);
        out.push_back(v);
    }
    return out;
}

}  // namespace vieta
