#pragma once

// Viète's infinite nested-radical product for 2/π and the Archimedes
// polygon-doubling bounds, with convergence-rate measurement. Working
// precision is long double (64-bit significand on x86-64).

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace vieta {

// abs_error below this is dominated by double rounding, not truncation
inline constexpr double kFloatingFloor = 1e-14;

namespace detail {

// arctan(1/x) by exact rational Taylor sum, truncated below 10^-42
inline Rational arctan_inverse(int x, int max_terms = 64) {
    Rational sum(0);
    BigInt xp = x;  // x^(2j+1)
    const BigInt x2 = BigInt(x) * x;
    const Rational cutoff(BigInt(1), boost::multiprecision::pow(BigInt(10), 42));
    for (int j = 0; j < max_terms; ++j) {
        Rational term(BigInt(1), BigInt(2 * j + 1) * xp);
        if (term < cutoff) break;
        sum += (j % 2 == 0) ? term : -term;
        xp *= x2;
    }
    return sum;
}

inline Rational machin_pi() {
    return Rational(16) * arctan_inverse(5) - Rational(4) * arctan_inverse(239);
}

}  // namespace detail

// 40 significant digits of π, cross-checked against the Machin arctangent
// sum in exact rational arithmetic on first use.
inline const Rational& reference_pi_rational() {
    static const Rational ref = [] {
        Rational literal(BigInt("3141592653589793238462643383279502884197"),
                         boost::multiprecision::pow(BigInt(10), 39));
        Rational diff = literal - detail::machin_pi();
        if (diff < 0) diff = -diff;
        if (diff > Rational(BigInt(1), boost::multiprecision::pow(BigInt(10), 30)))
            throw Error(ErrorKind::numeric_failure,
                        "pi reference literal failed the arctangent cross-check");
        return literal;
    }();
    return ref;
}

inline long double reference_pi() {
    static const long double pi_ld = reference_pi_rational().convert_to<long double>();
    return pi_ld;
}

struct SeriesEntry {
    int k = 0;
    long double value = 0.0L;
    long double abs_error = 0.0L;
    std::optional<double> error_ratio;  // abs_error_k / abs_error_{k−1}, k ≥ 2
};

struct ApproximationSeries {
    std::vector<SeriesEntry> entries;
};

// p_j = 2 ∏_{i=1..j} 2/t_i with t_1 = √2, t_{i+1} = √(2 + t_i); increases to π.
inline ApproximationSeries viete_product(int terms) {
    if (terms < 1 || terms > 40)
        throw Error(ErrorKind::out_of_range, "term count must lie in 1..40");
    ApproximationSeries series;
    const long double pi_ld = reference_pi();
    long double t = 0.0L;
    long double p = 2.0L;
    long double prev_err = 0.0L;
    for (int j = 1; j <= terms; ++j) {
        t = sqrtl(2.0L + t);
        p *= 2.0L / t;
        SeriesEntry e;
        e.k = j;
        e.value = p;
        e.abs_error = fabsl(p - pi_ld);
        if (j > 1 && prev_err > 0.0L)
            e.error_ratio = static_cast<double>(e.abs_error / prev_err);
        prev_err = e.abs_error;
        series.entries.push_back(e);
    }
    return series;
}

struct PolygonBounds {
    int k = 0;
    long long sides = 0;
    long double lower = 0.0L;  // inscribed semiperimeter / radius
    long double upper = 0.0L;  // circumscribed
    long double midpoint() const { return (lower + upper) / 2.0L; }
    long double width() const { return upper - lower; }
};

// Polygon doubling from an n₀-gon inscribed in the unit circle. The side
// update is the rationalized half-angle form s' = s / √(2 + √(4 − s²));
// the subtractive variant √(2 − √(4 − s²)) cancels catastrophically and is
// not used anywhere.
inline std::vector<PolygonBounds> archimedes_series(int doublings, int start_sides = 6) {
    if (doublings < 0 || doublings > 24)
        throw Error(ErrorKind::out_of_range, "doubling count must lie in 0..24");
    if (start_sides < 3)
        throw Error(ErrorKind::out_of_range, "polygon must have at least 3 sides");
    long double s;  // side of the inscribed n-gon, unit radius
    if (start_sides == 6) s = 1.0L;
    else if (start_sides == 4) s = sqrtl(2.0L);
    else s = 2.0L * sinl(reference_pi() / start_sides);

    std::vector<PolygonBounds> rows;
    long long n = start_sides;
    for (int k = 0; k <= doublings; ++k) {
        PolygonBounds b;
        b.k = k;
        b.sides = n;
        b.lower = n * s / 2.0L;
        b.upper = n * s / sqrtl(4.0L - s * s);
        rows.push_back(b);
        s = s / sqrtl(2.0L + sqrtl(4.0L - s * s));
        n *= 2;
    }
    return rows;
}

inline PolygonBounds archimedes_polygon(int doublings) {
    return archimedes_series(doublings).back();
}

inline ApproximationSeries polygon_midpoint_series(const std::vector<PolygonBounds>& rows) {
    ApproximationSeries series;
    const long double pi_ld = reference_pi();
    long double prev_err = 0.0L;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        SeriesEntry e;
        e.k = rows[i].k;
        e.value = rows[i].midpoint();
        e.abs_error = fabsl(e.value - pi_ld);
        if (i > 0 && prev_err > 0.0L)
            e.error_ratio = static_cast<double>(e.abs_error / prev_err);
        prev_err = e.abs_error;
        series.entries.push_back(e);
    }
    return series;
}

struct ConvergenceReport {
    std::vector<std::optional<double>> ratios;  // aligned with the series entries
    double mean_ratio = 0.0;                    // over the last 5 usable ratios
    bool linear = false;                        // mean in [0.24, 0.26]
    int excluded_at_floor = 0;
    std::string verdict;
    std::string note;
};

inline ConvergenceReport convergence_report(const ApproximationSeries& series) {
    if (series.entries.size() < 6)
        throw Error(ErrorKind::degenerate_input,
                    "convergence report needs at least 6 entries, got " +
                        std::to_string(series.entries.size()));
    ConvergenceReport rep;
    std::vector<double> usable;
    for (std::size_t i = 0; i < series.entries.size(); ++i) {
        const auto& e = series.entries[i];
        rep.ratios.push_back(e.error_ratio);
        bool at_floor = static_cast<double>(e.abs_error) < kFloatingFloor;
        if (at_floor) ++rep.excluded_at_floor;
        if (e.error_ratio && !at_floor &&
            static_cast<double>(series.entries[i - 1].abs_error) >= kFloatingFloor)
            usable.push_back(*e.error_ratio);
    }
    if (rep.excluded_at_floor > 0)
        rep.note = std::to_string(rep.excluded_at_floor) +
                   " entries below the floating-point floor (abs_error < 1e-14) excluded";
    if (usable.empty()) {
        rep.verdict = "no measurable ratios above the floating-point floor";
        return rep;
    }
    std::size_t take = usable.size() < 5 ? usable.size() : 5;
    double sum = 0.0;
    for (std::size_t i = usable.size() - take; i < usable.size(); ++i) sum += usable[i];
    rep.mean_ratio = sum / take;
    rep.linear = rep.mean_ratio >= 0.24 && rep.mean_ratio <= 0.26;
    if (rep.linear) rep.verdict = "linear convergence, error ratio ~ 1/4";
    else if (rep.mean_ratio >= 0.999) rep.verdict = "not converging";
    else rep.verdict = "converging, mean error ratio " + std::to_string(rep.mean_ratio);
    return rep;
}

}  // namespace vieta
