#pragma once

// Marked-ruler (neusis) solver: given a pivot point, two loci (lines or
// circles), and a span d, find every line through the pivot that cuts the two
// loci in points exactly d apart. The line direction is parameterized by an
// angle t ∈ [0, π); roots of |B(t) − C(t)| − d are located by a dense scan
// plus bisection.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "error.hpp"
#include "geometry.hpp"

namespace vieta {

struct NeusisProblem {
    Point pivot;
    Locus locus1;
    Locus locus2;
    double span = 1.0;
};

struct NeusisSolution {
    double t = 0.0;  // direction angle of the line, in [0, π)
    Line line;
    Point b;       // on locus1
    Point c;       // on locus2
    double s_b = 0.0;  // signed parameter of b along (cos t, sin t) from the pivot
    double s_c = 0.0;
};

namespace detail {

struct LocusCut {
    double s;
    Point p;
};

// Intersections of the line pivot + s·(ct, st) with a locus, sorted by s.
inline std::vector<LocusCut> locus_cuts(const Locus& locus, const Point& pivot, double ct,
                                        double st) {
    std::vector<LocusCut> out;
    if (const Line* l = std::get_if<Line>(&locus)) {
        double den = l->a * ct + l->b * st;
        if (std::abs(den) < 1e-12) return out;
        double s = (l->c - (l->a * pivot.x + l->b * pivot.y)) / den;
        out.push_back({s, {pivot.x + s * ct, pivot.y + s * st}});
        return out;
    }
    const Circle& c = std::get<Circle>(locus);
    double dx = pivot.x - c.center.x, dy = pivot.y - c.center.y;
    double du = dx * ct + dy * st;
    double disc = du * du - (dx * dx + dy * dy - c.radius * c.radius);
    if (disc < 0.0) return out;
    double root = std::sqrt(disc);
    out.push_back({-du - root, {}});
    if (root > 0.0) out.push_back({-du + root, {}});
    for (auto& cut : out) cut.p = {pivot.x + cut.s * ct, pivot.y + cut.s * st};
    return out;
}

inline bool pivot_on_locus(const Locus& locus, const Point& pivot) {
    if (const Line* l = std::get_if<Line>(&locus)) return l->contains(pivot, 1e-12);
    return std::get<Circle>(locus).on_boundary(pivot, 1e-12);
}

inline void require_locus_valid(const Locus& locus) {
    if (const Line* l = std::get_if<Line>(&locus)) {
        if (std::hypot(l->a, l->b) < 0.5)
            throw Error(ErrorKind::geometry, "degenerate line locus (unnormalized normal)");
        return;
    }
    if (!(std::get<Circle>(locus).radius > 0.0))
        throw Error(ErrorKind::geometry, "degenerate circle locus (radius must be positive)");
}

}  // namespace detail

inline std::vector<NeusisSolution> solve_neusis(const NeusisProblem& problem) {
    detail::require_locus_valid(problem.locus1);
    detail::require_locus_valid(problem.locus2);
    if (!(problem.span > 0.0))
        throw Error(ErrorKind::geometry, "neusis span must be positive");
    if (detail::pivot_on_locus(problem.locus1, problem.pivot) &&
        detail::pivot_on_locus(problem.locus2, problem.pivot))
        throw Error(ErrorKind::geometry, "pivot lies on both loci");

    constexpr int kSamples = 3600;
    constexpr double kStep = M_PI / kSamples;

    // f_{i,j}(t) = |B_i(t) − C_j(t)| − d for branch pair (i, j); nullopt where a
    // branch does not exist.
    auto evaluate = [&](double t, std::size_t i,
                        std::size_t j) -> std::optional<std::array<double, 5>> {
        double ct = std::cos(t), st = std::sin(t);
        auto cuts1 = detail::locus_cuts(problem.locus1, problem.pivot, ct, st);
        auto cuts2 = detail::locus_cuts(problem.locus2, problem.pivot, ct, st);
        if (cuts1.size() <= i || cuts2.size() <= j) return std::nullopt;
        const auto& b = cuts1[i];
        const auto& c = cuts2[j];
        return std::array<double, 5>{distance(b.p, c.p) - problem.span, b.s, c.s, b.p.x, b.p.y};
    };

    std::vector<NeusisSolution> solutions;
    auto accept = [&](double t, std::size_t i, std::size_t j) {
        double ct = std::cos(t), st = std::sin(t);
        auto cuts1 = detail::locus_cuts(problem.locus1, problem.pivot, ct, st);
        auto cuts2 = detail::locus_cuts(problem.locus2, problem.pivot, ct, st);
        if (cuts1.size() <= i || cuts2.size() <= j) return;
        NeusisSolution sol;
        sol.t = t;
        sol.b = cuts1[i].p;
        sol.c = cuts2[j].p;
        sol.s_b = cuts1[i].s;
        sol.s_c = cuts2[j].s;
        if (std::abs(distance(sol.b, sol.c) - problem.span) > 1e-10) return;
        sol.line = Line::from_point_direction(problem.pivot, ct, st);
        for (const auto& existing : solutions)
            if (std::abs(existing.t - sol.t) <= 1e-6 && distance(existing.b, sol.b) <= 1e-6 &&
                distance(existing.c, sol.c) <= 1e-6)
                return;
        solutions.push_back(sol);
    };

    auto bisect_root = [&](double lo, double hi, double flo, std::size_t i, std::size_t j) {
        while (hi - lo > 1e-13) {
            double mid = 0.5 * (lo + hi);
            auto fm = evaluate(mid, i, j);
            if (!fm) return;
            if (flo * (*fm)[0] <= 0.0) {
                hi = mid;
            } else {
                lo = mid;
                flo = (*fm)[0];
            }
        }
        double root = 0.5 * (lo + hi);
        if (root >= M_PI) root = std::nextafter(M_PI, 0.0);
        accept(root, i, j);
    };

    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            std::vector<std::optional<double>> values(kSamples + 1);
            std::vector<double> ts(kSamples + 1);
            for (int k = 0; k <= kSamples; ++k) {
                ts[std::size_t(k)] = std::min(k * kStep, M_PI);
                if (auto eval = evaluate(ts[std::size_t(k)], i, j))
                    values[std::size_t(k)] = (*eval)[0];
            }

            // Pass 1: exact zeros and sign changes between valid samples; at a
            // validity boundary (a branch appearing or vanishing mid-interval)
            // bisect on validity first so roots accumulating against the
            // boundary are still bracketed.
            for (int k = 0; k <= kSamples; ++k) {
                double t = ts[std::size_t(k)];
                const auto& value = values[std::size_t(k)];
                if (value && *value == 0.0 && t < M_PI) accept(t, i, j);
                if (k == 0) continue;
                double prev_t = ts[std::size_t(k - 1)];
                const auto& prev = values[std::size_t(k - 1)];
                if (prev && value && *prev * *value < 0.0) {
                    bisect_root(prev_t, t, *prev, i, j);
                } else if (!prev && value) {
                    double lo = prev_t, hi = t;
                    for (int step = 0; step < 80 && hi - lo > 1e-300; ++step) {
                        double mid = 0.5 * (lo + hi);
                        if (evaluate(mid, i, j)) {
                            hi = mid;
                        } else {
                            lo = mid;
                        }
                    }
                    auto edge = evaluate(hi, i, j);
                    if (edge && (*edge)[0] * *value < 0.0) bisect_root(hi, t, (*edge)[0], i, j);
                } else if (prev && !value) {
                    double lo = prev_t, hi = t;
                    for (int step = 0; step < 80 && hi - lo > 1e-300; ++step) {
                        double mid = 0.5 * (lo + hi);
                        if (evaluate(mid, i, j)) {
                            lo = mid;
                        } else {
                            hi = mid;
                        }
                    }
                    auto edge = evaluate(lo, i, j);
                    if (edge && (*edge)[0] * *prev < 0.0) bisect_root(prev_t, lo, *prev, i, j);
                }
            }

            // Pass 2: tangential roots — local minima of |f| that graze zero
            // without a sign change (e.g. a perpendicular-distance solution).
            const double graze = 1e-4 * (1.0 + problem.span);
            for (int k = 1; k < kSamples; ++k) {
                const auto& left = values[std::size_t(k - 1)];
                const auto& mid = values[std::size_t(k)];
                const auto& right = values[std::size_t(k + 1)];
                if (!left || !mid || !right) continue;
                if (std::abs(*mid) > graze) continue;
                if (std::abs(*mid) > std::abs(*left) || std::abs(*mid) > std::abs(*right))
                    continue;
                double lo = ts[std::size_t(k - 1)], hi = ts[std::size_t(k + 1)];
                for (int step = 0; step < 200 && hi - lo > 1e-13; ++step) {
                    double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
                    auto f1 = evaluate(m1, i, j), f2 = evaluate(m2, i, j);
                    if (!f1 || !f2) break;
                    if (std::abs((*f1)[0]) <= std::abs((*f2)[0])) {
                        hi = m2;
                    } else {
                        lo = m1;
                    }
                }
                accept(std::min(0.5 * (lo + hi), std::nextafter(M_PI, 0.0)), i, j);
            }
        }
    }

    std::sort(solutions.begin(), solutions.end(), [](const NeusisSolution& a, const NeusisSolution& b) {
        if (a.t != b.t) return a.t < b.t;
        return a.s_b < b.s_b;
    });
    return solutions;
}

// Secant refinement of a scanned solution down to evaluation noise. The scan's
// bisection stops at 1e-13 in t, which is not always enough for downstream
// point positions (dB/dt can be large when the cut is nearly parallel to its
// locus); a few secant steps reach machine accuracy. Branches are tracked by
// continuity in the signed parameter s.
inline NeusisSolution refine_neusis(const NeusisProblem& problem, const NeusisSolution& seed) {
    auto nearest = [](const std::vector<detail::LocusCut>& cuts,
                      double s_ref) -> const detail::LocusCut* {
        const detail::LocusCut* best = nullptr;
        double best_gap = 0.0;
        for (const auto& cut : cuts) {
            double gap = std::abs(cut.s - s_ref);
            if (!best || gap < best_gap) {
                best = &cut;
                best_gap = gap;
            }
        }
        return best;
    };
    auto evaluate = [&](double t, double s_b_ref, double s_c_ref)
        -> std::optional<std::array<double, 3>> {
        double ct = std::cos(t), st = std::sin(t);
        auto cuts1 = detail::locus_cuts(problem.locus1, problem.pivot, ct, st);
        auto cuts2 = detail::locus_cuts(problem.locus2, problem.pivot, ct, st);
        const auto* b = nearest(cuts1, s_b_ref);
        const auto* c = nearest(cuts2, s_c_ref);
        if (!b || !c) return std::nullopt;
        return std::array<double, 3>{distance(b->p, c->p) - problem.span, b->s, c->s};
    };

    double t0 = seed.t - 4e-13, t1 = seed.t;
    auto f0 = evaluate(t0, seed.s_b, seed.s_c);
    auto f1 = evaluate(t1, seed.s_b, seed.s_c);
    if (!f0 || !f1) return seed;
    double s_b = (*f1)[1], s_c = (*f1)[2];
    for (int iter = 0; iter < 60; ++iter) {
        double g0 = (*f0)[0], g1 = (*f1)[0];
        if (g1 == 0.0 || g0 == g1) break;
        double t2 = t1 - g1 * (t1 - t0) / (g1 - g0);
        if (!std::isfinite(t2) || std::abs(t2 - t1) > 1e-6) break;
        auto f2 = evaluate(t2, s_b, s_c);
        if (!f2) break;
        t0 = t1;
        f0 = f1;
        t1 = t2;
        f1 = f2;
        s_b = (*f1)[1];
        s_c = (*f1)[2];
        if (std::abs(t1 - t0) < 1e-17 * (1.0 + std::abs(t1))) break;
    }

    double ct = std::cos(t1), st = std::sin(t1);
    auto cuts1 = detail::locus_cuts(problem.locus1, problem.pivot, ct, st);
    auto cuts2 = detail::locus_cuts(problem.locus2, problem.pivot, ct, st);
    const auto* b = nearest(cuts1, s_b);
    const auto* c = nearest(cuts2, s_c);
    if (!b || !c) return seed;
    NeusisSolution refined = seed;
    refined.t = t1;
    refined.b = b->p;
    refined.c = c->p;
    refined.s_b = b->s;
    refined.s_c = c->s;
    refined.line = Line::from_point_direction(problem.pivot, ct, st);
    if (std::abs(distance(refined.b, refined.c) - problem.span) >
        std::abs(distance(seed.b, seed.c) - problem.span))
        return seed;
    return refined;
}

}  // namespace vieta
