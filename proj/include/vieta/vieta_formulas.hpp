#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "vieta/error.hpp"
#include "vieta/polynomial.hpp"
#include "vieta/rational.hpp"

namespace vieta {

// Multiset of complex roots. Coordinates are floating point; exact work
// converts them to dyadic rationals on entry, so integer and dyadic root
// sets behave exactly.
struct RootMultiset {
    std::vector<std::complex<double>> roots;

    RootMultiset() = default;
    RootMultiset(std::initializer_list<std::complex<double>> rs) : roots(rs) {}
    explicit RootMultiset(std::vector<std::complex<double>> rs) : roots(std::move(rs)) {}

    std::size_t size() const { return roots.size(); }

    // Canonical order for multiset comparison: ascending real, then imaginary.
    std::vector<std::complex<double>> sorted() const {
        auto out = roots;
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            if (a.real() != b.real()) return a.real() < b.real();
            return a.imag() < b.imag();
        });
        return out;
    }
};

// Ordered elementary symmetric values s_1 ... s_n (s_0 == 1 by convention).
struct SymmetricValues {
    std::vector<Rational> s;

    std::size_t size() const { return s.size(); }
    // j is 1-based; j = 0 yields the conventional 1.
    Rational value(std::size_t j) const {
        if (j == 0) return Rational(1);
        if (j > s.size())
            throw Error(ErrorKind::index_out_of_range,
                        "symmetric value index " + std::to_string(j) + " out of range");
        return s[j - 1];
    }
};

// Expand leading * prod (x - r_i) exactly. Conjugate pairs cancel exactly in
// dyadic arithmetic; a multiset whose product has a genuinely complex
// coefficient cannot be represented as a rational-coefficient polynomial.
inline Polynomial poly_from_roots(const RootMultiset& roots, const Rational& leading) {
    if (leading == 0)
        throw Error(ErrorKind::invalid_leading_coefficient,
                    "leading coefficient must be nonzero");
    std::vector<GaussianRational> acc{GaussianRational(Rational(1))};
    for (const auto& r : roots.roots) {
        GaussianRational root = GaussianRational::from(r);
        std::vector<GaussianRational> next(acc.size() + 1, GaussianRational(Rational(0)));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i];                                        // times x
            next[i] += acc[i] * GaussianRational(-root.re, -root.im);     // times -r
        }
        acc = std::move(next);
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(acc.size());
    for (auto& c : acc) {
        if (!c.is_real())
            throw Error(ErrorKind::degenerate_input,
                        "root multiset yields non-real coefficient " + to_string(c));
        coeffs.push_back(leading * c.re);
    }
    return Polynomial(std::move(coeffs));
}

// e_j of the multiset, exact. j = 0 returns 1 by convention.
inline GaussianRational elementary_symmetric(const RootMultiset& roots, std::size_t j) {
    if (j > roots.size())
        throw Error(ErrorKind::index_out_of_range,
                    "elementary symmetric index " + std::to_string(j) + " exceeds multiset size " +
                        std::to_string(roots.size()));
    // e[k] after processing a prefix holds e_k of that prefix.
    std::vector<GaussianRational> e(j + 1, GaussianRational(Rational(0)));
    e[0] = GaussianRational(Rational(1));
    for (const auto& r : roots.roots) {
        GaussianRational root = GaussianRational::from(r);
        for (std::size_t k = j; k >= 1; --k) e[k] += e[k - 1] * root;
    }
    return e[j];
}

// s_j = (-1)^j a_{n-j} / a_n, exact.
inline SymmetricValues vieta_from_coefficients(const Polynomial& p) {
    if (p.is_zero())
        throw Error(ErrorKind::degenerate_input, "zero polynomial has no root structure");
    const std::size_t n = p.degree();
    SymmetricValues out;
    out.s.reserve(n);
    for (std::size_t j = 1; j <= n; ++j) {
        Rational v = p[n - j] / p.leading();
        if (j % 2 == 1) v = -v;
        out.s.push_back(std::move(v));
    }
    return out;
}

struct VietaCheck {
    std::size_t j = 0;
    std::complex<double> expected;  // from the coefficients
    std::complex<double> actual;    // from the root multiset
    double abs_diff = 0.0;
    bool exact = false;             // difference is exactly zero in rational arithmetic
    bool pass = false;
};

struct VietaReport {
    std::vector<VietaCheck> checks;
    double tolerance = 0.0;
    bool all_pass = true;
};

// Compare s_j from the coefficients against e_j of the proposed roots.
// With tolerance 0 the comparison is exact rational equality.
inline VietaReport verify_vieta(const Polynomial& p, const RootMultiset& roots,
                                double tolerance) {
    if (tolerance < 0)
        throw Error(ErrorKind::out_of_range, "tolerance must be nonnegative");
    if (p.is_zero())
        throw Error(ErrorKind::degenerate_input, "zero polynomial has no root structure");
    if (roots.size() != p.degree())
        throw Error(ErrorKind::arity_mismatch,
                    "root multiset size " + std::to_string(roots.size()) +
                        " does not match polynomial degree " + std::to_string(p.degree()));
    const SymmetricValues sv = vieta_from_coefficients(p);
    VietaReport report;
    report.tolerance = tolerance;
    for (std::size_t j = 1; j <= p.degree(); ++j) {
        VietaCheck check;
        check.j = j;
        GaussianRational actual = elementary_symmetric(roots, j);
        GaussianRational expected(sv.value(j));
        GaussianRational diff = actual - expected;
        check.exact = diff == GaussianRational(Rational(0));
        check.actual = actual.to_complex();
        check.expected = expected.to_complex();
        check.abs_diff = std::abs(diff.to_complex());
        check.pass = tolerance == 0.0 ? check.exact : (check.abs_diff <= tolerance);
        report.all_pass = report.all_pass && check.pass;
        report.checks.push_back(std::move(check));
    }
    return report;
}

} // namespace vieta
