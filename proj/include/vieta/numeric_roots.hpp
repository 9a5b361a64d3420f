#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "vieta/error.hpp"
#include "vieta/polynomial.hpp"
#include "vieta/vieta_formulas.hpp"

namespace vieta {

struct NumericRootReport {
    RootMultiset roots;
    std::vector<double> residuals;       // |p(r)| per root
    std::vector<double> residual_bounds; // tolerance * (1 + sum |a_i| |r|^i)
    bool converged = true;
};

inline constexpr double kDefaultRootTolerance = 1e-12;

// Numeric failure carrying whatever partial results were obtained.
class NumericFailure : public Error {
public:
    NumericFailure(const std::string& message, NumericRootReport partial)
        : Error(ErrorKind::numeric_failure, message), partial_(std::move(partial)) {}

    const NumericRootReport& partial() const { return partial_; }

private:
    NumericRootReport partial_;
};

namespace detail {

inline std::complex<double> newton_polish(const std::vector<double>& coeffs,
                                          const std::vector<double>& deriv,
                                          std::complex<double> r) {
    for (int iter = 0; iter < 4; ++iter) {
        std::complex<double> p{}, dp{};
        for (std::size_t i = coeffs.size(); i-- > 0;) p = p * r + coeffs[i];
        for (std::size_t i = deriv.size(); i-- > 0;) dp = dp * r + deriv[i];
        if (std::abs(dp) == 0.0) break;
        std::complex<double> step = p / dp;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
        std::complex<double> next = r - step;
        std::complex<double> pnext{};
        for (std::size_t i = coeffs.size(); i-- > 0;) pnext = pnext * next + coeffs[i];
        if (std::abs(pnext) >= std::abs(p)) break;
        r = next;
    }
    return r;
}

} // namespace detail

// All complex roots via the balanced companion matrix, followed by a short
// Newton polish. The residual bound column implements the evaluation
// contract |p(r)| <= tol * (1 + sum |a_i| |r|^i).
inline NumericRootReport numeric_roots(const Polynomial& p,
                                       double tolerance = kDefaultRootTolerance) {
    if (tolerance <= 0)
        throw Error(ErrorKind::out_of_range, "tolerance must be positive");
    if (p.is_zero())
        throw Error(ErrorKind::degenerate_input, "zero polynomial rejected by root solver");
    if (p.degree() < 1)
        throw Error(ErrorKind::degenerate_input, "constant polynomial has no roots");

    const std::size_t n = p.degree();
    std::vector<double> coeffs = p.double_coeffs();
    // make monic in doubles
    std::vector<double> monic(coeffs.begin(), coeffs.end());
    for (auto& c : monic) c /= coeffs[n];

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                                      static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i + 1 < n; ++i)
        companion(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -monic[i];

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);

    NumericRootReport report;
    std::vector<double> deriv(n);
    for (std::size_t i = 1; i <= n; ++i) deriv[i - 1] = coeffs[i] * static_cast<double>(i);

    bool all_finite = true;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        std::complex<double> r = solver.eigenvalues()(i);
        if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) {
            all_finite = false;
            continue;
        }
        r = detail::newton_polish(coeffs, deriv, r);
        report.roots.roots.push_back(r);
        std::complex<double> val{};
        double scale = 1.0, xpow = 1.0;
        const double ax = std::abs(r);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            scale += std::abs(coeffs[k]) * xpow;
            xpow *= ax;
        }
        for (std::size_t k = coeffs.size(); k-- > 0;) val = val * r + coeffs[k];
        report.residuals.push_back(std::abs(val));
        report.residual_bounds.push_back(tolerance * scale);
    }

    if (solver.info() != Eigen::Success || !all_finite) {
        report.converged = false;
        throw NumericFailure("companion eigenvalue iteration did not converge", report);
    }
    return report;
}

} // namespace vieta
