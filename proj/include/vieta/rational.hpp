#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "vieta/error.hpp"

namespace vieta {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision numerator and denominator.
// cpp_rational keeps the canonical form we rely on everywhere:
// denominator > 0 and gcd(|num|, den) = 1 after every operation.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Every finite double is a dyadic rational, so this conversion is exact.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x))
        throw Error(ErrorKind::degenerate_input, "cannot convert non-finite value to rational");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(x, &exp); // x = mant * 2^exp, 0.5 <= |mant| < 1
    auto scaled = static_cast<long long>(std::ldexp(mant, 53)); // integral, |.| < 2^53
    Rational r(scaled);
    int shift = exp - 53;
    if (shift >= 0)
        r *= Rational(BigInt(1) << shift);
    else
        r /= Rational(BigInt(1) << -shift);
    return r;
}

// "p/q" or plain integer; used by the polynomial text format and the CLI.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty())
        throw Error(ErrorKind::parse, "empty rational literal");
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0)
            throw Error(ErrorKind::degenerate_input, "zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw Error(ErrorKind::parse, "malformed rational literal '" + s + "'");
    }
}

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Complex number with exact rational parts. Roots handed to us as floating
// coordinates become dyadic rationals, which keeps symmetric-function
// arithmetic exact and lets conjugate pairs cancel perfectly.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational from(std::complex<double> z) {
        return {rational_from_double(z.real()), rational_from_double(z.imag())};
    }

    bool is_real() const { return im == 0; }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational& operator+=(const GaussianRational& o) { *this = *this + o; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }
    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
};

inline std::string to_string(const GaussianRational& z) {
    if (z.is_real()) return to_string(z.re);
    return to_string(z.re) + (z.im > 0 ? "+" : "") + to_string(z.im) + "i";
}

} // namespace vieta
