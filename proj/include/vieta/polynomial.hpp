#pragma once

#include <algorithm>
#include <cctype>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vieta/error.hpp"
#include "vieta/rational.hpp"

namespace vieta {

// Univariate polynomial with exact rational coefficients, stored dense
// from a_0 upward. The highest stored coefficient is nonzero except for
// the zero polynomial, which is exactly {0}.
class Polynomial {
public:
    Polynomial() : coeffs_{Rational(0)} {}

    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    Polynomial(std::initializer_list<Rational> coeffs)
        : coeffs_(coeffs.begin(), coeffs.end()) {
        normalize();
    }

    static Polynomial constant(Rational c) { return Polynomial({std::move(c)}); }

    static Polynomial from_double_coeffs(const std::vector<double>& coeffs) {
        std::vector<Rational> exact;
        exact.reserve(coeffs.size());
        for (double c : coeffs) exact.push_back(rational_from_double(c));
        return Polynomial(std::move(exact));
    }

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

    std::size_t degree() const { return coeffs_.size() - 1; }

    const Rational& leading() const { return coeffs_.back(); }

    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
        return Polynomial(std::move(out));
    }

    Polynomial operator-(const Polynomial& o) const {
        std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
        return Polynomial(std::move(out));
    }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                out[i + j] += coeffs_[i] * o.coeffs_[j];
        return Polynomial(std::move(out));
    }

    Polynomial operator*(const Rational& s) const {
        std::vector<Rational> out = coeffs_;
        for (auto& c : out) c *= s;
        return Polynomial(std::move(out));
    }

    Rational evaluate(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    template <class T>
    T evaluate(T x) const {
        T acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + static_cast<T>(it->template convert_to<double>());
        return acc;
    }

    std::complex<double> evaluate(std::complex<double> x) const {
        std::complex<double> acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + std::complex<double>(it->convert_to<double>());
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() == 1) return Polynomial();
        std::vector<Rational> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(i);
        return Polynomial(std::move(out));
    }

    std::vector<double> double_coeffs() const {
        std::vector<double> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(to_double(c));
        return out;
    }

private:
    void normalize() {
        if (coeffs_.empty()) coeffs_.push_back(Rational(0));
        while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

// --- Text format -----------------------------------------------------------
//
// Highest power first, exact rationals printed as p/q:
//   x^3 - 6 x^2 + 11 x - 6
//   3/2 x^2 + 1/2
// Parsing accepts optional whitespace, an optional '*' between coefficient
// and variable, and '^' exponents. parse(to_string(p)) == p exactly.

inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = p.coefficients().size(); k-- > 0;) {
        const Rational& c = p[k];
        if (c == 0) continue;
        const bool first = out.empty();
        const bool negative = c < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        Rational mag = negative ? Rational(-c) : c;
        if (mag != 1 || k == 0) {
            out += to_string(mag);
            if (k > 0) out += " ";
        }
        if (k >= 2)
            out += "x^" + std::to_string(k);
        else if (k == 1)
            out += "x";
    }
    return out;
}

namespace detail {

struct PolyCursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() { return text[pos]; }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
            throw Error(ErrorKind::parse,
                        "expected digits at offset " + std::to_string(start) + " in polynomial");
        return std::string(text.substr(start, pos - start));
    }
};

} // namespace detail

inline Polynomial parse_polynomial(std::string_view text) {
    detail::PolyCursor cur{text};
    std::vector<Rational> coeffs;
    auto add = [&](std::size_t power, const Rational& c) {
        if (coeffs.size() <= power) coeffs.resize(power + 1, Rational(0));
        coeffs[power] += c;
    };

    bool expect_term = true;
    int sign = 1;
    if (cur.consume('-')) sign = -1;
    else cur.consume('+');

    while (true) {
        if (cur.done()) {
            if (expect_term) throw Error(ErrorKind::parse, "dangling sign in polynomial");
            break;
        }
        if (!expect_term) {
            if (cur.consume('+')) sign = 1;
            else if (cur.consume('-')) sign = -1;
            else
                throw Error(ErrorKind::parse, "expected '+' or '-' at offset " +
                                                  std::to_string(cur.pos) + " in polynomial");
            expect_term = true;
            continue;
        }
        // term := coefficient? [*] [x [^ power]]
        Rational coef(1);
        bool have_coef = false;
        cur.skip_ws();
        if (cur.pos < text.size() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            std::string num = cur.integer();
            if (cur.consume('/')) {
                std::string den = cur.integer();
                coef = parse_rational(num + "/" + den);
            } else {
                coef = parse_rational(num);
            }
            have_coef = true;
            cur.consume('*');
        }
        std::size_t power = 0;
        cur.skip_ws();
        if (cur.pos < text.size() && (cur.peek() == 'x' || cur.peek() == 'X')) {
            ++cur.pos;
            power = 1;
            if (cur.consume('^')) power = std::stoul(cur.integer());
        } else if (!have_coef) {
            throw Error(ErrorKind::parse, "expected term at offset " + std::to_string(cur.pos) +
                                              " in polynomial");
        }
        add(power, Rational(sign) * coef);
        expect_term = false;
    }
    if (coeffs.empty()) throw Error(ErrorKind::parse, "empty polynomial text");
    return Polynomial(std::move(coeffs));
}

} // namespace vieta
