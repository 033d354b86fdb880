#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "frob/binomial.hpp"
#include "frob/rational.hpp"

namespace frob {

/// Dense univariate polynomial over Q. Coefficient i multiplies x^i.
///
/// The zero polynomial is the empty coefficient list; every other value has
/// a nonzero highest coefficient. All constructors normalize.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }
    static Poly identity() { return Poly({Rational(0), Rational(1)}); }
    static Poly monomial(const Rational& c, std::size_t degree) {
        std::vector<Rational> v(degree + 1);
        v[degree] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    std::span<const Rational> coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    /// Horner evaluation.
    Rational operator()(const Rational& x) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Rational& c) {
        if (c.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& a : coeffs_) a *= c;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    /// Exact convolution product.
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(out));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Human-readable form that the polynomial expression parser reads back,
    /// e.g. "1/2 - x + 2*x^3". Terms in increasing degree.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Rational& c = coeffs_[i];
            if (c.is_zero()) continue;
            const Rational mag = c.sign() < 0 ? -c : c;
            if (first) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            first = false;
            const bool unit = mag == Rational(1);
            if (i == 0) {
                out += mag.to_string();
                continue;
            }
            // A leading "-x" is not a valid expression start, so keep the 1.
            if (!unit || (out == "-")) out += mag.to_string() + "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline Rational evaluate(const Poly& p, const Rational& x) { return p(x); }

/// q(x) = p(a + b x), expanded.
inline Poly compose_affine(const Poly& p, const Rational& a, const Rational& b) {
    const auto c = p.coefficients();
    if (c.empty()) return {};
    // Horner over polynomials: q = (...((c_d)(a+bx) + c_{d-1})(a+bx) + ...).
    const Poly inner({a, b});
    Poly acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * inner;
        acc += Poly::constant(*it);
    }
    return acc;
}

/// (c + d x)^m expanded through the binomial theorem.
inline Poly binomial_power(const Rational& c, const Rational& d, unsigned long m) {
    std::vector<Rational> out(m + 1);
    for (unsigned long j = 0; j <= m; ++j) {
        out[j] = Rational(binomial(m, j)) * pow(c, m - j) * pow(d, j);
    }
    return Poly(std::move(out));
}

inline Poly pow(const Poly& p, unsigned long e) {
    Poly result = Poly::constant(1);
    Poly base = p;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

}  // namespace frob
