#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "frob/errors.hpp"
#include "frob/rational.hpp"

namespace frob {

/// Truncated power series in t: coefficients of t^0 .. t^order, always
/// order + 1 of them. Binary operations truncate to the smaller order.
class Series {
public:
    explicit Series(std::size_t order) : coeffs_(order + 1) {}
    Series(std::size_t order, const std::vector<Rational>& coeffs) : coeffs_(order + 1) {
        std::copy_n(coeffs.begin(), std::min(coeffs.size(), coeffs_.size()), coeffs_.begin());
    }

    static Series constant(const Rational& c, std::size_t order) {
        Series s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// e^{a t} = sum a^i t^i / i!
    static Series exponential(const Rational& a, std::size_t order) {
        Series s(order);
        Rational term = 1;
        for (std::size_t i = 0; i <= order; ++i) {
            s.coeffs_[i] = term;
            term *= a;
            term /= Rational(static_cast<unsigned long>(i + 1));
        }
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    friend Series operator+(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return out;
    }
    friend Series operator-(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return out;
    }
    friend Series operator*(const Rational& c, Series s) {
        for (auto& a : s.coeffs_) a *= c;
        return s;
    }

    /// Truncated Cauchy product.
    friend Series operator*(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n <= out.order(); ++n) {
            Rational acc;
            for (std::size_t i = 0; i <= n; ++i) acc += a.coeffs_[i] * b.coeffs_[n - i];
            out.coeffs_[n] = acc;
        }
        return out;
    }

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Multiplicative inverse up to the stored order:
/// b_0 = 1/a_0, b_n = -(1/a_0) * sum_{i=1..n} a_i b_{n-i}.
inline Series inverse(const Series& a) {
    if (a[0].is_zero()) throw ZeroConstantTerm();
    const Rational inv0 = reciprocal(a[0]);
    std::vector<Rational> b(a.order() + 1);
    b[0] = inv0;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        Rational acc;
        for (std::size_t i = 1; i <= n; ++i) acc += a[i] * b[n - i];
        b[n] = -(inv0 * acc);
    }
    return Series(a.order(), b);
}

}  // namespace frob
