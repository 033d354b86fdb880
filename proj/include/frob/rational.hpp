#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "frob/errors.hpp"

namespace frob {

using BigInt = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(v) {}
    Rational(long v) : value_(v) {}
    Rational(long long v) : value_(BigInt(std::to_string(v))) {}
    Rational(unsigned v) : value_(v) {}
    Rational(unsigned long v) : value_(v) {}
    Rational(const BigInt& v) : value_(v) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DivideByZero("rational with zero denominator");
        value_.get_num() = num;
        value_.get_den() = den;
        value_.canonicalize();
    }

    static Rational from_mpq(mpq_class v) {
        Rational r;
        r.value_ = std::move(v);
        return r;
    }

    /// Parses "p", "-p", "p/q" or "-p/q" (decimal digits only, no whitespace).
    static Rational parse(std::string_view text) {
        std::size_t pos = 0;
        bool negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negative = text[pos] == '-';
            ++pos;
        }
        auto digits = [&](std::string_view what) {
            const std::size_t start = pos;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
            if (pos == start) throw SyntaxError(pos, {std::string(what)});
            return BigInt(std::string(text.substr(start, pos - start)));
        };
        BigInt num = digits("digit");
        BigInt den = 1;
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            den = digits("digit");
        }
        if (pos != text.size()) throw SyntaxError(pos, {"end of input"}, "trailing characters");
        if (den == 0) throw DivideByZero("rational literal with zero denominator: " + std::string(text));
        return Rational(negative ? BigInt(-num) : num, den);
    }

    const BigInt& numerator() const { return value_.get_num(); }
    const BigInt& denominator() const { return value_.get_den(); }
    const mpq_class& mpq() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "p/q", with "/q" omitted when q = 1.
    std::string to_string() const {
        std::string s = value_.get_num().get_str();
        if (value_.get_den() != 1) s += "/" + value_.get_den().get_str();
        return s;
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivideByZero("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return from_mpq(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_;
};

inline Rational pow(const Rational& base, unsigned long exponent) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
    return Rational(num, den);
}

inline Rational reciprocal(const Rational& r) { return Rational(1) / r; }

/// (-1)^n as a Rational.
inline Rational sign_power(unsigned long n) { return Rational(n % 2 == 0 ? 1 : -1); }

}  // namespace frob
