#pragma once

#include <algorithm>
#include <limits>
#include <ostream>
#include <string>

#include "frob/errors.hpp"
#include "frob/rational.hpp"

namespace frob {

/// Valuation returned for zero, standing in for +infinity.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

inline bool is_odd_prime(unsigned long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (unsigned long d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

inline void require_odd_prime(unsigned long p) {
    if (!is_odd_prime(p)) throw InvalidParameter(std::to_string(p) + " is not an odd prime");
}

inline BigInt prime_power(unsigned long p, unsigned long n) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, n);
    return r;
}

inline long valuation(const BigInt& v, unsigned long p) {
    if (v == 0) return kInfiniteValuation;
    BigInt rest = v;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), v.get_mpz_t(), BigInt(p).get_mpz_t()));
}

/// v_p(q), so that |q|_p = p^{-v_p(q)}; kInfiniteValuation for q = 0.
inline long padic_valuation(const Rational& q, unsigned long p) {
    require_odd_prime(p);
    if (q.is_zero()) return kInfiniteValuation;
    return valuation(q.numerator(), p) - valuation(q.denominator(), p);
}

/// Element of Z/p^N Z viewed as a truncated p-adic integer. Arithmetic
/// results keep the smaller of the two precisions.
class PadicInt {
public:
    PadicInt(unsigned long p, unsigned long precision, BigInt residue) : p_(p), precision_(precision) {
        require_odd_prime(p);
        if (precision == 0) throw InvalidParameter("p-adic precision must be positive");
        modulus_ = prime_power(p, precision);
        mpz_mod(residue_.get_mpz_t(), residue.get_mpz_t(), modulus_.get_mpz_t());
    }

    unsigned long prime() const { return p_; }
    unsigned long precision() const { return precision_; }
    const BigInt& residue() const { return residue_; }
    const BigInt& modulus() const { return modulus_; }

    /// Same element at a lower precision.
    PadicInt reduced(unsigned long precision) const {
        return PadicInt(p_, std::min(precision, precision_), residue_);
    }

    friend PadicInt operator+(const PadicInt& a, const PadicInt& b) {
        check_same_prime(a, b);
        return PadicInt(a.p_, std::min(a.precision_, b.precision_), a.residue_ + b.residue_);
    }
    friend PadicInt operator-(const PadicInt& a, const PadicInt& b) {
        check_same_prime(a, b);
        return PadicInt(a.p_, std::min(a.precision_, b.precision_), a.residue_ - b.residue_);
    }
    friend PadicInt operator*(const PadicInt& a, const PadicInt& b) {
        check_same_prime(a, b);
        return PadicInt(a.p_, std::min(a.precision_, b.precision_), a.residue_ * b.residue_);
    }

    friend bool operator==(const PadicInt& a, const PadicInt& b) {
        return a.p_ == b.p_ && a.precision_ == b.precision_ && a.residue_ == b.residue_;
    }

    /// "292 mod 3^6"
    std::string to_string() const {
        return residue_.get_str() + " mod " + std::to_string(p_) + "^" + std::to_string(precision_);
    }
    friend std::ostream& operator<<(std::ostream& os, const PadicInt& v) { return os << v.to_string(); }

private:
    static void check_same_prime(const PadicInt& a, const PadicInt& b) {
        if (a.p_ != b.p_) throw InvalidParameter("p-adic operands over different primes");
    }

    unsigned long p_;
    unsigned long precision_;
    BigInt modulus_;
    BigInt residue_;
};

/// Image of q in Z/p^N: numerator * denominator^{-1} mod p^N.
inline PadicInt padic_from_rational(const Rational& q, unsigned long p, unsigned long precision) {
    require_odd_prime(p);
    if (q.denominator() % p == 0) {
        throw NonInvertibleDenominator(q.to_string() + " has a denominator divisible by " + std::to_string(p));
    }
    if (precision == 0) throw InvalidParameter("p-adic precision must be positive");
    const BigInt modulus = prime_power(p, precision);
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), q.denominator().get_mpz_t(), modulus.get_mpz_t());
    return PadicInt(p, precision, q.numerator() * inv);
}

}  // namespace frob
