#include <gtest/gtest.h>

#include "frob/padic.hpp"

namespace frob {
namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

TEST(Valuation, Integers) {
    EXPECT_EQ(valuation(BigInt(54), 3), 3);
    EXPECT_EQ(valuation(BigInt(-54), 3), 3);
    EXPECT_EQ(valuation(BigInt(7), 3), 0);
    EXPECT_EQ(valuation(BigInt(0), 3), kInfiniteValuation);
}

TEST(Valuation, Rationals) {
    EXPECT_EQ(padic_valuation(q(1, 9), 3), -2);
    EXPECT_EQ(padic_valuation(q(18, 5), 3), 2);
    EXPECT_EQ(padic_valuation(q(3, 1), 3), 1);
    EXPECT_EQ(padic_valuation(q(4) - q(1), 3), 1);
    EXPECT_EQ(padic_valuation(q(0), 5), kInfiniteValuation);
}

TEST(Primes, OddPrimeCheck) {
    EXPECT_TRUE(is_odd_prime(3));
    EXPECT_TRUE(is_odd_prime(97));
    EXPECT_FALSE(is_odd_prime(2));
    EXPECT_FALSE(is_odd_prime(1));
    EXPECT_FALSE(is_odd_prime(91));
    EXPECT_THROW(require_odd_prime(9), InvalidParameter);
    EXPECT_EQ(prime_power(3, 6), 729);
}

TEST(PadicFromRational, Residues) {
    EXPECT_EQ(padic_from_rational(q(1, 5), 3, 6).residue(), 146);
    EXPECT_EQ(padic_from_rational(q(2, 5), 3, 6).residue(), 292);
    EXPECT_EQ(padic_from_rational(q(-8, 25), 3, 6).residue(), 58);
    EXPECT_EQ(padic_from_rational(q(-8, 25), 3, 8).residue(), 787);
    EXPECT_EQ(padic_from_rational(q(-1), 5, 2).residue(), 24);
    EXPECT_THROW(padic_from_rational(q(1, 3), 3, 4), NonInvertibleDenominator);
}

TEST(PadicFromRational, InverseTimesSelfIsOne) {
    for (long d = 1; d <= 40; ++d) {
        if (d % 3 == 0) continue;
        const PadicInt inv = padic_from_rational(q(1, d), 3, 8);
        const PadicInt self = padic_from_rational(q(d), 3, 8);
        EXPECT_EQ(inv * self, padic_from_rational(q(1), 3, 8)) << d;
    }
}

TEST(PadicInt, ArithmeticAndSerialization) {
    const PadicInt a(3, 6, 700);
    const PadicInt b(3, 6, 100);
    EXPECT_EQ((a + b).residue(), 71);
    EXPECT_EQ((b - a).residue(), 129);
    EXPECT_EQ(PadicInt(3, 6, -1).residue(), 728);
    EXPECT_EQ(padic_from_rational(q(2, 5), 3, 6).to_string(), "292 mod 3^6");
    EXPECT_EQ((a * b).precision(), 6u);
}

TEST(PadicInt, MixedPrecisionTruncates) {
    const PadicInt a(3, 6, 700);
    const PadicInt b(3, 2, 1);
    const PadicInt s = a + b;
    EXPECT_EQ(s.precision(), 2u);
    EXPECT_EQ(s.residue(), (700 + 1) % 9);
    EXPECT_EQ(a.reduced(2).residue(), 700 % 9);
}

TEST(PadicInt, MixedPrimesRejected) {
    EXPECT_THROW(PadicInt(3, 2, 1) + PadicInt(5, 2, 1), InvalidParameter);
}

TEST(PadicFromRational, RingHomomorphism) {
    for (long a = -12; a <= 12; ++a) {
        for (long b = 1; b <= 10; ++b) {
            if (b % 5 == 0) continue;
            const Rational x = q(a, b);
            const Rational y = q(b, 7);
            EXPECT_EQ(padic_from_rational(x + y, 5, 5), padic_from_rational(x, 5, 5) + padic_from_rational(y, 5, 5));
            EXPECT_EQ(padic_from_rational(x * y, 5, 5), padic_from_rational(x, 5, 5) * padic_from_rational(y, 5, 5));
        }
    }
}

}  // namespace
}  // namespace frob
