#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "frob/errors.hpp"
#include "frob/frobenius_euler.hpp"
#include "frob/padic.hpp"
#include "frob/poly.hpp"
#include "frob/rational.hpp"

namespace frob {

inline constexpr std::size_t kDefaultTermCap = 1'000'000;

/// The integrand f(xi) = u^xi * poly(xi).
struct IntegrandSpec {
    Rational u;
    Poly poly;

    Rational operator()(const Rational& xi) const {
        if (!xi.is_integer() || xi.sign() < 0) throw InvalidParameter("integrand sampled off the naturals");
        return pow(u, xi.numerator().get_ui()) * poly(xi);
    }
};

namespace detail {

inline BigInt checked_term_count(unsigned long p, unsigned long level, std::size_t cap) {
    require_odd_prime(p);
    const BigInt count = prime_power(p, level);
    if (count > BigInt(static_cast<unsigned long>(cap))) {
        throw LimitExceeded(std::to_string(p) + "^" + std::to_string(level) + " terms exceed the cap of " +
                            std::to_string(cap));
    }
    return count;
}

// Z/m for m < 2^62, products through 128-bit intermediates.
struct WordModRing {
    using value_type = std::uint64_t;
    std::uint64_t m;

    value_type from(const BigInt& v) const {
        BigInt r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), BigInt(static_cast<unsigned long>(m)).get_mpz_t());
        return r.get_ui();
    }
    value_type add(value_type a, value_type b) const { return (a + b) % m; }
    value_type sub(value_type a, value_type b) const { return (a + m - b) % m; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % m);
    }
    BigInt lift(value_type a) const { return BigInt(static_cast<unsigned long>(a)); }
};

struct BigModRing {
    using value_type = BigInt;
    BigInt m;

    value_type from(const BigInt& v) const {
        BigInt r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        return r;
    }
    value_type add(const value_type& a, const value_type& b) const { return from(a + b); }
    value_type sub(const value_type& a, const value_type& b) const { return from(a - b); }
    value_type mul(const value_type& a, const value_type& b) const { return from(a * b); }
    BigInt lift(const value_type& a) const { return a; }
};

template <class Ring>
typename Ring::value_type reduce_rational(const Ring& ring, const Rational& q, const BigInt& modulus) {
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), q.denominator().get_mpz_t(), modulus.get_mpz_t()) == 0) {
        throw NonInvertibleDenominator(q.to_string() + " is not invertible modulo " + modulus.get_str());
    }
    return ring.from(q.numerator() * inv);
}

/// Adaptive evaluation of lim_N S_N(f) mod p^M, S_N summed term by term
/// mod p^M. Each level N extends the prefix of level N - 1.
template <class Ring>
BigInt stabilized_residue(const Ring& ring, const BigInt& modulus, const IntegrandSpec& spec, unsigned long p,
                          std::size_t cap) {
    using V = typename Ring::value_type;
    const V u = reduce_rational(ring, spec.u, modulus);
    std::vector<V> coeffs;
    for (const auto& c : spec.poly.coefficients()) coeffs.push_back(reduce_rational(ring, c, modulus));

    V sum = ring.from(0);
    V power = ring.from(1);
    V xi_mod = ring.from(0);
    const V one = ring.from(1);
    std::uint64_t xi = 0;
    std::vector<V> levels;
    for (unsigned long level = 1;; ++level) {
        const BigInt count = prime_power(p, level);
        if (count > BigInt(static_cast<unsigned long>(cap))) {
            throw NoConvergence("fermionic sum did not stabilize modulo " + modulus.get_str() + " within " +
                                std::to_string(cap) + " terms");
        }
        const std::uint64_t end = count.get_ui();
        for (; xi < end; ++xi) {
            V value = ring.from(0);
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = ring.add(ring.mul(value, xi_mod), *it);
            value = ring.mul(value, power);
            sum = (xi % 2 == 0) ? ring.add(sum, value) : ring.sub(sum, value);
            power = ring.mul(power, u);
            xi_mod = ring.add(xi_mod, one);
        }
        levels.push_back(sum);
        const std::size_t n = levels.size();
        if (n >= 3 && levels[n - 1] == levels[n - 2] && levels[n - 2] == levels[n - 3]) return ring.lift(sum);
    }
}

}  // namespace detail

/// S_N(f) = sum_{xi=0}^{p^N - 1} (-1)^xi f(xi), exactly.
inline Rational fermionic_partial_sum(const IntegrandSpec& spec, unsigned long p, unsigned long level,
                                      std::size_t cap = kDefaultTermCap) {
    if (spec.u.is_zero()) throw InvalidParameter("integrand parameter u must be nonzero");
    const std::uint64_t count = detail::checked_term_count(p, level, cap).get_ui();
    Rational sum;
    Rational power = 1;
    for (std::uint64_t xi = 0; xi < count; ++xi) {
        const Rational term = power * spec.poly(Rational(static_cast<unsigned long>(xi)));
        if (xi % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
        power *= spec.u;
    }
    return sum;
}

/// The fermionic integral of u^xi * poly(xi) over Z_p, to precision M.
///
/// Requires u to be a p-adic unit with |u - 1|_p < 1 and p-integral poly
/// coefficients. Partial sums S_1, S_2, ... are reduced mod p^M and the
/// residue is returned once S_N, S_{N+1}, S_{N+2} agree.
inline PadicInt fermionic_integral(const IntegrandSpec& spec, unsigned long p, unsigned long precision,
                                   std::size_t cap = kDefaultTermCap) {
    require_odd_prime(p);
    if (precision == 0) throw InvalidParameter("p-adic precision must be positive");
    if (spec.u.is_zero() || padic_valuation(spec.u, p) != 0) {
        throw InvalidParameter("u = " + spec.u.to_string() + " is not a " + std::to_string(p) + "-adic unit");
    }
    const Rational shifted = spec.u - Rational(1);
    if (!shifted.is_zero() && padic_valuation(shifted, p) < 1) {
        throw InvalidParameter("|u - 1|_p < 1 fails for u = " + spec.u.to_string() + ", p = " + std::to_string(p));
    }
    for (const auto& c : spec.poly.coefficients()) {
        if (c.denominator() % p == 0) {
            throw NonInvertibleDenominator("coefficient " + c.to_string() + " is not " + std::to_string(p) +
                                           "-integral");
        }
    }
    const BigInt modulus = prime_power(p, precision);
    BigInt residue;
    if (mpz_sizeinbase(modulus.get_mpz_t(), 2) <= 62) {
        residue = detail::stabilized_residue(detail::WordModRing{modulus.get_ui()}, modulus, spec, p, cap);
    } else {
        residue = detail::stabilized_residue(detail::BigModRing{modulus}, modulus, spec, p, cap);
    }
    return PadicInt(p, precision, residue);
}

/// Exact value of the integral from the Frobenius-Euler numbers:
/// the integral of u^xi xi^m is 2/(u+1) * H_m(-1/u). `ctx` must carry -1/u.
inline Rational integral_exact_via_fe(const IntegrandSpec& spec, FEContext& ctx) {
    if (spec.u.is_zero() || spec.u == Rational(-1)) {
        throw InvalidParameter("exact integral needs u outside {0, -1}, got " + spec.u.to_string());
    }
    if (ctx.u() != -reciprocal(spec.u)) throw InvalidParameter("context parameter must equal -1/u");
    Rational acc;
    const auto coeffs = spec.poly.coefficients();
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        if (!coeffs[m].is_zero()) acc += coeffs[m] * ctx.number(m);
    }
    return Rational(2) / (spec.u + Rational(1)) * acc;
}

inline Rational integral_exact_via_fe(const IntegrandSpec& spec) {
    if (spec.u.is_zero() || spec.u == Rational(-1)) {
        throw InvalidParameter("exact integral needs u outside {0, -1}, got " + spec.u.to_string());
    }
    FEContext ctx(-reciprocal(spec.u));
    return integral_exact_via_fe(spec, ctx);
}

/// S_N(f_1) + S_N(f) - f(0) - f(p^N), with f_1(xi) = f(xi + 1). Zero for
/// every level because the alternating sum telescopes over an odd count.
inline Rational shift_identity_residual(const IntegrandSpec& spec, unsigned long p, unsigned long level,
                                        std::size_t cap = kDefaultTermCap) {
    const IntegrandSpec shifted{spec.u, spec.u * compose_affine(spec.poly, 1, 1)};
    const Rational top(detail::checked_term_count(p, level, cap));
    return fermionic_partial_sum(shifted, p, level, cap) + fermionic_partial_sum(spec, p, level, cap) -
           spec(Rational(0)) - spec(top);
}

}  // namespace frob
