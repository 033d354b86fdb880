#pragma once

#include <span>
#include <string>
#include <vector>

#include "frob/binomial.hpp"
#include "frob/errors.hpp"
#include "frob/poly.hpp"
#include "frob/rational.hpp"

namespace frob {

/// Index pair (k, n) of the Bernstein basis polynomial B_{k,n}.
struct BernsteinIndex {
    unsigned long k = 0;
    unsigned long n = 0;

    void validate() const {
        if (k > n) {
            throw InvalidIndex("Bernstein index k=" + std::to_string(k) + " exceeds degree n=" + std::to_string(n));
        }
    }

    friend bool operator==(const BernsteinIndex&, const BernsteinIndex&) = default;
};

namespace detail {

/// c * x^shift * (1 - x)^m, with (1 - x)^m written out by the binomial theorem.
inline Poly scaled_shifted_one_minus_x_power(const BigInt& c, unsigned long shift, unsigned long m) {
    std::vector<Rational> coeffs(shift + m + 1);
    for (unsigned long j = 0; j <= m; ++j) {
        BigInt term = c * binomial(m, j);
        if (j % 2 == 1) term = -term;
        coeffs[shift + j] = Rational(term);
    }
    return Poly(std::move(coeffs));
}

}  // namespace detail

/// B_{k,n}(x) = C(n,k) x^k (1 - x)^{n-k}, expanded in the monomial basis.
inline Poly bernstein_poly(BernsteinIndex idx) {
    idx.validate();
    return detail::scaled_shifted_one_minus_x_power(binomial(idx.n, idx.k), idx.k, idx.n - idx.k);
}

inline Rational bernstein_eval(BernsteinIndex idx, const Rational& x) { return bernstein_poly(idx)(x); }

/// B_n(f, x) = sum_k f(k/n) B_{k,n}(x), given samples[k] = f(k/n).
inline Rational bernstein_operator(std::span<const Rational> samples, unsigned long n, const Rational& x) {
    if (n == 0) throw InvalidParameter("Bernstein operator degree must be positive");
    if (samples.size() != n + 1) {
        throw LengthMismatch("Bernstein operator of degree " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                             " samples, got " + std::to_string(samples.size()));
    }
    Rational acc;
    for (unsigned long k = 0; k <= n; ++k) acc += samples[k] * bernstein_eval({k, n}, x);
    return acc;
}

/// prod_i B_{k,n_i}(x) = (prod_i C(n_i,k)) x^{sk} (1 - x)^{sum n_i - sk}.
inline Poly bernstein_product(std::span<const BernsteinIndex> indices) {
    if (indices.empty()) throw InvalidParameter("Bernstein product needs at least one factor");
    const unsigned long k = indices.front().k;
    BigInt scale = 1;
    unsigned long total_degree = 0;
    for (const auto& idx : indices) {
        if (idx.k != k) throw MixedK("Bernstein product factors must share k");
        idx.validate();
        scale *= binomial(idx.n, k);
        total_degree += idx.n;
    }
    const unsigned long x_power = k * indices.size();
    return detail::scaled_shifted_one_minus_x_power(scale, x_power, total_degree - x_power);
}

}  // namespace frob
