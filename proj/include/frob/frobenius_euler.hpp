#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "frob/binomial.hpp"
#include "frob/errors.hpp"
#include "frob/poly.hpp"
#include "frob/rational.hpp"
#include "frob/series.hpp"

namespace frob {

inline constexpr std::size_t kDefaultMaxIndex = 512;

namespace detail {

inline void require_parameter_not_one(const Rational& u) {
    if (u == Rational(1)) throw InvalidParameter("Frobenius-Euler parameter u must differ from 1");
}

inline void require_index_within(std::size_t n, std::size_t max_n) {
    if (n > max_n) {
        throw LimitExceeded("index " + std::to_string(n) + " exceeds the configured limit " +
                            std::to_string(max_n));
    }
}

}  // namespace detail

/// Frobenius-Euler numbers H_n(u) for one fixed parameter u, memoized.
///
/// H_0(u) = 1 and, for n >= 1, (u - 1) H_n(u) = sum_{k<n} C(n,k) H_k(u),
/// which is the umbral relation (H(u) + 1)^n = u H_n(u) solved for H_n.
/// Indices above `max_index` are rejected rather than computed.
///
/// Not internally synchronized: confine a context to one thread, or give
/// each worker its own. Values already returned never change.
class FEContext {
public:
    explicit FEContext(Rational u, std::size_t max_index = kDefaultMaxIndex)
        : u_(std::move(u)), max_index_(max_index) {
        detail::require_parameter_not_one(u_);
        inv_u_minus_one_ = reciprocal(u_ - Rational(1));
        cache_.emplace_back(1);
    }

    const Rational& u() const { return u_; }
    std::size_t max_index() const { return max_index_; }

    const Rational& number(std::size_t n) {
        detail::require_index_within(n, max_index_);
        while (cache_.size() <= n) {
            const std::size_t m = cache_.size();
            Rational acc;
            BigInt c = 1;  // C(m, k), advanced by the running product
            for (std::size_t k = 0; k < m; ++k) {
                acc += Rational(c) * cache_[k];
                c *= m - k;
                mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k + 1);
            }
            cache_.push_back(acc * inv_u_minus_one_);
        }
        return cache_[n];
    }

    /// H_n(u, x) = sum_k C(n,k) H_k(u) x^{n-k}; monic of degree n.
    Poly polynomial(std::size_t n) {
        detail::require_index_within(n, max_index_);
        std::vector<Rational> coeffs(n + 1);
        for (std::size_t k = 0; k <= n; ++k) coeffs[n - k] = Rational(binomial(n, k)) * number(k);
        return Poly(std::move(coeffs));
    }

    Rational evaluate(std::size_t n, const Rational& x) { return polynomial(n)(x); }

private:
    Rational u_;
    Rational inv_u_minus_one_;
    std::size_t max_index_;
    std::vector<Rational> cache_;
};

/// [H_0(u, x), ..., H_N(u, x)] read off the generating function
/// (1 - u) / (e^t - u) * e^{x t}. Shares nothing with FEContext beyond the
/// series primitives.
inline std::vector<Rational> polynomial_values_from_generating_function(const Rational& u, const Rational& x,
                                                                        std::size_t max_n) {
    detail::require_parameter_not_one(u);
    const Series denominator = Series::exponential(1, max_n) - Series::constant(u, max_n);
    const Series gf = (Rational(1) - u) * (inverse(denominator) * Series::exponential(x, max_n));
    std::vector<Rational> out(max_n + 1);
    Rational factorial = 1;
    for (std::size_t n = 0; n <= max_n; ++n) {
        if (n > 0) factorial *= Rational(static_cast<unsigned long>(n));
        out[n] = factorial * gf[n];
    }
    return out;
}

/// [H_0(u), ..., H_N(u)] from (1 - u) / (e^t - u).
inline std::vector<Rational> numbers_from_generating_function(const Rational& u, std::size_t max_n) {
    return polynomial_values_from_generating_function(u, 0, max_n);
}

}  // namespace frob
