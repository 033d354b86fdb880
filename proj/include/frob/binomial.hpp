#pragma once

#include "frob/rational.hpp"

namespace frob {

/// C(n, k), zero when k > n. Running product with an exact division per step.
inline BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned long i = 1; i <= k; ++i) {
        result *= n - k + i;
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i);
    }
    return result;
}

}  // namespace frob
