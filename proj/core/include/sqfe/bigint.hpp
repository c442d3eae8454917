#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace sqfe {

/// Arbitrary-precision signed integer. GMP's sign-magnitude representation
/// already provides the invariants we need (zero has sign 0, no overflow),
/// so the coefficient domain is a thin alias plus a few helpers.
using BigInt = mpz_class;

inline int sign_of(const BigInt& n) { return mpz_sgn(n.get_mpz_t()); }

/// Number of bits of |n|; 0 for n = 0.
inline std::size_t bit_length(const BigInt& n) {
    if (sign_of(n) == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// 2^k for k >= 0.
inline BigInt big_pow2(unsigned long k) {
    BigInt r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), k);
    return r;
}

BigInt parse_bigint(std::string_view text);

inline std::string to_string(const BigInt& n) { return n.get_str(); }

} // namespace sqfe
