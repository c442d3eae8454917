#pragma once

#include "sqfe/dyadic.hpp"
#include "sqfe/polynomial.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace sqfe::testing {

/// Deterministic generator for test inputs.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Uniform double in [lo, hi).
    double real_in(double lo, double hi) {
        const double u = static_cast<double>(gen() >> 11) * 0x1p-53;
        return lo + u * (hi - lo);
    }

    /// Random dyadic with mantissa up to `bits` bits and |exponent| <= emax.
    Dyadic dyadic(unsigned bits, int emax) {
        const std::int64_t m = int_in(-(std::int64_t(1) << bits), std::int64_t(1) << bits);
        const std::int64_t e = int_in(-emax, emax);
        return Dyadic(BigInt(static_cast<long>(m)), e);
    }

    /// Random integer polynomial, exact degree d, |coeffs| < 2^L.
    IntPolynomial poly(unsigned d, unsigned L) {
        std::vector<BigInt> c(d + 1);
        const std::int64_t m = (std::int64_t(1) << L) - 1;
        for (unsigned i = 0; i <= d; ++i) c[i] = BigInt(static_cast<long>(int_in(-m, m)));
        while (sign_of(c[d]) == 0) c[d] = BigInt(static_cast<long>(int_in(-m, m)));
        return IntPolynomial(std::move(c));
    }
};

} // namespace sqfe::testing
