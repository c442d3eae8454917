#pragma once

#include "sqfe/polynomial.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace sqfe {

enum class Family { mignotte, wilkinson, chebyshev, random_dense };

std::string to_string(Family f);
Family family_from_string(std::string_view name);

/// Benchmark polynomials:
///   mignotte   X^d - 2(2^(L/2-1) X - 1)^2   (two roots exponentially close)
///   wilkinson  prod_{k=1..d} (X - k)
///   chebyshev  degree-d Chebyshev polynomial of the first kind
///   random     uniform coefficients in [-2^L+1, 2^L-1], nonzero leading
/// pre: d >= 2, L >= 2; mignotte needs L even and >= 4. The seed only
/// matters for the random family.
IntPolynomial family_generate(Family family, unsigned d, unsigned L, std::uint64_t seed);

/// Default RNG seed; the SQFE_SEED environment variable overrides it.
std::uint64_t default_seed();

} // namespace sqfe
