#pragma once

#include <gmpxx.h>

#include <cmath>

namespace sqfe::detail {

// sqrt of a nonnegative mpf as a double, robust across the full mpf exponent
// range; plain get_d would flush squared distances below 2^-1074 to zero.
inline double sqrt_to_double(const mpf_class& sq) {
    if (mpf_sgn(sq.get_mpf_t()) <= 0) return 0.0;
    long e2 = 0;
    const double m = mpf_get_d_2exp(&e2, sq.get_mpf_t());
    if ((e2 & 1) != 0) return std::ldexp(std::sqrt(2.0 * m), static_cast<int>((e2 - 1) / 2));
    return std::ldexp(std::sqrt(m), static_cast<int>(e2 / 2));
}

// log of a positive mpf, robust against double underflow/overflow.
inline double log_to_double(const mpf_class& v) {
    long e2 = 0;
    const double m = mpf_get_d_2exp(&e2, v.get_mpf_t());
    return std::log(m) + 0.6931471805599453 * static_cast<double>(e2);
}

} // namespace sqfe::detail
