#pragma once

#include "sqfe/polynomial.hpp"

#include <complex>
#include <vector>

#include <gmpxx.h>

namespace sqfe {

/// One numeric root. Coordinates are multiprecision floats so that root
/// clusters far below double resolution (Mignotte-style pairs) stay
/// distinguishable; real roots carry an exactly zero imaginary part.
struct MpComplex {
    mpf_class re;
    mpf_class im;

    bool is_real() const { return mpf_sgn(im.get_mpf_t()) == 0; }
    std::complex<double> to_double() const { return {re.get_d(), im.get_d()}; }
};

/// All complex roots of a polynomial, conjugate-paired, sorted by
/// (Re, Im). residual_bound is the max of |p(r)| / (||p||_2 * max(1,|r|)^d)
/// over the returned roots.
struct RootSet {
    std::vector<MpComplex> roots;
    double residual_bound = 0.0;
    mp_bitcnt_t precision = 64;

    std::size_t size() const { return roots.size(); }
    bool empty() const { return roots.empty(); }
    std::vector<std::complex<double>> as_doubles() const;

    /// Build from plain doubles (tests and synthetic stopping models).
    static RootSet from_doubles(const std::vector<std::complex<double>>& rs);
};

/// All d complex roots by Aberth-Ehrlich simultaneous iteration: a double
/// pass for placement, then a multiprecision pass that splits clusters.
/// The number of real roots is pinned exactly by a Sturm count beforehand.
/// Throws convergence_error when the residual threshold cannot be met.
RootSet complex_roots(const IntPolynomial& p);

} // namespace sqfe
