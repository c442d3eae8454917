#pragma once

#include "sqfe/interval.hpp"
#include "sqfe/polynomial.hpp"

#include <vector>

namespace sqfe {

/// Sturm chain of a square-free polynomial: p0 = g, p1 = g', and each
/// following entry the negated pseudo-remainder, rescaled by a positive
/// integer and reduced by its content. Positive scalings leave the sign
/// variation count unchanged, so counting stays exact over Z.
class SturmSequence {
public:
    explicit SturmSequence(const IntPolynomial& g);

    const std::vector<IntPolynomial>& chain() const { return chain_; }

    /// Sign variations of the chain evaluated exactly at x (zeros skipped).
    int variations_at(const Dyadic& x) const;

private:
    std::vector<IntPolynomial> chain_;
};

/// Number of distinct real roots of square-free g in (lo, hi].
/// Exact integer arithmetic throughout. pre: g nonzero.
int sturm_count(const IntPolynomial& g, const Interval& J);
int sturm_count(const SturmSequence& seq, const IntPolynomial& g, const Interval& J);

/// Pairwise-disjoint dyadic intervals, each containing exactly one real root
/// of square-free g in I. Roots hit exactly at dyadic points come back as
/// zero-width intervals.
std::vector<Interval> sturm_isolate(const IntPolynomial& g, const Interval& I);

} // namespace sqfe
