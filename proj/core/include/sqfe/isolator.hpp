#pragma once

#include "sqfe/interval.hpp"
#include "sqfe/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sqfe {

struct SubdivisionStats {
    std::uint64_t partition_size = 0; // #P, leaves of the subdivision tree
    std::uint64_t bisections = 0;
    std::uint64_t max_depth = 0;
    std::uint64_t c0_terminations = 0;
    std::uint64_t c1_terminations = 0;
};

/// Result of one isolation run. Isolating intervals hold exactly one root of
/// the input in their interior; point roots are exact roots hit at bisection
/// midpoints; endpoint roots are roots of the square-free part at the input
/// endpoints, found by a pre-pass. All lists are sorted ascending.
struct IsolationReport {
    std::vector<Interval> isolating_intervals;
    std::vector<Dyadic> point_roots;
    std::vector<Dyadic> endpoint_roots;
    SubdivisionStats stats;

    // The square-free substitutes actually subdivided on; callers use them
    // for cross-checks and for the amortization model.
    IntPolynomial g; // square-free part of f
    IntPolynomial h; // square-free part of f', made coprime to f

    /// Total real roots implied by the report.
    std::size_t root_count() const {
        return isolating_intervals.size() + point_roots.size() + endpoint_roots.size();
    }
};

enum class WorklistOrder { depth_first, breadth_first };

struct IsolateOptions {
    /// Bisection depth beyond which the run aborts with invariant_error.
    /// Defaults to 8 * (L + 64); unreachable for well-formed inputs.
    std::optional<std::uint64_t> depth_cap;
    /// Tree shape and report are order-independent; the knob exists so tests
    /// can prove that.
    WorklistOrder order = WorklistOrder::depth_first;
    /// Experiment: run C1 on the raw derivative f' instead of its
    /// square-free coprime part h. Correct for square-free f with
    /// gcd(f, f') = 1; pathological inputs hit the depth cap. Statistics are
    /// not comparable to the default mode and no size bound is claimed.
    bool raw_derivative_c1 = false;
};

/// Interval exclusion test: |p(m)| > sum_i |p^(i)(m)|/i! (w/2)^i, evaluated
/// exactly in dyadic arithmetic. True implies p has no root in J; ties fail
/// (the inequality is strict, subdivision continues).
bool taylor_exclusion_test(const IntPolynomial& p, const Interval& J);

/// Termination test C0 on the square-free part g: no root of g in J.
bool condition_c0(const IntPolynomial& g, const Interval& J);
/// Termination test C1 on h (square-free, coprime-to-f part of f'), using
/// h's own derivatives: h has no root in J, hence g has at most one.
bool condition_c1(const IntPolynomial& h, const Interval& J);

/// The subdivision algorithm on interval I. pre: f nonzero with degree >= 1,
/// I of positive width.
IsolationReport isolate(const IntPolynomial& f, const Interval& I,
                        const IsolateOptions& opts = {});

/// isolate on [-B, B] with B = root_bound(f); captures every real root.
IsolationReport isolate_benchmark(const IntPolynomial& f, const IsolateOptions& opts = {});

} // namespace sqfe
