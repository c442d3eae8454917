#pragma once

#include "sqfe/interval.hpp"
#include "sqfe/polynomial.hpp"
#include "sqfe/rootfinder.hpp"

#include <complex>
#include <span>
#include <vector>

namespace sqfe {

/// n / sum(1/z_i). Errors on an empty list or a nonpositive entry.
double harmonic_mean(std::span<const double> z);

/// Sum of reciprocal distances from x to every root in the set; 0 for an
/// empty set. Errors when x coincides with a root (the value is infinite).
double sigma(double x, const RootSet& roots);

/// Inputs of the subdivision-size analysis: the root multisets of g and h,
/// the interval the isolator ran on, and degree/bit data of the original f.
struct StoppingModel {
    RootSet roots_f;  // roots of g
    RootSet roots_fp; // roots of h
    Interval interval;
    unsigned degree_d = 0;
    unsigned bits_L = 0;
};

/// Model for f on its benchmark interval [-root_bound(f), root_bound(f)].
StoppingModel make_stopping_model(const IntPolynomial& f);

/// Stopping function G(x) = max(2/(3*sigma_g(x)), 2/(3*sigma_h(x))).
/// An empty root set makes its term +infinity, which max absorbs.
double stopping_G(double x, const StoppingModel& m);

/// max(1, integral over the interval of 2/G(x) dx) by adaptive Simpson
/// quadrature with forced breakpoints at real root abscissae and Voronoi
/// cell boundaries. Upper-bounds the partition size #P.
double integral_bound_G(const StoppingModel& m);

/// Region of the interval owned by one root: no other root of the combined
/// multiset lies strictly closer. Conjugate pairs share a cell; cells can be
/// empty. Endpoints are floating point (bisector points are not dyadic).
struct VoronoiCell {
    std::complex<double> root;
    double lo = 0.0;
    double hi = 0.0;
    bool empty = true;
    bool owner_in_f = true; // owner belongs to roots_f (else roots_fp)
};

/// Cells of all roots of the combined multiset over the model interval.
std::vector<VoronoiCell> voronoi_cells(const StoppingModel& m);

/// sum over roots alpha of the exact antiderivative of 3/|x-alpha| over
/// interval minus alpha's cell: log differences for real roots, arcsinh
/// differences for complex ones.
double closed_form_bound(const StoppingModel& m);

/// The full bound chain for one polynomial.
struct BoundReport {
    double integral_2_over_G = 0.0;
    double integral_2_over_F = 0.0;
    double closed_form_sum = 0.0;
    double paper_constant_bound = 0.0; // 25 d L + 42 d ln d
};

BoundReport bound_report(const StoppingModel& m);
BoundReport bound_report(const IntPolynomial& f);

/// Integral of 2/F where F follows cell ownership: on cells owned by roots
/// of g it is the h-term, and vice versa. Exposed for the chain check.
double integral_bound_F(const StoppingModel& m);

} // namespace sqfe
