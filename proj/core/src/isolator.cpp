#include "sqfe/isolator.hpp"

#include "sqfe/errors.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sqfe {

bool taylor_exclusion_test(const IntPolynomial& p, const Interval& J) {
    const TaylorExpansion t = taylor_expansion(p, J.midpoint());
    const Dyadic r = J.width().half();
    const Dyadic lhs = t.coeffs.empty() ? Dyadic() : t.coeffs[0].abs();
    Dyadic sum;
    Dyadic rpow(1);
    for (std::size_t i = 1; i < t.coeffs.size(); ++i) {
        rpow *= r;
        sum += t.coeffs[i].abs() * rpow;
        // The sum only grows; bail out as soon as it reaches |p(m)|.
        if (sum >= lhs) return false;
    }
    return lhs > sum;
}

bool condition_c0(const IntPolynomial& g, const Interval& J) {
    return taylor_exclusion_test(g, J);
}

bool condition_c1(const IntPolynomial& h, const Interval& J) {
    return taylor_exclusion_test(h, J);
}

namespace {

struct WorkItem {
    Interval iv;
    std::uint64_t depth;
};

} // namespace

IsolationReport isolate(const IntPolynomial& f, const Interval& I, const IsolateOptions& opts) {
    if (f.degree() < 1)
        throw std::invalid_argument("isolate requires a nonconstant polynomial");
    if (I.width().sign() <= 0)
        throw std::invalid_argument("isolate requires an interval of positive width");

    IsolationReport rep;
    rep.g = square_free_part(f);
    rep.h = opts.raw_derivative_c1
                ? derivative(f)
                : coprime_part(square_free_part(derivative(f)), rep.g);

    const std::uint64_t cap =
        opts.depth_cap.value_or(8 * (std::uint64_t(bit_length_L(f)) + 64));

    // Roots of g at the input endpoints; the subdivision below only reports
    // roots in the open interval.
    if (sign_at(rep.g, I.lo) == 0) rep.endpoint_roots.push_back(I.lo);
    if (sign_at(rep.g, I.hi) == 0) rep.endpoint_roots.push_back(I.hi);

    std::deque<WorkItem> work;
    work.push_back({I, 0});
    auto pop = [&]() {
        WorkItem item;
        if (opts.order == WorklistOrder::depth_first) {
            item = work.back();
            work.pop_back();
        } else {
            item = work.front();
            work.pop_front();
        }
        return item;
    };

    SubdivisionStats& st = rep.stats;
    while (!work.empty()) {
        const WorkItem item = pop();
        const Interval& J = item.iv;
        if (condition_c0(rep.g, J)) {
            ++st.partition_size;
            ++st.c0_terminations;
            continue;
        }
        if (condition_c1(rep.h, J)) {
            ++st.partition_size;
            ++st.c1_terminations;
            if (sign_at(rep.g, J.lo) * sign_at(rep.g, J.hi) < 0)
                rep.isolating_intervals.push_back(J);
            continue;
        }
        if (item.depth >= cap)
            throw invariant_error("subdivision depth cap exceeded at " + J.str());
        const Dyadic m = J.midpoint();
        if (sign_at(rep.g, m) == 0) rep.point_roots.push_back(m);
        ++st.bisections;
        st.max_depth = std::max(st.max_depth, item.depth + 1);
        work.push_back({Interval(J.lo, m), item.depth + 1});
        work.push_back({Interval(m, J.hi), item.depth + 1});
    }

    if (st.partition_size != st.bisections + 1)
        throw invariant_error("partition size disagrees with bisection count");

    std::sort(rep.isolating_intervals.begin(), rep.isolating_intervals.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::sort(rep.point_roots.begin(), rep.point_roots.end());
    std::sort(rep.endpoint_roots.begin(), rep.endpoint_roots.end());
    return rep;
}

IsolationReport isolate_benchmark(const IntPolynomial& f, const IsolateOptions& opts) {
    const Dyadic b = root_bound(f);
    return isolate(f, Interval(-b, b), opts);
}

} // namespace sqfe
