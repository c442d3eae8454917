#pragma once

#include "sqfe/dyadic.hpp"

#include <stdexcept>
#include <string>

namespace sqfe {

/// Closed interval with dyadic endpoints, the unit of subdivision.
/// Midpoints of dyadic intervals are always dyadic, so bisection is exact.
struct Interval {
    Dyadic lo;
    Dyadic hi;

    Interval() = default;
    Interval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
    }

    Dyadic width() const { return hi - lo; }
    Dyadic midpoint() const { return (lo + hi).half(); }
    bool contains(const Dyadic& x) const { return lo <= x && x <= hi; }
    bool is_point() const { return lo == hi; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }

    std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
};

} // namespace sqfe
