#pragma once

#include "sqfe/bigint.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sqfe {

/// Exact element of Z[1/2]: value = mantissa * 2^exponent.
///
/// Canonical form: the mantissa is odd or zero, and zero has exponent 0.
/// Equality is therefore structural. Addition, multiplication and halving
/// are exact; there is no general division (1/3 is not dyadic).
class Dyadic {
public:
    Dyadic() : mant_(0), exp_(0) {}
    Dyadic(long v) : mant_(v), exp_(0) { normalize(); }
    Dyadic(BigInt mantissa, std::int64_t exponent = 0)
        : mant_(std::move(mantissa)), exp_(exponent) {
        normalize();
    }

    /// 1 * 2^e.
    static Dyadic pow2(std::int64_t e) { return Dyadic(BigInt(1), e); }

    const BigInt& mantissa() const { return mant_; }
    std::int64_t exponent() const { return exp_; }

    bool is_zero() const { return sign_of(mant_) == 0; }
    int sign() const { return sign_of(mant_); }
    /// True when the value lies in Z.
    bool is_integer() const { return exp_ >= 0; }

    Dyadic operator-() const;
    Dyadic abs() const;
    /// Exact division by two (exponent decrement).
    Dyadic half() const;

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    Dyadic& operator+=(const Dyadic& rhs) { return *this = *this + rhs; }
    Dyadic& operator-=(const Dyadic& rhs) { return *this = *this - rhs; }
    Dyadic& operator*=(const Dyadic& rhs) { return *this = *this * rhs; }

    /// Exact three-way comparison of values: -1, 0, +1.
    static int compare(const Dyadic& a, const Dyadic& b);
    /// Exact three-way comparison of |a| and |b|.
    static int compare_abs(const Dyadic& a, const Dyadic& b);

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exp_ == b.exp_ && a.mant_ == b.mant_;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return compare(a, b) >= 0; }

    /// Nearest double; overflows to +-inf. Analysis/display only.
    double to_double() const;
    /// Exact conversion when prec covers the mantissa, rounded otherwise.
    mpf_class to_mpf(mp_bitcnt_t prec) const;

    /// Text form `m*2^e`; plain `m` when the exponent is zero.
    std::string str() const;
    /// Accepts `m*2^e` and plain decimal integers.
    static Dyadic parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Dyadic& d);

private:
    BigInt mant_;
    std::int64_t exp_;

    void normalize();
};

} // namespace sqfe
