#include "sqfe/dyadic.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace sqfe {

namespace {

// Exponents stay minute at desk scale; the guard exists so that a runaway
// computation fails loudly instead of wrapping.
constexpr std::int64_t kExpLimit = std::int64_t(1) << 56;

std::int64_t checked_exp(std::int64_t e) {
    if (e > kExpLimit || e < -kExpLimit)
        throw std::overflow_error("dyadic exponent out of range");
    return e;
}

} // namespace

void Dyadic::normalize() {
    if (sign_of(mant_) == 0) {
        exp_ = 0;
        return;
    }
    const mp_bitcnt_t shift = mpz_scan1(mant_.get_mpz_t(), 0);
    if (shift > 0)
        mpz_fdiv_q_2exp(mant_.get_mpz_t(), mant_.get_mpz_t(), shift);
    exp_ = checked_exp(exp_ + static_cast<std::int64_t>(shift));
}

Dyadic Dyadic::operator-() const {
    Dyadic r;
    r.mant_ = -mant_;
    r.exp_ = exp_;
    return r;
}

Dyadic Dyadic::abs() const { return sign() < 0 ? -*this : *this; }

Dyadic Dyadic::half() const {
    if (is_zero()) return *this;
    Dyadic r;
    r.mant_ = mant_;
    r.exp_ = checked_exp(exp_ - 1);
    return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Align to the smaller exponent; mantissas stay integral.
    const Dyadic* lo = &a;
    const Dyadic* hi = &b;
    if (lo->exp_ > hi->exp_) std::swap(lo, hi);
    const std::int64_t shift = hi->exp_ - lo->exp_;
    if (shift > static_cast<std::int64_t>(1) << 31)
        throw std::overflow_error("dyadic addition: exponent gap too large");
    BigInt m = hi->mant_;
    mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    m += lo->mant_;
    return Dyadic(std::move(m), lo->exp_);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero() || b.is_zero()) return Dyadic();
    // odd * odd = odd, so the product is already canonical.
    Dyadic r;
    r.mant_ = a.mant_ * b.mant_;
    r.exp_ = checked_exp(a.exp_ + b.exp_);
    return r;
}

int Dyadic::compare(const Dyadic& a, const Dyadic& b) {
    const int sa = a.sign();
    const int sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    const int c = compare_abs(a, b);
    return sa > 0 ? c : -c;
}

int Dyadic::compare_abs(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b.is_zero() ? 0 : -1;
    if (b.is_zero()) return 1;
    // Quick exit on magnitude: |m| in [2^(bits-1), 2^bits), so the value
    // lies in [2^(bits-1+e), 2^(bits+e)).
    const std::int64_t ha = static_cast<std::int64_t>(bit_length(a.mant_)) + a.exp_;
    const std::int64_t hb = static_cast<std::int64_t>(bit_length(b.mant_)) + b.exp_;
    if (ha != hb) return ha < hb ? -1 : 1;
    // Same binade: align and compare mantissas.
    if (a.exp_ >= b.exp_) {
        BigInt ma = a.mant_;
        mpz_mul_2exp(ma.get_mpz_t(), ma.get_mpz_t(),
                     static_cast<mp_bitcnt_t>(a.exp_ - b.exp_));
        return mpz_cmpabs(ma.get_mpz_t(), b.mant_.get_mpz_t());
    }
    BigInt mb = b.mant_;
    mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(b.exp_ - a.exp_));
    return mpz_cmpabs(a.mant_.get_mpz_t(), mb.get_mpz_t());
}

double Dyadic::to_double() const {
    if (is_zero()) return 0.0;
    long e2 = 0;
    const double m = mpz_get_d_2exp(&e2, mant_.get_mpz_t());
    const std::int64_t e = exp_ + static_cast<std::int64_t>(e2);
    if (e > std::numeric_limits<int>::max())
        return m > 0 ? std::numeric_limits<double>::infinity()
                     : -std::numeric_limits<double>::infinity();
    if (e < std::numeric_limits<int>::min()) return m > 0 ? 0.0 : -0.0;
    return std::ldexp(m, static_cast<int>(e));
}

mpf_class Dyadic::to_mpf(mp_bitcnt_t prec) const {
    mpf_class r(mant_, prec);
    if (exp_ >= 0)
        mpf_mul_2exp(r.get_mpf_t(), r.get_mpf_t(), static_cast<mp_bitcnt_t>(exp_));
    else
        mpf_div_2exp(r.get_mpf_t(), r.get_mpf_t(), static_cast<mp_bitcnt_t>(-exp_));
    return r;
}

std::string Dyadic::str() const {
    if (exp_ == 0) return to_string(mant_);
    return to_string(mant_) + "*2^" + std::to_string(exp_);
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.str(); }

BigInt parse_bigint(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    BigInt r;
    if (mpz_set_str(r.get_mpz_t(), std::string(text).c_str(), 10) != 0)
        throw std::invalid_argument("bad integer literal: '" + std::string(text) + "'");
    return r;
}

Dyadic Dyadic::parse(std::string_view text) {
    // Trim surrounding whitespace.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty dyadic literal");

    const auto star = text.find('*');
    if (star == std::string_view::npos)
        return Dyadic(parse_bigint(text), 0);

    const std::string_view mant = text.substr(0, star);
    std::string_view rest = text.substr(star + 1);
    if (rest.size() < 3 || rest.substr(0, 2) != "2^")
        throw std::invalid_argument("bad dyadic literal: '" + std::string(text) + "'");
    rest.remove_prefix(2);
    const BigInt e = parse_bigint(rest);
    if (!e.fits_slong_p())
        throw std::invalid_argument("dyadic exponent out of range: '" + std::string(text) + "'");
    return Dyadic(parse_bigint(mant), static_cast<std::int64_t>(e.get_si()));
}

} // namespace sqfe
