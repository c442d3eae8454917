#pragma once

#include "sqfe/bigint.hpp"
#include "sqfe/dyadic.hpp"

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sqfe {

/// Univariate polynomial over Z, dense, lowest degree first.
/// The zero polynomial has an empty coefficient vector and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(BigInt v);
    /// The monomial X.
    static IntPolynomial x() { return IntPolynomial({0, 1}); }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of X^i, zero outside the stored range.
    const BigInt& coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& leading() const;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const BigInt& k, const IntPolynomial& p);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.c_ == b.c_;
    }

    /// Multiply by X^k.
    IntPolynomial shifted_up(unsigned k) const;

    /// Comma-separated decimal coefficients, lowest degree first: `-2,0,1`.
    std::string str() const;
    static IntPolynomial parse(std::string_view text);
    /// Human-readable form such as `x^2 - 2` (display only).
    std::string pretty() const;

    friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

private:
    std::vector<BigInt> c_;

    void trim();
};

/// Exact f(x) by Horner's rule.
Dyadic evaluate(const IntPolynomial& f, const Dyadic& x);
/// Sign of f(x) without keeping the value.
int sign_at(const IntPolynomial& f, const Dyadic& x);

IntPolynomial derivative(const IntPolynomial& f);

/// Coefficients of f(center + y) in y; coeffs[i] = f^(i)(center)/i!.
/// Computed by iterated synthetic division, so the factorial division never
/// happens explicitly and every coefficient is an exact dyadic.
struct TaylorExpansion {
    Dyadic center;
    std::vector<Dyadic> coeffs;
};
TaylorExpansion taylor_expansion(const IntPolynomial& f, const Dyadic& center);

/// Content (gcd of coefficients), nonnegative; 0 for the zero polynomial.
BigInt content(const IntPolynomial& f);
/// f divided by its content, sign fixed so the leading coefficient is positive.
IntPolynomial primitive_part(const IntPolynomial& f);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b. pre: b nonzero.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);
/// Exact quotient of num by den; throws invariant_error when den does not
/// divide num in Z[X].
IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den);

/// Primitive gcd with positive leading coefficient, by the subresultant
/// polynomial remainder sequence. Errors when both inputs are zero.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// f / gcd(f, f'): same real roots as f, all simple. Primitive, positive
/// leading coefficient. pre: f nonzero.
IntPolynomial square_free_part(const IntPolynomial& f);

/// p / gcd(p, q) for square-free p: the part of p sharing no root with q.
IntPolynomial coprime_part(const IntPolynomial& p, const IntPolynomial& q);

/// Max bit length over |coefficients|. pre: f nonzero.
unsigned bit_length_L(const IntPolynomial& f);

/// Power-of-two B with all complex roots of f inside [-B, B]:
/// min(2^L, rounded-up Cauchy bound). pre: degree >= 1.
Dyadic root_bound(const IntPolynomial& f);

} // namespace sqfe
