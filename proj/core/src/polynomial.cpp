#include "sqfe/polynomial.hpp"

#include "sqfe/errors.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sqfe {

namespace {
const BigInt kZero = 0;
} // namespace

void IntPolynomial::trim() {
    while (!c_.empty() && sign_of(c_.back()) == 0) c_.pop_back();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPolynomial IntPolynomial::constant(BigInt v) {
    IntPolynomial p;
    if (sign_of(v) != 0) p.c_.push_back(std::move(v));
    return p;
}

const BigInt& IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

const BigInt& IntPolynomial::leading() const {
    if (c_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
    return c_.back();
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const BigInt& k, const IntPolynomial& p) {
    if (sign_of(k) == 0) return IntPolynomial();
    IntPolynomial r = p;
    for (auto& v : r.c_) v *= k;
    return r;
}

IntPolynomial IntPolynomial::shifted_up(unsigned k) const {
    if (is_zero() || k == 0) return *this;
    IntPolynomial r;
    r.c_.assign(k, BigInt(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ',';
        s += to_string(c_[i]);
    }
    return s;
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
    std::vector<BigInt> c;
    std::size_t start = 0;
    bool any = false;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            std::string_view tok = text.substr(start, i - start);
            while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
                tok.remove_prefix(1);
            while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
                tok.remove_suffix(1);
            if (tok.empty())
                throw std::invalid_argument("empty coefficient in polynomial literal");
            c.push_back(parse_bigint(tok));
            any = true;
            start = i + 1;
        }
    }
    if (!any) throw std::invalid_argument("empty polynomial literal");
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& a = coeff(i);
        if (sign_of(a) == 0) continue;
        BigInt mag = a < 0 ? BigInt(-a) : a;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        const bool unit = mag == 1;
        if (i == 0 || !unit) os << mag.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.str(); }

Dyadic evaluate(const IntPolynomial& f, const Dyadic& x) {
    Dyadic acc;
    for (int i = f.degree(); i >= 0; --i) acc = acc * x + Dyadic(f.coeff(i));
    return acc;
}

int sign_at(const IntPolynomial& f, const Dyadic& x) { return evaluate(f, x).sign(); }

IntPolynomial derivative(const IntPolynomial& f) {
    if (f.degree() < 1) return IntPolynomial();
    std::vector<BigInt> c(static_cast<std::size_t>(f.degree()));
    for (int i = 1; i <= f.degree(); ++i)
        c[static_cast<std::size_t>(i - 1)] = BigInt(i) * f.coeff(i);
    return IntPolynomial(std::move(c));
}

TaylorExpansion taylor_expansion(const IntPolynomial& f, const Dyadic& center) {
    TaylorExpansion t;
    t.center = center;
    const int d = f.degree();
    if (d < 0) {
        t.coeffs.assign(1, Dyadic());
        return t;
    }
    std::vector<Dyadic> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = Dyadic(f.coeff(i));
    // Repeated synthetic division by (X - center): after pass k, c[k] holds
    // f^(k)(center)/k!.
    for (int k = 0; k <= d; ++k)
        for (int j = d - 1; j >= k; --j)
            c[static_cast<std::size_t>(j)] += center * c[static_cast<std::size_t>(j) + 1];
    t.coeffs = std::move(c);
    return t;
}

BigInt content(const IntPolynomial& f) {
    BigInt g = 0;
    for (const auto& a : f.coeffs()) {
        g = big_gcd(g, a);
        if (g == 1) break;
    }
    return g;
}

IntPolynomial primitive_part(const IntPolynomial& f) {
    if (f.is_zero()) return f;
    BigInt c = content(f);
    if (sign_of(f.leading()) < 0) c = -c;
    std::vector<BigInt> out;
    out.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
        out.push_back(std::move(q));
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("pseudo-division by zero polynomial");
    IntPolynomial r = a;
    const int db = b.degree();
    const BigInt& lb = b.leading();
    int e = a.degree() - db + 1;
    while (!r.is_zero() && r.degree() >= db) {
        const BigInt lr = r.leading();
        r = lb * r - lr * b.shifted_up(static_cast<unsigned>(r.degree() - db));
        --e;
    }
    // Keep the multiplier exactly lc(b)^(deg a - deg b + 1) even when the
    // degree drops by more than one per step.
    while (e-- > 0) r = lb * r;
    return r;
}

IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (num.is_zero()) return IntPolynomial();
    if (num.degree() < den.degree())
        throw invariant_error("divide_exact: degree of numerator below divisor");
    std::vector<BigInt> q(static_cast<std::size_t>(num.degree() - den.degree()) + 1, BigInt(0));
    IntPolynomial r = num;
    const BigInt& ld = den.leading();
    while (!r.is_zero() && r.degree() >= den.degree()) {
        if (!mpz_divisible_p(r.leading().get_mpz_t(), ld.get_mpz_t()))
            throw invariant_error("divide_exact: leading coefficient not divisible");
        BigInt t;
        mpz_divexact(t.get_mpz_t(), r.leading().get_mpz_t(), ld.get_mpz_t());
        const int k = r.degree() - den.degree();
        q[static_cast<std::size_t>(k)] = t;
        r = r - (t * den).shifted_up(static_cast<unsigned>(k));
    }
    if (!r.is_zero()) throw invariant_error("divide_exact: nonzero remainder");
    return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);

    IntPolynomial A = primitive_part(a);
    IntPolynomial B = primitive_part(b);
    if (A.degree() < B.degree()) std::swap(A, B);

    // Subresultant PRS (Brown). Divisors g*h^delta keep coefficients small
    // while all arithmetic stays in Z[X].
    BigInt g = 1, h = 1;
    while (true) {
        const int delta = A.degree() - B.degree();
        IntPolynomial R = pseudo_remainder(A, B);
        if (R.is_zero()) break;
        if (R.degree() == 0) return IntPolynomial({1});
        BigInt divisor = g;
        for (int i = 0; i < delta; ++i) divisor *= h;
        A = B;
        std::vector<BigInt> next;
        next.reserve(R.coeffs().size());
        for (const auto& v : R.coeffs()) {
            BigInt q;
            mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), divisor.get_mpz_t());
            next.push_back(std::move(q));
        }
        B = IntPolynomial(std::move(next));
        g = A.leading();
        if (delta == 0) {
            // h unchanged
        } else {
            // h = g^delta / h^(delta-1), exact by the subresultant theory.
            BigInt num = 1;
            for (int i = 0; i < delta; ++i) num *= g;
            BigInt den = 1;
            for (int i = 0; i < delta - 1; ++i) den *= h;
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
    return primitive_part(B);
}

IntPolynomial square_free_part(const IntPolynomial& f) {
    if (f.is_zero())
        throw std::invalid_argument("square-free part of the zero polynomial");
    if (f.degree() == 0) return IntPolynomial({1});
    const IntPolynomial d = gcd(f, derivative(f));
    return primitive_part(divide_exact(f, d));
}

IntPolynomial coprime_part(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero())
        throw std::invalid_argument("coprime part of the zero polynomial");
    const IntPolynomial d = gcd(p, q);
    return primitive_part(divide_exact(p, d));
}

unsigned bit_length_L(const IntPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("bit length of the zero polynomial");
    std::size_t best = 0;
    for (const auto& a : f.coeffs()) best = std::max(best, bit_length(a));
    return static_cast<unsigned>(best);
}

Dyadic root_bound(const IntPolynomial& f) {
    if (f.degree() < 1)
        throw std::invalid_argument("root bound requires degree >= 1");
    // Cauchy: all roots have |z| < 1 + max|a_i| / |a_d|, rounded up to the
    // next power of two; capped by 2^L which also bounds every root.
    BigInt max_abs = 0;
    for (int i = 0; i < f.degree(); ++i) {
        BigInt m = f.coeff(i) < 0 ? BigInt(-f.coeff(i)) : f.coeff(i);
        if (m > max_abs) max_abs = std::move(m);
    }
    BigInt lead = f.leading() < 0 ? BigInt(-f.leading()) : f.leading();
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), max_abs.get_mpz_t(), lead.get_mpz_t());
    const BigInt cauchy = 1 + q;
    // 2^ceil(log2(cauchy))
    std::size_t bits = bit_length(cauchy);
    BigInt pow = big_pow2(static_cast<unsigned long>(bits));
    if (pow == 2 * cauchy) pow = cauchy; // cauchy was itself a power of two
    const BigInt cap = big_pow2(bit_length_L(f));
    return Dyadic(pow < cap ? pow : cap);
}

} // namespace sqfe
