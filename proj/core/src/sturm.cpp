#include "sqfe/sturm.hpp"

#include "sqfe/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace sqfe {

namespace {

// Divide by the (positive) content only; unlike primitive_part this never
// flips signs, which the variation count depends on.
IntPolynomial reduce_by_content(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    const BigInt c = content(p);
    if (c == 1) return p;
    std::vector<BigInt> out;
    out.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
        out.push_back(std::move(q));
    }
    return IntPolynomial(std::move(out));
}

} // namespace

SturmSequence::SturmSequence(const IntPolynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
    chain_.push_back(g);
    IntPolynomial d = derivative(g);
    if (d.is_zero()) return;
    chain_.push_back(std::move(d));
    while (chain_.back().degree() > 0) {
        const IntPolynomial& a = chain_[chain_.size() - 2];
        const IntPolynomial& b = chain_.back();
        const int delta = a.degree() - b.degree();
        IntPolynomial r = pseudo_remainder(a, b);
        if (r.is_zero()) break; // g was not square free; chain ends early
        // prem scales by lc(b)^(delta+1). When that factor is positive the
        // Sturm step is -prem; when negative, prem already carries the sign.
        const bool positive_scale = sign_of(b.leading()) > 0 || (delta + 1) % 2 == 0;
        chain_.push_back(reduce_by_content(positive_scale ? -r : r));
    }
}

int SturmSequence::variations_at(const Dyadic& x) const {
    int count = 0;
    int prev = 0;
    for (const auto& p : chain_) {
        const int s = sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int sturm_count(const SturmSequence& seq, const IntPolynomial& g, const Interval& J) {
    (void)g;
    return seq.variations_at(J.lo) - seq.variations_at(J.hi);
}

int sturm_count(const IntPolynomial& g, const Interval& J) {
    if (g.is_zero()) throw std::invalid_argument("sturm_count of the zero polynomial");
    if (g.degree() == 0) return 0;
    const SturmSequence seq(g);
    return sturm_count(seq, g, J);
}

namespace {

struct IsolateCtx {
    const SturmSequence& seq;
    const IntPolynomial& g;
    std::vector<Interval>& out;
};

// Emits one isolating interval per root of g in the open interval (a, b).
// va/vb are the cached variation counts at the endpoints.
void isolate_rec(IsolateCtx& ctx, const Dyadic& a, int va, const Dyadic& b, int vb) {
    const bool root_at_b = sign_at(ctx.g, b) == 0;
    const int n = va - vb - (root_at_b ? 1 : 0);
    if (n <= 0) return;
    if (n == 1 && !root_at_b && sign_at(ctx.g, a) != 0) {
        ctx.out.emplace_back(a, b);
        return;
    }
    const Dyadic m = (a + b).half();
    if (sign_at(ctx.g, m) == 0) ctx.out.emplace_back(m, m);
    const int vm = ctx.seq.variations_at(m);
    isolate_rec(ctx, a, va, m, vm);
    isolate_rec(ctx, m, vm, b, vb);
}

} // namespace

std::vector<Interval> sturm_isolate(const IntPolynomial& g, const Interval& I) {
    if (g.is_zero()) throw std::invalid_argument("sturm_isolate of the zero polynomial");
    std::vector<Interval> out;
    if (g.degree() == 0) return out;
    if (sign_at(g, I.lo) == 0) out.emplace_back(I.lo, I.lo);
    if (!(I.lo == I.hi) && sign_at(g, I.hi) == 0) out.emplace_back(I.hi, I.hi);
    if (I.lo == I.hi) return out;

    const SturmSequence seq(g);
    IsolateCtx ctx{seq, g, out};
    isolate_rec(ctx, I.lo, seq.variations_at(I.lo), I.hi, seq.variations_at(I.hi));

    std::sort(out.begin(), out.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return out;
}

} // namespace sqfe
