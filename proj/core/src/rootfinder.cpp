#include "sqfe/rootfinder.hpp"

#include "sqfe/errors.hpp"
#include "sqfe/interval.hpp"
#include "sqfe/sturm.hpp"

#include "mp_util.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqfe {

std::vector<std::complex<double>> RootSet::as_doubles() const {
    std::vector<std::complex<double>> out;
    out.reserve(roots.size());
    for (const auto& r : roots) out.push_back(r.to_double());
    return out;
}

RootSet RootSet::from_doubles(const std::vector<std::complex<double>>& rs) {
    RootSet s;
    s.precision = 64;
    s.roots.reserve(rs.size());
    for (const auto& z : rs) s.roots.push_back({mpf_class(z.real(), 64), mpf_class(z.imag(), 64)});
    std::sort(s.roots.begin(), s.roots.end(), [](const MpComplex& a, const MpComplex& b) {
        const int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    });
    return s;
}

namespace {

// ---------------------------------------------------------------------------
// Double-precision Aberth pass: cheap global placement of all roots.
// ---------------------------------------------------------------------------

std::vector<std::complex<double>> aberth_double(const IntPolynomial& p, double bound) {
    const int n = p.degree();
    std::vector<double> a(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = p.coeff(i).get_d();
    std::vector<double> da(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) da[static_cast<std::size_t>(i - 1)] = i * a[static_cast<std::size_t>(i)];

    auto eval = [](const std::vector<double>& c, std::complex<double> z) {
        std::complex<double> acc = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
        return acc;
    };

    // Slightly eccentric circle of initial guesses; the jitter breaks the
    // symmetry of even/odd polynomials.
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    const double r0 = std::max(1e-3, 0.5 * bound);
    for (int k = 0; k < n; ++k) {
        const double th = 6.283185307179586 * k / n + 0.397;
        const double rk = r0 * (0.55 + 0.1 * ((k * 7919) % 13) / 13.0);
        z[static_cast<std::size_t>(k)] = std::polar(rk, th);
    }

    const double tol = 1e-13 * std::max(1.0, bound);
    for (int sweep = 0; sweep < 200; ++sweep) {
        double max_w = 0.0;
        for (int i = 0; i < n; ++i) {
            auto& zi = z[static_cast<std::size_t>(i)];
            const std::complex<double> pv = eval(a, zi);
            const std::complex<double> dv = eval(da, zi);
            std::complex<double> newton = (dv == 0.0) ? std::complex<double>(1e-6, 1e-6) : pv / dv;
            std::complex<double> rep = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const std::complex<double> diff = zi - z[static_cast<std::size_t>(j)];
                if (diff != 0.0) rep += 1.0 / diff;
            }
            const std::complex<double> denom = 1.0 - newton * rep;
            const std::complex<double> w = (std::abs(denom) < 1e-300) ? newton : newton / denom;
            zi -= w;
            max_w = std::max(max_w, std::abs(w));
        }
        if (max_w < tol) break;
    }
    return z;
}

// ---------------------------------------------------------------------------
// Multiprecision pass. Real/complex structure is fixed up front (the real
// count comes from an exact Sturm count), so conjugate symmetry is enforced
// by construction and a cluster of real roots can be pulled apart on the
// axis no matter how tight it is.
// ---------------------------------------------------------------------------

struct CF {
    mpf_class re, im;
};

CF cf_sub(const CF& a, const CF& b) { return {a.re - b.re, a.im - b.im}; }
CF cf_mul(const CF& a, const CF& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
mpf_class cf_norm(const CF& a) { return a.re * a.re + a.im * a.im; }
CF cf_div(const CF& a, const CF& b) {
    const mpf_class n = cf_norm(b);
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
CF cf_recip(const CF& a) {
    const mpf_class n = cf_norm(a);
    return {a.re / n, -a.im / n};
}

struct StructuredState {
    std::vector<mpf_class> real;  // real candidates
    std::vector<CF> pair;         // upper-half representatives of conjugate pairs
};

struct MpPoly {
    std::vector<mpf_class> c; // lowest degree first

    static MpPoly from(const IntPolynomial& p, mp_bitcnt_t prec) {
        MpPoly m;
        m.c.reserve(p.coeffs().size());
        for (const auto& a : p.coeffs()) m.c.emplace_back(a, prec);
        return m;
    }

    mpf_class eval(const mpf_class& x, mp_bitcnt_t prec) const {
        mpf_class acc(0, prec);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    CF eval(const CF& z, mp_bitcnt_t prec) const {
        CF acc{mpf_class(0, prec), mpf_class(0, prec)};
        for (std::size_t i = c.size(); i-- > 0;) {
            acc = cf_mul(acc, z);
            acc.re += c[i];
        }
        return acc;
    }
};

struct SweepResult {
    bool all_tight = false;
    bool degenerate = false;
};

class StructuredAberth {
public:
    StructuredAberth(const IntPolynomial& p, mp_bitcnt_t prec)
        : prec_(prec),
          poly_(MpPoly::from(p, prec)),
          dpoly_(MpPoly::from(derivative(p), prec)) {}

    SweepResult sweep(StructuredState& s) {
        SweepResult out;
        out.all_tight = true;
        // Correction must be far below the distance to the nearest other
        // candidate before we call a root resolved.
        for (std::size_t i = 0; i < s.real.size(); ++i) {
            const mpf_class w = real_correction(s, i);
            s.real[i] -= w;
            if (!tight(abs(w), min_dist_real(s, i))) out.all_tight = false;
        }
        for (std::size_t k = 0; k < s.pair.size(); ++k) {
            const CF w = pair_correction(s, k);
            s.pair[k].re -= w.re;
            s.pair[k].im -= w.im;
            if (mpf_sgn(s.pair[k].im.get_mpf_t()) <= 0) {
                // A pair representative may not cross the axis; the real
                // count is exact, so reflect and keep going.
                s.pair[k].im = abs(s.pair[k].im);
                if (mpf_sgn(s.pair[k].im.get_mpf_t()) == 0) {
                    s.pair[k].im = scale_eps();
                    out.degenerate = true;
                }
                out.all_tight = false;
            }
            const mpf_class wn = sqrt_mpf(cf_norm(w));
            if (!tight(wn, min_dist_pair(s, k))) out.all_tight = false;
        }
        return out;
    }

private:
    mp_bitcnt_t prec_;
    MpPoly poly_, dpoly_;

    mpf_class scale_eps() const {
        mpf_class e(1, prec_);
        mpf_div_2exp(e.get_mpf_t(), e.get_mpf_t(), prec_ > 24 ? prec_ - 16 : 8);
        return e;
    }

    static mpf_class sqrt_mpf(const mpf_class& x) {
        mpf_class r(0, x.get_prec());
        if (mpf_sgn(x.get_mpf_t()) > 0) mpf_sqrt(r.get_mpf_t(), x.get_mpf_t());
        return r;
    }

    bool tight(const mpf_class& w, const mpf_class& dist) const {
        // |w| <= 2^-45 * dist
        mpf_class lim = dist;
        mpf_div_2exp(lim.get_mpf_t(), lim.get_mpf_t(), 45);
        return w <= lim;
    }

    mpf_class min_dist_real(const StructuredState& s, std::size_t i) const {
        mpf_class best(-1, prec_);
        const mpf_class& x = s.real[i];
        for (std::size_t j = 0; j < s.real.size(); ++j) {
            if (j == i) continue;
            mpf_class d = abs(x - s.real[j]);
            if (best < 0 || d < best) best = std::move(d);
        }
        for (const auto& z : s.pair) {
            mpf_class d = sqrt_mpf((x - z.re) * (x - z.re) + z.im * z.im);
            if (best < 0 || d < best) best = std::move(d);
        }
        if (best < 0) best = abs(x) + 1;
        return best;
    }

    mpf_class min_dist_pair(const StructuredState& s, std::size_t k) const {
        mpf_class best = 2 * s.pair[k].im; // own conjugate
        const CF& z = s.pair[k];
        for (const auto& x : s.real) {
            mpf_class d = sqrt_mpf((z.re - x) * (z.re - x) + z.im * z.im);
            if (d < best) best = std::move(d);
        }
        for (std::size_t l = 0; l < s.pair.size(); ++l) {
            if (l == k) continue;
            const CF& o = s.pair[l];
            mpf_class d = sqrt_mpf(cf_norm(cf_sub(z, o)));
            if (d < best) best = std::move(d);
            mpf_class dc = sqrt_mpf((z.re - o.re) * (z.re - o.re) + (z.im + o.im) * (z.im + o.im));
            if (dc < best) best = std::move(dc);
        }
        return best;
    }

    mpf_class real_correction(const StructuredState& s, std::size_t i) {
        const mpf_class& x = s.real[i];
        const mpf_class pv = poly_.eval(x, prec_);
        mpf_class dv = dpoly_.eval(x, prec_);
        if (mpf_sgn(dv.get_mpf_t()) == 0) dv = scale_eps();
        const mpf_class newton = pv / dv;
        mpf_class rep(0, prec_);
        for (std::size_t j = 0; j < s.real.size(); ++j) {
            if (j == i) continue;
            mpf_class diff = x - s.real[j];
            if (mpf_sgn(diff.get_mpf_t()) == 0) diff = scale_eps();
            rep += 1 / diff;
        }
        for (const auto& z : s.pair) {
            // 1/(x - z) + 1/(x - conj z) = 2(x - Re z) / |x - z|^2
            const mpf_class dx = x - z.re;
            const mpf_class n = dx * dx + z.im * z.im;
            rep += 2 * dx / n;
        }
        const mpf_class denom = 1 - newton * rep;
        if (mpf_sgn(denom.get_mpf_t()) == 0) return newton;
        return newton / denom;
    }

    CF pair_correction(const StructuredState& s, std::size_t k) {
        const CF& z = s.pair[k];
        const CF pv = poly_.eval(z, prec_);
        CF dv = dpoly_.eval(z, prec_);
        if (mpf_sgn(dv.re.get_mpf_t()) == 0 && mpf_sgn(dv.im.get_mpf_t()) == 0)
            dv.re = scale_eps();
        const CF newton = cf_div(pv, dv);
        CF rep{mpf_class(0, prec_), mpf_class(0, prec_)};
        for (const auto& x : s.real) {
            CF diff{z.re - x, z.im};
            rep = add(rep, cf_recip(diff));
        }
        for (std::size_t l = 0; l < s.pair.size(); ++l) {
            const CF& o = s.pair[l];
            if (l != k) rep = add(rep, cf_recip(cf_sub(z, o)));
            // conjugate partner of o (own conjugate included)
            rep = add(rep, cf_recip(CF{z.re - o.re, z.im + o.im}));
        }
        const CF denom{1 - (newton.re * rep.re - newton.im * rep.im),
                       -(newton.re * rep.im + newton.im * rep.re)};
        if (mpf_sgn(cf_norm(denom).get_mpf_t()) == 0) return newton;
        return cf_div(newton, denom);
    }

    static CF add(const CF& a, const CF& b) { return {a.re + b.re, a.im + b.im}; }
};

StructuredState seed_state(const std::vector<std::complex<double>>& approx, int n_real,
                           double bound, mp_bitcnt_t prec) {
    const int n = static_cast<int>(approx.size());
    const int n_pair = (n - n_real) / 2;
    std::vector<std::complex<double>> sorted = approx;
    // mpf construction from non-finite doubles is undefined; replace any
    // escapee from the double phase with a deterministic circle point.
    for (std::size_t k = 0; k < sorted.size(); ++k)
        if (!std::isfinite(sorted[k].real()) || !std::isfinite(sorted[k].imag()))
            sorted[k] = std::polar(std::max(1e-3, 0.3 * bound), 0.1 + 2.39996 * double(k));
    std::sort(sorted.begin(), sorted.end(), [](auto a, auto b) {
        return std::abs(a.imag()) < std::abs(b.imag());
    });

    StructuredState s;
    std::vector<double> reals;
    for (int i = 0; i < n_real; ++i) reals.push_back(sorted[static_cast<std::size_t>(i)].real());
    std::sort(reals.begin(), reals.end());
    // Coincident seeds would make the repulsion term singular.
    for (std::size_t i = 0; i + 1 < reals.size(); ++i)
        if (reals[i + 1] <= reals[i])
            reals[i + 1] = reals[i] + std::max(1e-18, 1e-15 * (std::abs(reals[i]) + 1.0));
    for (double x : reals) s.real.emplace_back(x, prec);

    std::vector<std::complex<double>> ups;
    for (int i = n_real; i < n; ++i) {
        const auto z = sorted[static_cast<std::size_t>(i)];
        if (z.imag() > 0) ups.push_back(z);
    }
    std::sort(ups.begin(), ups.end(), [](auto a, auto b) { return a.real() < b.real(); });
    while (static_cast<int>(ups.size()) > n_pair) ups.pop_back();
    int fill = 0;
    while (static_cast<int>(ups.size()) < n_pair) {
        const double th = 0.5 + 0.9 * fill;
        ups.push_back(std::polar(std::max(1e-3, 0.4 * bound), 0.2 + 0.35 * th));
        if (ups.back().imag() <= 0) ups.back() = {ups.back().real(), std::abs(ups.back().imag()) + 1e-3};
        ++fill;
    }
    for (const auto& z : ups) {
        CF c{mpf_class(z.real(), prec), mpf_class(z.imag(), prec)};
        if (mpf_sgn(c.im.get_mpf_t()) <= 0) c.im = mpf_class(1e-9, prec);
        s.pair.push_back(std::move(c));
    }
    return s;
}

// Yun's square-free decomposition: element k-1 collects the factors of
// multiplicity k. Most inputs are already square free and return {f}.
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& f) {
    std::vector<IntPolynomial> out;
    const IntPolynomial fp = derivative(f);
    IntPolynomial a = gcd(f, fp);
    if (a.degree() == 0) {
        out.push_back(primitive_part(f));
        return out;
    }
    IntPolynomial b = divide_exact(f, a);
    IntPolynomial d = divide_exact(fp, a) - derivative(b);
    int guard = f.degree() + 2;
    while (b.degree() > 0) {
        if (--guard < 0) throw invariant_error("square-free decomposition did not terminate");
        IntPolynomial p = gcd(b, d);
        out.push_back(p);
        b = divide_exact(b, p);
        d = divide_exact(d, p) - derivative(b);
    }
    return out;
}

struct FoundRoots {
    std::vector<MpComplex> roots;
    mp_bitcnt_t precision;
};

FoundRoots roots_of_squarefree(const IntPolynomial& q, const std::string& label) {
    const int n = q.degree();
    const Dyadic bound_dy = root_bound(q);
    const double bound = bound_dy.to_double();

    if (n == 1) {
        // Exact up to one rounding: -a0/a1.
        const mp_bitcnt_t prec = 192;
        mpf_class r(0, prec);
        r = mpf_class(q.coeff(0), prec) / mpf_class(q.coeff(1), prec);
        r = -r;
        return {{MpComplex{std::move(r), mpf_class(0, prec)}}, prec};
    }

    const Interval whole(-bound_dy, bound_dy);
    const int n_real = sturm_count(q, whole);
    if ((n - n_real) % 2 != 0)
        throw invariant_error("real root count parity mismatch for " + label);

    const auto approx = aberth_double(q, bound);

    for (mp_bitcnt_t prec = 192; prec <= 4096; prec *= 2) {
        StructuredState s = seed_state(approx, n_real, bound, prec);
        StructuredAberth it(q, prec);
        int stable = 0;
        bool ok = false;
        const int max_sweeps = 360;
        for (int sweep = 0; sweep < max_sweeps; ++sweep) {
            const SweepResult r = it.sweep(s);
            if (r.degenerate) {
                stable = 0;
                continue;
            }
            stable = r.all_tight ? stable + 1 : 0;
            if (stable >= 2) {
                ok = true;
                break;
            }
        }
        if (!ok) continue; // escalate precision

        FoundRoots f;
        f.precision = prec;
        for (const auto& x : s.real) f.roots.push_back({x, mpf_class(0, prec)});
        for (const auto& z : s.pair) {
            f.roots.push_back({z.re, z.im});
            f.roots.push_back({z.re, -z.im});
        }
        return f;
    }
    throw convergence_error("root iteration did not converge for polynomial " + label);
}

double scaled_residual(const IntPolynomial& p, const MpComplex& r, mp_bitcnt_t prec) {
    const MpPoly mp = MpPoly::from(p, prec);
    const CF z{mpf_class(r.re, prec), mpf_class(r.im, prec)};
    const CF v = mp.eval(z, prec);
    const double pv = detail::sqrt_to_double(cf_norm(v));

    double norm2 = 0.0;
    for (const auto& a : p.coeffs()) {
        const double ad = a.get_d();
        norm2 += ad * ad;
    }
    const double scale = std::sqrt(norm2);
    const double zabs = std::max(1.0, detail::sqrt_to_double(cf_norm(z)));
    return pv / (scale * std::pow(zabs, p.degree()));
}

} // namespace

RootSet complex_roots(const IntPolynomial& p) {
    if (p.degree() < 1)
        throw std::invalid_argument("complex_roots requires degree >= 1");

    const std::string label = p.str();
    const auto parts = squarefree_decomposition(p);

    RootSet set;
    set.precision = 64;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k].degree() < 1) continue;
        FoundRoots f = roots_of_squarefree(parts[k], label);
        set.precision = std::max(set.precision, f.precision);
        for (const auto& r : f.roots)
            for (std::size_t copy = 0; copy <= k; ++copy) set.roots.push_back(r);
    }
    if (static_cast<int>(set.roots.size()) != p.degree())
        throw invariant_error("root multiset size mismatch for " + label);

    double worst = 0.0;
    for (const auto& r : set.roots)
        worst = std::max(worst, scaled_residual(p, r, set.precision));
    set.residual_bound = worst;
    if (!(worst < 1e-8))
        throw convergence_error("root residual " + std::to_string(worst) +
                                " above threshold for polynomial " + label);

    std::sort(set.roots.begin(), set.roots.end(), [](const MpComplex& a, const MpComplex& b) {
        const int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    });
    return set;
}

} // namespace sqfe
