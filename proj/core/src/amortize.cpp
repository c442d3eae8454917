#include "sqfe/amortize.hpp"

#include "sqfe/errors.hpp"
#include "mp_util.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sqfe {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double harmonic_mean(std::span<const double> z) {
    if (z.empty()) throw std::invalid_argument("harmonic mean of an empty list");
    double recip = 0.0;
    for (double v : z) {
        if (!(v > 0.0))
            throw std::invalid_argument("harmonic mean requires strictly positive entries");
        recip += 1.0 / v;
    }
    return static_cast<double>(z.size()) / recip;
}

double sigma(double x, const RootSet& roots) {
    double s = 0.0;
    for (const auto& r : roots.roots) {
        const auto z = r.to_double();
        const double d = std::hypot(x - z.real(), z.imag());
        if (d == 0.0) throw std::domain_error("sigma evaluated at a root");
        s += 1.0 / d;
    }
    return s;
}

double stopping_G(double x, const StoppingModel& m) {
    const double sf = sigma(x, m.roots_f);
    const double sfp = sigma(x, m.roots_fp);
    const double g0 = sf == 0.0 ? kInf : 2.0 / (3.0 * sf);
    const double g1 = sfp == 0.0 ? kInf : 2.0 / (3.0 * sfp);
    return std::max(g0, g1);
}

StoppingModel make_stopping_model(const IntPolynomial& f) {
    if (f.degree() < 1)
        throw std::invalid_argument("stopping model requires degree >= 1");
    StoppingModel m;
    const IntPolynomial g = square_free_part(f);
    const IntPolynomial h = coprime_part(square_free_part(derivative(f)), g);
    m.roots_f = complex_roots(g);
    m.roots_fp = h.degree() >= 1 ? complex_roots(h) : RootSet{};
    const Dyadic b = root_bound(f);
    m.interval = Interval(-b, b);
    m.degree_d = static_cast<unsigned>(f.degree());
    m.bits_L = bit_length_L(f);
    return m;
}

// ---------------------------------------------------------------------------
// Analysis engine, generic over the abscissa scalar. The double instantiation
// covers ordinary inputs; the mpf one takes over when the root geometry has
// features below double resolution (Mignotte-style clusters).
// ---------------------------------------------------------------------------

namespace {

template <class Real>
struct Ops;

template <>
struct Ops<double> {
    static double from_dyadic(const Dyadic& d, mp_bitcnt_t) { return d.to_double(); }
    static double from_mpf(const mpf_class& v, mp_bitcnt_t) { return v.get_d(); }
    static double to_double(double x) { return x; }
    static double sqrt_of(double sq) { return std::sqrt(sq); }
    static double log_of(double v) { return std::log(v); }
    static int sign_cmp(double a, double b) { return a < b ? -1 : (a > b ? 1 : 0); }
};

template <>
struct Ops<mpf_class> {
    static mpf_class from_dyadic(const Dyadic& d, mp_bitcnt_t p) { return d.to_mpf(p); }
    static mpf_class from_mpf(const mpf_class& v, mp_bitcnt_t p) { return mpf_class(v, p); }
    static double to_double(const mpf_class& x) { return x.get_d(); }
    static double sqrt_of(const mpf_class& sq) { return detail::sqrt_to_double(sq); }
    static double log_of(const mpf_class& v) { return detail::log_to_double(v); }
    static int sign_cmp(const mpf_class& a, const mpf_class& b) { return cmp(a, b); }
};

// Conjugate-collapsed root site: im >= 0, mult counts the represented roots
// (2 for a conjugate pair).
template <class Real>
struct Site {
    Real re{};
    Real im{};
    int mult = 1;
    bool in_f = true;
};

template <class Real>
struct CellSeg {
    bool empty = true;
    Real lo{};
    Real hi{};
    std::size_t site = 0;
};

template <class Real>
class Engine {
public:
    Engine(const StoppingModel& m, mp_bitcnt_t prec) : prec_(prec) {
        append_sites(m.roots_f, true);
        append_sites(m.roots_fp, false);
        lo_ = Ops<Real>::from_dyadic(m.interval.lo, prec);
        hi_ = Ops<Real>::from_dyadic(m.interval.hi, prec);
        compute_cells();
    }

    const std::vector<Site<Real>>& sites() const { return sites_; }
    const std::vector<CellSeg<Real>>& cells() const { return cells_; }

    // Sigma over one side of the model; +inf exactly at that side's roots.
    double sigma_side(const Real& x, bool f_side) const {
        double s = 0.0;
        for (const auto& st : sites_) {
            if (st.in_f != f_side) continue;
            Real dx = x - st.re;
            Real sq = dx * dx + st.im * st.im;
            const double d = Ops<Real>::sqrt_of(sq);
            if (d == 0.0) return kInf;
            s += static_cast<double>(st.mult) / d;
        }
        return s;
    }

    double integrand_G(const Real& x) const {
        return std::min(3.0 * sigma_side(x, true), 3.0 * sigma_side(x, false));
    }

    double integral_G() {
        std::vector<Real> cuts = breakpoints();
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            total += integrate([this](const Real& x) { return integrand_G(x); }, cuts[i],
                               cuts[i + 1]);
        check_quadrature(total);
        return total;
    }

    double integral_F() {
        double total = 0.0;
        for (const auto& c : cells_) {
            if (c.empty) continue;
            const bool owner_f = sites_[c.site].in_f;
            // F picks the opposite side's Sigma on this cell.
            auto f = [this, owner_f](const Real& x) { return 3.0 * sigma_side(x, !owner_f); };
            std::vector<Real> cuts;
            cuts.push_back(c.lo);
            for (const auto& st : sites_)
                if (is_zero(st.im) && st.re > c.lo && st.re < c.hi) cuts.push_back(st.re);
            cuts.push_back(c.hi);
            std::sort(cuts.begin(), cuts.end(),
                      [](const Real& a, const Real& b) { return Ops<Real>::sign_cmp(a, b) < 0; });
            for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
                total += integrate(f, cuts[i], cuts[i + 1]);
        }
        check_quadrature(total);
        return total;
    }

    double closed_form() const {
        double total = 0.0;
        for (std::size_t i = 0; i < sites_.size(); ++i) {
            const Site<Real>& st = sites_[i];
            const CellSeg<Real>& c = cells_[i];
            double term = 0.0;
            if (is_zero(st.im)) {
                if (c.empty) {
                    // only possible for a real root outside the interval
                    term += log_integral(st.re, lo_, hi_);
                } else {
                    term += log_integral(st.re, lo_, c.lo);
                    term += log_integral(st.re, c.hi, hi_);
                }
            } else if (c.empty) {
                term += asinh_integral(st, lo_, hi_);
            } else {
                term += asinh_integral(st, lo_, c.lo);
                term += asinh_integral(st, c.hi, hi_);
            }
            total += st.mult * term;
        }
        return total;
    }

    double unresolved_error() const { return unresolved_; }

private:
    mp_bitcnt_t prec_;
    std::vector<Site<Real>> sites_;
    std::vector<CellSeg<Real>> cells_;
    Real lo_{}, hi_{};
    double unresolved_ = 0.0;

    static bool is_zero(const Real& v) { return Ops<Real>::sign_cmp(v, Real(0)) == 0; }

    void append_sites(const RootSet& rs, bool in_f) {
        // Group exactly equal (re, |im|) pairs; conjugates collapse to one
        // site of multiplicity two.
        std::vector<MpComplex> sorted = rs.roots;
        for (auto& r : sorted)
            if (mpf_sgn(r.im.get_mpf_t()) < 0) r.im = -r.im;
        std::sort(sorted.begin(), sorted.end(), [](const MpComplex& a, const MpComplex& b) {
            const int c = cmp(a.re, b.re);
            if (c != 0) return c < 0;
            return cmp(a.im, b.im) < 0;
        });
        for (std::size_t i = 0; i < sorted.size();) {
            std::size_t j = i;
            while (j < sorted.size() && cmp(sorted[j].re, sorted[i].re) == 0 &&
                   cmp(sorted[j].im, sorted[i].im) == 0)
                ++j;
            Site<Real> st;
            st.re = Ops<Real>::from_mpf(sorted[i].re, prec_);
            st.im = Ops<Real>::from_mpf(sorted[i].im, prec_);
            st.mult = static_cast<int>(j - i);
            st.in_f = in_f;
            sites_.push_back(std::move(st));
            i = j;
        }
    }

    // Bisector of sites i and j on the real axis, in the numerically stable
    // factored form (r_i + r_j)/2 + (im_j^2 - im_i^2) / (2 (r_j - r_i)).
    Real bisector(const Site<Real>& a, const Site<Real>& b) const {
        Real dr = b.re - a.re;
        Real num = b.im * b.im - a.im * a.im;
        Real half = (a.re + b.re) / 2;
        return Real(half + num / (2 * dr));
    }

    void compute_cells() {
        cells_.clear();
        cells_.reserve(sites_.size());
        for (std::size_t i = 0; i < sites_.size(); ++i) {
            CellSeg<Real> cell;
            cell.site = i;
            Real L = lo_;
            Real H = hi_;
            bool empty = false;
            for (std::size_t j = 0; j < sites_.size() && !empty; ++j) {
                if (j == i) continue;
                const Site<Real>& si = sites_[i];
                const Site<Real>& sj = sites_[j];
                const int dir = Ops<Real>::sign_cmp(sj.re, si.re);
                if (dir == 0) {
                    // Same abscissa: the smaller |im| dominates everywhere.
                    Real di = si.im * si.im;
                    Real dj = sj.im * sj.im;
                    if (Ops<Real>::sign_cmp(dj, di) < 0) empty = true;
                    continue;
                }
                Real bp = bisector(si, sj);
                if (dir > 0) {
                    if (Ops<Real>::sign_cmp(bp, H) < 0) H = bp;
                } else {
                    if (Ops<Real>::sign_cmp(bp, L) > 0) L = bp;
                }
                if (Ops<Real>::sign_cmp(L, H) > 0) empty = true;
            }
            cell.empty = empty;
            if (!empty) {
                cell.lo = L;
                cell.hi = H;
            }
            cells_.push_back(std::move(cell));
        }
    }

    std::vector<Real> breakpoints() const {
        std::vector<Real> cuts;
        cuts.push_back(lo_);
        cuts.push_back(hi_);
        for (const auto& c : cells_) {
            if (c.empty) continue;
            cuts.push_back(c.lo);
            cuts.push_back(c.hi);
        }
        for (const auto& st : sites_)
            if (is_zero(st.im) && st.re > lo_ && st.re < hi_) cuts.push_back(st.re);
        std::sort(cuts.begin(), cuts.end(),
                  [](const Real& a, const Real& b) { return Ops<Real>::sign_cmp(a, b) < 0; });
        return cuts;
    }

    // integral over [a, b] of 3/|x - alpha| for a real root alpha lying
    // outside (a, b); zero-width spans contribute nothing.
    double log_integral(const Real& alpha, const Real& a, const Real& b) const {
        if (Ops<Real>::sign_cmp(a, b) >= 0) return 0.0;
        Real da = alpha - a;
        if (Ops<Real>::sign_cmp(da, Real(0)) < 0) da = Real(-da);
        Real db = alpha - b;
        if (Ops<Real>::sign_cmp(db, Real(0)) < 0) db = Real(-db);
        // One endpoint is nearer to alpha than the other; the integral is
        // 3 (ln far - ln near).
        const double la = Ops<Real>::log_of(da);
        const double lb = Ops<Real>::log_of(db);
        return 3.0 * std::abs(la - lb);
    }

    // integral over [a, b] of 3/|x - alpha| for a complex site, via the
    // exact arcsinh antiderivative.
    double asinh_integral(const Site<Real>& st, const Real& a, const Real& b) const {
        if (Ops<Real>::sign_cmp(a, b) >= 0) return 0.0;
        Real ta = (a - st.re) / st.im;
        Real tb = (b - st.re) / st.im;
        return 3.0 * (std::asinh(Ops<Real>::to_double(tb)) -
                      std::asinh(Ops<Real>::to_double(ta)));
    }

    template <class F>
    double integrate(F f, const Real& a, const Real& b) {
        if (Ops<Real>::sign_cmp(a, b) >= 0) return 0.0;
        Real m = Real((a + b) / 2);
        const double fa = f(a);
        const double fm = f(m);
        const double fb = f(b);
        const double w = Ops<Real>::to_double(Real(b - a));
        const double s = simpson(w, fa, fm, fb);
        return adapt(f, a, m, b, fa, fm, fb, s, 0);
    }

    static double simpson(double w, double fa, double fm, double fb) {
        return (fa + 4.0 * fm + fb) * (w / 6.0);
    }

    template <class F>
    double adapt(F f, const Real& a, const Real& m, const Real& b, double fa, double fm,
                 double fb, double whole, int depth) {
        Real lm = Real((a + m) / 2);
        Real rm = Real((m + b) / 2);
        const double flm = f(lm);
        const double frm = f(rm);
        const double wl = Ops<Real>::to_double(Real(m - a));
        const double wr = Ops<Real>::to_double(Real(b - m));
        const double sl = simpson(wl, fa, flm, fm);
        const double sr = simpson(wr, fm, frm, fb);
        const double err = (sl + sr - whole) / 15.0;
        constexpr double kRelTol = 1e-7;
        constexpr int kMaxDepth = 1600;
        if (std::abs(err) <= kRelTol * std::abs(sl + sr) || depth >= kMaxDepth) {
            if (depth >= kMaxDepth && std::abs(err) > kRelTol * std::abs(sl + sr))
                unresolved_ += std::abs(err);
            return sl + sr + err;
        }
        return adapt(f, a, lm, m, fa, flm, fm, sl, depth + 1) +
               adapt(f, m, rm, b, fm, frm, fb, sr, depth + 1);
    }

    void check_quadrature(double total) const {
        if (unresolved_ > 1e-3 * (std::abs(total) + 1.0))
            throw convergence_error("adaptive quadrature failed to converge");
    }
};

// Geometry finer than ~2^-30 of its own scale needs multiprecision
// abscissae; everything else runs in plain doubles.
bool needs_mp(const StoppingModel& m) {
    struct P {
        mpf_class re, im;
    };
    std::vector<P> pts;
    auto add = [&](const RootSet& rs) {
        for (const auto& r : rs.roots) {
            mpf_class im = r.im;
            if (mpf_sgn(im.get_mpf_t()) < 0) im = -im;
            pts.push_back({r.re, im});
        }
    };
    add(m.roots_f);
    add(m.roots_fp);
    if (pts.size() < 2) return false;

    mpf_class scale(1, 128);
    for (const auto& p : pts) {
        mpf_class a = abs(p.re) + p.im;
        if (a > scale) scale = a;
    }
    mpf_class thresh = scale;
    mpf_div_2exp(thresh.get_mpf_t(), thresh.get_mpf_t(), 30);

    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (mpf_sgn(pts[i].im.get_mpf_t()) != 0 && pts[i].im < thresh) return true;
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            mpf_class dre = pts[i].re - pts[j].re;
            mpf_class dim = pts[i].im - pts[j].im;
            mpf_class d2 = dre * dre + dim * dim;
            if (mpf_sgn(d2.get_mpf_t()) == 0) continue; // duplicate root, fine
            if (d2 < thresh * thresh) return true;
        }
    }
    return false;
}

mp_bitcnt_t engine_precision(const StoppingModel& m) {
    return std::max<mp_bitcnt_t>(m.roots_f.precision, m.roots_fp.precision) + 128;
}

struct EngineResults {
    double iG = 0.0, iF = 0.0, closed = 0.0;
};

template <class Real>
EngineResults run_engine(const StoppingModel& m, mp_bitcnt_t prec) {
    Engine<Real> e(m, prec);
    EngineResults r;
    r.iG = e.integral_G();
    r.iF = e.integral_F();
    r.closed = e.closed_form();
    return r;
}

EngineResults run_engine_auto(const StoppingModel& m) {
    if (needs_mp(m)) return run_engine<mpf_class>(m, engine_precision(m));
    return run_engine<double>(m, 64);
}

} // namespace

double integral_bound_G(const StoppingModel& m) {
    if (needs_mp(m)) {
        Engine<mpf_class> e(m, engine_precision(m));
        return std::max(1.0, e.integral_G());
    }
    Engine<double> e(m, 64);
    return std::max(1.0, e.integral_G());
}

double integral_bound_F(const StoppingModel& m) {
    if (needs_mp(m)) {
        Engine<mpf_class> e(m, engine_precision(m));
        return e.integral_F();
    }
    Engine<double> e(m, 64);
    return e.integral_F();
}

std::vector<VoronoiCell> voronoi_cells(const StoppingModel& m) {
    if (m.roots_f.empty() && m.roots_fp.empty())
        throw std::invalid_argument("voronoi_cells requires a nonempty root set");
    const bool mp = needs_mp(m);
    std::vector<VoronoiCell> out;
    auto fill = [&out](const auto& engine) {
        for (std::size_t i = 0; i < engine.sites().size(); ++i) {
            const auto& st = engine.sites()[i];
            const auto& c = engine.cells()[i];
            VoronoiCell v;
            using R = std::decay_t<decltype(st.re)>;
            v.root = {Ops<R>::to_double(st.re), Ops<R>::to_double(st.im)};
            v.owner_in_f = st.in_f;
            v.empty = c.empty;
            if (!c.empty) {
                v.lo = Ops<R>::to_double(c.lo);
                v.hi = Ops<R>::to_double(c.hi);
            }
            out.push_back(v);
        }
    };
    if (mp) {
        Engine<mpf_class> e(m, engine_precision(m));
        fill(e);
    } else {
        Engine<double> e(m, 64);
        fill(e);
    }
    return out;
}

double closed_form_bound(const StoppingModel& m) {
    if (needs_mp(m)) {
        Engine<mpf_class> e(m, engine_precision(m));
        return e.closed_form();
    }
    Engine<double> e(m, 64);
    return e.closed_form();
}

BoundReport bound_report(const StoppingModel& m) {
    const EngineResults r = run_engine_auto(m);
    BoundReport b;
    b.integral_2_over_G = r.iG;
    b.integral_2_over_F = r.iF;
    b.closed_form_sum = r.closed;
    const double d = m.degree_d;
    b.paper_constant_bound = 25.0 * d * m.bits_L + 42.0 * d * std::log(d);
    return b;
}

BoundReport bound_report(const IntPolynomial& f) { return bound_report(make_stopping_model(f)); }

} // namespace sqfe
