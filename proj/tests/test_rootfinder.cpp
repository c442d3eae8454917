#include "sqfe/rootfinder.hpp"

#include "sqfe/families.hpp"
#include "sqfe/sturm.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

using namespace sqfe;

namespace {

double dist_to(const std::vector<std::complex<double>>& zs, std::complex<double> w) {
    double best = 1e300;
    for (const auto& z : zs) best = std::min(best, std::abs(z - w));
    return best;
}

int real_count(const RootSet& s) {
    int n = 0;
    for (const auto& r : s.roots)
        if (r.is_real()) ++n;
    return n;
}

} // namespace

TEST_CASE("simple spectra") {
    SUBCASE("x^2 + 1") {
        const auto s = complex_roots(IntPolynomial({1, 0, 1}));
        REQUIRE(s.size() == 2);
        const auto zs = s.as_doubles();
        CHECK(dist_to(zs, {0.0, 1.0}) < 1e-10);
        CHECK(dist_to(zs, {0.0, -1.0}) < 1e-10);
        CHECK(real_count(s) == 0);
    }
    SUBCASE("x^2 - 2") {
        const auto s = complex_roots(IntPolynomial({-2, 0, 1}));
        const auto zs = s.as_doubles();
        CHECK(dist_to(zs, {std::sqrt(2.0), 0.0}) < 1e-10);
        CHECK(dist_to(zs, {-std::sqrt(2.0), 0.0}) < 1e-10);
        CHECK(real_count(s) == 2);
    }
    SUBCASE("x^3 - x") {
        const auto s = complex_roots(IntPolynomial({0, -1, 0, 1}));
        const auto zs = s.as_doubles();
        for (double r : {-1.0, 0.0, 1.0}) CHECK(dist_to(zs, {r, 0.0}) < 1e-10);
        CHECK(real_count(s) == 3);
    }
}

TEST_CASE("conjugate pairing and counts") {
    testing::Rng rng(701);
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = rng.poly(static_cast<unsigned>(rng.int_in(2, 10)), 10);
        const auto g = square_free_part(f);
        if (g.degree() < 1) continue;
        const auto s = complex_roots(g);
        CHECK(static_cast<int>(s.size()) == g.degree());
        CHECK(s.residual_bound < 1e-8);

        // exact conjugate mirror for nonreal roots
        for (const auto& r : s.roots) {
            if (r.is_real()) continue;
            const bool found = std::any_of(s.roots.begin(), s.roots.end(), [&](const MpComplex& o) {
                return cmp(o.re, r.re) == 0 && cmp(o.im, -mpf_class(r.im)) == 0;
            });
            CHECK(found);
        }

        // real classification agrees with the exact Sturm count
        const Dyadic b = root_bound(g);
        CHECK(real_count(s) == sturm_count(g, Interval(-b, b)));
    }
}

TEST_CASE("multiple roots via square-free decomposition") {
    // (x - 1)^2
    const auto s = complex_roots(IntPolynomial({1, -2, 1}));
    REQUIRE(s.size() == 2);
    for (const auto& r : s.roots) {
        CHECK(r.is_real());
        CHECK(std::abs(r.re.get_d() - 1.0) < 1e-12);
    }
}

TEST_CASE("mignotte cluster below double resolution") {
    // d=16, L=16: the close pair sits ~2^-62.5 apart, unrepresentable as
    // distinct doubles near 2^-7.
    const auto f = family_generate(Family::mignotte, 16, 16, 0);
    const auto s = complex_roots(f);
    REQUIRE(s.size() == 16);
    CHECK(real_count(s) == 4);

    std::vector<mpf_class> reals;
    for (const auto& r : s.roots)
        if (r.is_real()) reals.push_back(r.re);
    std::sort(reals.begin(), reals.end());
    REQUIRE(reals.size() == 4);
    // the middle two are the cluster near 1/a = 2^-7
    const mpf_class gap = reals[2] - reals[1];
    CHECK(mpf_sgn(gap.get_mpf_t()) > 0);
    const double lg = std::log2(std::abs(gap.get_d()));
    CHECK(lg > -64.0);
    CHECK(lg < -61.0);
    for (const auto& r : reals)
        CHECK(std::abs(r.get_d()) < 20.0);
}

TEST_CASE("degree one and errors") {
    const auto s = complex_roots(IntPolynomial({-3, 2}));
    REQUIRE(s.size() == 1);
    CHECK(std::abs(s.roots[0].re.get_d() - 1.5) < 1e-15);
    CHECK_THROWS_AS(complex_roots(IntPolynomial({5})), std::invalid_argument);
}
