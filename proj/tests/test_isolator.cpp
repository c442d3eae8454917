#include "sqfe/isolator.hpp"

#include "sqfe/amortize.hpp"
#include "sqfe/errors.hpp"
#include "sqfe/rootfinder.hpp"
#include "sqfe/sturm.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace sqfe;

namespace {
Dyadic dy(long m, std::int64_t e = 0) { return Dyadic(BigInt(m), e); }
const IntPolynomial X({0, 1});
const IntPolynomial x2m2({-2, 0, 1});
} // namespace

TEST_CASE("condition c0") {
    CHECK_FALSE(condition_c0(X, Interval(dy(-1), dy(1)))); // |g(0)| = 0
    CHECK(condition_c0(X, Interval(dy(1), dy(2))));        // 3/2 > 1/2
    CHECK(condition_c0(x2m2, Interval(dy(0), dy(1))));     // 7/4 > 3/4
}

TEST_CASE("condition c1") {
    CHECK(condition_c1(IntPolynomial({1}), Interval(dy(-5), dy(9)))); // 1 > empty sum
    CHECK_FALSE(condition_c1(X, Interval(dy(-1), dy(1))));            // midpoint is the root
    CHECK(condition_c1(X, Interval(dy(1), dy(2))));
}

TEST_CASE("exclusion test fails on exact ties") {
    // g = x^2 - 1 on [-1, 0]: |g(-1/2)| = 3/4 equals the tail sum exactly.
    CHECK_FALSE(taylor_exclusion_test(IntPolynomial({-1, 0, 1}), Interval(dy(-1), dy(0))));
}

TEST_CASE("isolate f = x") {
    // h is the constant 1, so C1 already holds on the initial interval:
    // a single sign-change leaf isolates the root with no bisection at all.
    const auto rep = isolate(X, Interval(dy(-2), dy(2)));
    CHECK(rep.stats.partition_size == 1);
    CHECK(rep.stats.bisections == 0);
    REQUIRE(rep.isolating_intervals.size() == 1);
    CHECK(rep.isolating_intervals[0].contains(Dyadic()));
    CHECK(rep.point_roots.empty());
    CHECK(rep.root_count() == 1);
}

TEST_CASE("isolate x^2 + 1 finds nothing") {
    const auto rep = isolate(IntPolynomial({1, 0, 1}), Interval(dy(-2), dy(2)));
    CHECK(rep.root_count() == 0);
    CHECK(rep.stats.partition_size == rep.stats.bisections + 1);
}

TEST_CASE("isolate x^2 - 2 on [-4, 4]") {
    const auto rep = isolate(x2m2, Interval(dy(-4), dy(4)));
    REQUIRE(rep.isolating_intervals.size() == 2);
    CHECK(rep.point_roots.empty());
    CHECK(rep.endpoint_roots.empty());
    for (const auto& J : rep.isolating_intervals)
        CHECK(sturm_count(rep.g, J) == 1);
    CHECK(rep.isolating_intervals[0].hi <= rep.isolating_intervals[1].lo);
}

TEST_CASE("midpoint roots become point roots") {
    const auto rep = isolate(IntPolynomial({0, -1, 0, 1}), Interval(dy(-2), dy(2)));
    CHECK(rep.root_count() == 3);
    bool zero_as_point = false;
    for (const auto& r : rep.point_roots)
        if (r == Dyadic()) zero_as_point = true;
    CHECK(zero_as_point);
    for (const auto& r : rep.point_roots) CHECK(sign_at(rep.g, r) == 0);
}

TEST_CASE("roots at the input endpoints are reported separately") {
    const auto rep = isolate(IntPolynomial({-1, 0, 1}), Interval(dy(-1), dy(1)));
    REQUIRE(rep.endpoint_roots.size() == 2);
    CHECK(rep.endpoint_roots[0] == dy(-1));
    CHECK(rep.endpoint_roots[1] == dy(1));
    CHECK(rep.isolating_intervals.empty());
    CHECK(rep.point_roots.empty());
}

TEST_CASE("multiplicities are flattened by the square-free substitution") {
    // (x-1)^2 (x+2): roots 1 and -2, each isolated once
    const auto rep = isolate_benchmark(IntPolynomial({2, -3, 0, 1}));
    CHECK(rep.root_count() == 2);
}

TEST_CASE("isolate rejects bad input") {
    CHECK_THROWS_AS(isolate(IntPolynomial({7}), Interval(dy(0), dy(1))), std::invalid_argument);
    CHECK_THROWS_AS(isolate(IntPolynomial::zero(), Interval(dy(0), dy(1))),
                    std::invalid_argument);
    CHECK_THROWS_AS(isolate(X, Interval(dy(1), dy(1))), std::invalid_argument);
}

TEST_CASE("exclusion predicates are monotone under interval shrinking") {
    testing::Rng rng(801);
    int hits = 0;
    for (int trial = 0; trial < 800; ++trial) {
        const auto f = rng.poly(static_cast<unsigned>(rng.int_in(1, 8)), 8);
        const auto g = square_free_part(f);
        if (g.degree() < 1) continue;
        Dyadic a = rng.dyadic(6, 3);
        Dyadic b = rng.dyadic(6, 3);
        if (b < a) std::swap(a, b);
        if (a == b) continue;
        const Interval J(a, b);
        if (!taylor_exclusion_test(g, J)) continue;
        ++hits;
        // random dyadic subinterval
        const Dyadic w = J.width();
        const Dyadic q1 = Dyadic(BigInt(static_cast<long>(rng.int_in(0, 7))), -3);
        const Dyadic q2 = Dyadic(BigInt(static_cast<long>(rng.int_in(0, 7))), -3);
        Dyadic lo = a + w * q1.half();
        Dyadic hi = b - w * q2.half();
        if (hi < lo) std::swap(lo, hi);
        CHECK(taylor_exclusion_test(g, Interval(lo, hi)));
    }
    CHECK(hits > 50);
}

TEST_CASE("a width below 0.99 / Sigma forces termination") {
    testing::Rng rng(802);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto f = rng.poly(static_cast<unsigned>(rng.int_in(2, 8)), 8);
        const auto g = square_free_part(f);
        if (g.degree() < 1) continue;
        const auto roots = complex_roots(g);
        const Dyadic m = rng.dyadic(5, 2);
        if (sign_at(g, m) == 0) continue;
        const double s = sigma(m.to_double(), roots);
        // largest power of two with 2u <= 0.99 / sigma
        const int e = static_cast<int>(std::floor(std::log2(0.99 / s))) - 1;
        const Dyadic u = Dyadic::pow2(e);
        CHECK(taylor_exclusion_test(g, Interval(m - u, m + u)));
        ++checked;
    }
    CHECK(checked > 30);
}

TEST_CASE("worklist order does not change the report") {
    testing::Rng rng(803);
    for (int trial = 0; trial < 25; ++trial) {
        const auto f = rng.poly(static_cast<unsigned>(rng.int_in(2, 9)), 10);
        if (square_free_part(f).degree() < 1) continue;
        IsolateOptions dfs, bfs;
        bfs.order = WorklistOrder::breadth_first;
        const auto r1 = isolate_benchmark(f, dfs);
        const auto r2 = isolate_benchmark(f, bfs);
        CHECK(r1.isolating_intervals == r2.isolating_intervals);
        CHECK(r1.point_roots == r2.point_roots);
        CHECK(r1.endpoint_roots == r2.endpoint_roots);
        CHECK(r1.stats.partition_size == r2.stats.partition_size);
        CHECK(r1.stats.bisections == r2.stats.bisections);
        CHECK(r1.stats.max_depth == r2.stats.max_depth);
        CHECK(r1.stats.c0_terminations == r2.stats.c0_terminations);
        CHECK(r1.stats.c1_terminations == r2.stats.c1_terminations);
    }
}

TEST_CASE("reports agree with the sturm oracle") {
    testing::Rng rng(804);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = rng.poly(static_cast<unsigned>(rng.int_in(2, 10)), 12);
        if (square_free_part(f).degree() < 1) continue;
        const auto rep = isolate_benchmark(f);
        const Dyadic b = root_bound(f);
        const auto oracle = sturm_isolate(rep.g, Interval(-b, b));
        CHECK(rep.root_count() == oracle.size());
        for (const auto& J : rep.isolating_intervals) CHECK(sturm_count(rep.g, J) == 1);
        for (const auto& r : rep.point_roots) CHECK(sign_at(rep.g, r) == 0);
        // intervals are interior-disjoint and hold no point root inside
        for (std::size_t k = 0; k + 1 < rep.isolating_intervals.size(); ++k)
            CHECK(rep.isolating_intervals[k].hi <= rep.isolating_intervals[k + 1].lo);
        for (const auto& r : rep.point_roots)
            for (const auto& J : rep.isolating_intervals) {
                const bool strictly_inside = J.lo < r && r < J.hi;
                CHECK_FALSE(strictly_inside);
            }
        CHECK(rep.stats.partition_size == rep.stats.bisections + 1);
        CHECK(rep.stats.max_depth <= std::max<std::uint64_t>(rep.stats.bisections, 1));
    }
}

TEST_CASE("raw-derivative experiment reports the same roots") {
    testing::Rng rng(805);
    int compared = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = rng.poly(static_cast<unsigned>(rng.int_in(2, 8)), 8);
        const auto g = square_free_part(f);
        if (g.degree() < 1 || g.degree() != f.degree()) continue; // square-free inputs only
        IsolateOptions raw;
        raw.raw_derivative_c1 = true;
        const auto r1 = isolate_benchmark(f);
        const auto r2 = isolate_benchmark(f, raw);
        CHECK(r1.root_count() == r2.root_count());
        // every default-mode root is matched by a raw-mode root location
        const Dyadic b = root_bound(f);
        CHECK(static_cast<int>(r2.root_count()) == sturm_count(g, Interval(-b, b)));
        ++compared;
    }
    CHECK(compared > 10);
}

TEST_CASE("stats invariants") {
    const auto rep = isolate_benchmark(IntPolynomial({-1, -6, 2, 1}));
    CHECK(rep.stats.partition_size == rep.stats.bisections + 1);
    CHECK(rep.stats.c0_terminations + rep.stats.c1_terminations == rep.stats.partition_size);
}
