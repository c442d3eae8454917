#include "sqfe/dyadic.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace sqfe;

namespace {
Dyadic dy(long m, std::int64_t e = 0) { return Dyadic(BigInt(m), e); }
} // namespace

TEST_CASE("dyadic addition") {
    CHECK(dy(1, 0) + dy(1, -1) == dy(3, -1)); // 1 + 1/2 = 3/2
    const Dyadic x = dy(-7, 3);
    CHECK(x + Dyadic() == x);
    CHECK(dy(3, -2) + dy(1, -2) == dy(1, 0)); // 3/4 + 1/4 = 1, renormalized
}

TEST_CASE("dyadic multiplication") {
    CHECK(dy(3, -1) * dy(1, 1) == dy(3, 0)); // 3/2 * 2 = 3
    const Dyadic x = dy(11, -4);
    CHECK(x * dy(1, 0) == x);
    CHECK(dy(5, -3) * dy(3, -1) == dy(15, -4)); // 5/8 * 3/2 = 15/16
}

TEST_CASE("dyadic absolute comparison") {
    CHECK(Dyadic::compare_abs(dy(-3, -1), dy(1, 0)) > 0); // 3/2 > 1
    CHECK(Dyadic::compare_abs(Dyadic(), Dyadic()) == 0);
    CHECK(Dyadic::compare_abs(dy(7, -3), dy(1, 0)) < 0); // 7/8 < 1
}

TEST_CASE("canonical form") {
    CHECK(dy(12, 0).mantissa() == 3);
    CHECK(dy(12, 0).exponent() == 2);
    CHECK(dy(0, 17).exponent() == 0);
    CHECK(dy(0, 17).is_zero());

    testing::Rng rng(101);
    for (int i = 0; i < 500; ++i) {
        const Dyadic a = rng.dyadic(20, 12);
        const Dyadic b = rng.dyadic(20, 12);
        for (const Dyadic& v : {a + b, a - b, a * b, a.half(), -a}) {
            if (v.is_zero()) {
                CHECK(v.exponent() == 0);
            } else {
                CHECK(mpz_odd_p(v.mantissa().get_mpz_t()));
            }
        }
    }
}

TEST_CASE("ring axioms on random triples") {
    testing::Rng rng(202);
    for (int i = 0; i < 400; ++i) {
        const Dyadic a = rng.dyadic(24, 10);
        const Dyadic b = rng.dyadic(24, 10);
        const Dyadic c = rng.dyadic(24, 10);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Dyadic());
    }
}

TEST_CASE("ordering") {
    CHECK(dy(1, -1) < dy(1, 0));
    CHECK(dy(-1, 4) < dy(1, -20));
    CHECK(dy(5, -2) > dy(9, -3)); // 5/4 > 9/8
    testing::Rng rng(303);
    for (int i = 0; i < 300; ++i) {
        const Dyadic a = rng.dyadic(24, 10);
        const Dyadic b = rng.dyadic(24, 10);
        const int c = Dyadic::compare(a, b);
        CHECK(c == -Dyadic::compare(b, a));
        if (c == 0) CHECK(a == b);
        CHECK(((a - b).sign() == c));
    }
}

TEST_CASE("text round trip") {
    CHECK(dy(3, -2).str() == "3*2^-2");
    CHECK(dy(5, 0).str() == "5");
    CHECK(Dyadic::parse("3*2^-2") == dy(3, -2));
    CHECK(Dyadic::parse("12") == dy(12)); // accepted and canonicalized
    CHECK(Dyadic::parse("  -40 ") == dy(-40));
    CHECK(Dyadic::parse("-1*2^8") == dy(-256));

    testing::Rng rng(404);
    for (int i = 0; i < 300; ++i) {
        const Dyadic a = rng.dyadic(30, 16);
        CHECK(Dyadic::parse(a.str()) == a);
    }

    CHECK_THROWS_AS(Dyadic::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Dyadic::parse("3*3^2"), std::invalid_argument);
    CHECK_THROWS_AS(Dyadic::parse("x"), std::invalid_argument);
}

TEST_CASE("exponent overflow is a checked error") {
    const Dyadic big = Dyadic::pow2(std::int64_t(1) << 55);
    CHECK_THROWS_AS(big * big * big * big, std::overflow_error);
}

TEST_CASE("halving and doubles") {
    CHECK(dy(3, 0).half() == dy(3, -1));
    CHECK(Dyadic().half() == Dyadic());
    CHECK(dy(1, -2).to_double() == 0.25);
    CHECK(dy(-3, -1).to_double() == -1.5);
}
