#include "sqfe/families.hpp"

#include <doctest.h>

#include <cstdlib>
#include <stdexcept>

using namespace sqfe;

TEST_CASE("mignotte") {
    // d=3, L=4: x^3 - 2(2x - 1)^2 = x^3 - 8x^2 + 8x - 2
    CHECK(family_generate(Family::mignotte, 3, 4, 0) == IntPolynomial({-2, 8, -8, 1}));
    CHECK_THROWS_AS(family_generate(Family::mignotte, 4, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(family_generate(Family::mignotte, 4, 2, 0), std::invalid_argument);
}

TEST_CASE("wilkinson") {
    CHECK(family_generate(Family::wilkinson, 2, 8, 0) == IntPolynomial({2, -3, 1}));
    // degree and leading coefficient
    const auto w10 = family_generate(Family::wilkinson, 10, 8, 0);
    CHECK(w10.degree() == 10);
    CHECK(w10.leading() == 1);
    CHECK(evaluate(w10, Dyadic(BigInt(7), 0)).is_zero());
}

TEST_CASE("chebyshev") {
    CHECK(family_generate(Family::chebyshev, 2, 8, 0) == IntPolynomial({-1, 0, 2}));
    CHECK(family_generate(Family::chebyshev, 5, 8, 0) == IntPolynomial({0, 5, 0, -20, 0, 16}));
}

TEST_CASE("random family") {
    const auto f1 = family_generate(Family::random_dense, 9, 12, 42);
    const auto f2 = family_generate(Family::random_dense, 9, 12, 42);
    const auto f3 = family_generate(Family::random_dense, 9, 12, 43);
    CHECK(f1 == f2);
    CHECK_FALSE(f1 == f3);
    CHECK(f1.degree() == 9);
    CHECK(bit_length_L(f1) <= 12);
    CHECK_THROWS_AS(family_generate(Family::random_dense, 1, 8, 0), std::invalid_argument);
}

TEST_CASE("family names") {
    for (Family f : {Family::mignotte, Family::wilkinson, Family::chebyshev,
                     Family::random_dense})
        CHECK(family_from_string(to_string(f)) == f);
    CHECK_THROWS_AS(family_from_string("laguerre"), std::invalid_argument);
}

TEST_CASE("seed override") {
    unsetenv("SQFE_SEED");
    const auto base = default_seed();
    setenv("SQFE_SEED", "777", 1);
    CHECK(default_seed() == 777);
    unsetenv("SQFE_SEED");
    CHECK(default_seed() == base);
}
