#include "sqfe/families.hpp"

#include <cstdlib>
#include <random>
#include <stdexcept>

namespace sqfe {

std::string to_string(Family f) {
    switch (f) {
        case Family::mignotte: return "mignotte";
        case Family::wilkinson: return "wilkinson";
        case Family::chebyshev: return "chebyshev";
        case Family::random_dense: return "random";
    }
    return "?";
}

Family family_from_string(std::string_view name) {
    if (name == "mignotte") return Family::mignotte;
    if (name == "wilkinson") return Family::wilkinson;
    if (name == "chebyshev") return Family::chebyshev;
    if (name == "random") return Family::random_dense;
    throw std::invalid_argument("unknown family: '" + std::string(name) + "'");
}

namespace {

IntPolynomial mignotte(unsigned d, unsigned L) {
    if (L % 2 != 0 || L < 4)
        throw std::invalid_argument("mignotte family requires even L >= 4");
    const BigInt a = big_pow2(L / 2 - 1);
    // X^d - 2 (a X - 1)^2
    std::vector<BigInt> c(d + 1, BigInt(0));
    c[d] += 1;
    c[0] -= 2;
    c[1] += 4 * a;
    c[2] -= 2 * a * a;
    return IntPolynomial(std::move(c));
}

IntPolynomial wilkinson(unsigned d) {
    IntPolynomial p({1});
    for (unsigned k = 1; k <= d; ++k) p = p * IntPolynomial({-static_cast<long>(k), 1});
    return p;
}

IntPolynomial chebyshev(unsigned d) {
    IntPolynomial t0({1});
    IntPolynomial t1 = IntPolynomial::x();
    if (d == 0) return t0;
    const IntPolynomial two_x({0, 2});
    for (unsigned k = 2; k <= d; ++k) {
        IntPolynomial t2 = two_x * t1 - t0;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return t1;
}

IntPolynomial random_dense(unsigned d, unsigned L, std::uint64_t seed) {
    if (L > 62) throw std::invalid_argument("random family supports L <= 62");
    std::mt19937_64 gen(seed);
    // modulo draw: the bias at 64 bits is irrelevant and this stays
    // deterministic across standard libraries, unlike the distributions.
    const std::uint64_t m = (std::uint64_t(1) << L) - 1; // max magnitude 2^L - 1
    auto draw = [&]() -> long long {
        const std::uint64_t raw = gen() % (2 * m + 1);
        return static_cast<long long>(raw) - static_cast<long long>(m);
    };
    std::vector<BigInt> c(d + 1);
    for (unsigned i = 0; i <= d; ++i) c[i] = BigInt(static_cast<long>(draw()));
    while (sign_of(c[d]) == 0) c[d] = BigInt(static_cast<long>(draw()));
    return IntPolynomial(std::move(c));
}

} // namespace

IntPolynomial family_generate(Family family, unsigned d, unsigned L, std::uint64_t seed) {
    if (d < 2) throw std::invalid_argument("family_generate requires d >= 2");
    if (L < 2) throw std::invalid_argument("family_generate requires L >= 2");
    switch (family) {
        case Family::mignotte: return mignotte(d, L);
        case Family::wilkinson: return wilkinson(d);
        case Family::chebyshev: return chebyshev(d);
        case Family::random_dense: return random_dense(d, L, seed);
    }
    throw std::invalid_argument("unknown family");
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SQFE_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        throw std::invalid_argument("SQFE_SEED must be a decimal integer");
    }
    return 0x51fe;
}

} // namespace sqfe
