#include <doctest.h>

#include "cuspidal/arith.hpp"
#include "cuspidal/generators.hpp"

using namespace cuspidal;

TEST_CASE("factorize") {
    auto f = factorize(45);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].p == 3);
    CHECK(f.factors[0].r == 2);
    CHECK(f.factors[1].p == 5);
    CHECK(f.factors[1].r == 1);

    CHECK(factorize(1).factors.empty());

    f = factorize(245);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].p == 5);
    CHECK(f.factors[0].r == 1);
    CHECK(f.factors[1].p == 7);
    CHECK(f.factors[1].r == 2);

    CHECK_THROWS(factorize(0));
}

TEST_CASE("numerator in lowest terms") {
    CHECK(num_lowest(10, 12) == 5);
    CHECK(num_lowest(24, 24) == 1);
    CHECK(num_lowest(1152, 24) == 48);
    CHECK_THROWS(num_lowest(0, 5));
    CHECK_THROWS(num_lowest(-3, 5));
    // num(a,b) / (b/gcd) == a/b in lowest terms
    for (long a = 1; a <= 40; ++a)
        for (long b = 1; b <= 40; ++b) {
            const Int g = gcd_int(a, b);
            CHECK(num_lowest(a, b) * g == a);
        }
}

TEST_CASE("k(N)") {
    CHECK(k_of_N(11) == 120);
    CHECK(k_of_N(45) == 576);
    CHECK(k_of_N(15) == 192);
    CHECK_THROWS(k_of_N(1));
}

TEST_CASE("script G_p") {
    CHECK(script_G_p(7, 2, 2) == 48);   // kappa = 1
    CHECK(script_G_p(7, 2, 1) == 1);
    CHECK(script_G_p(13, 5, 1) == 1);
    CHECK(script_G_p(3, 1, 0) == 8);
    CHECK_THROWS(script_G_p(7, 2, 3));  // f > r
    CHECK_THROWS(script_G_p(2, 2, 1));  // even p

    // G_p(r, f) for f >= 2 divides G_p(r, 0)
    for (long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
        for (int r = 1; r <= 8; ++r)
            for (int f = 2; f <= r; ++f)
                CHECK(script_G_p(p, r, 0) % script_G_p(p, r, f) == 0);
}

TEST_CASE("B, B3, A, K_p") {
    CHECK(B_of(5) == 6);    // 24/gcd(24,4)
    CHECK(B_of(13) == 2);   // 24/gcd(24,12)
    CHECK(B_of(17) == 3);
    CHECK(B3_of(7) == 1);
    CHECK(B3_of(5) == 3);
    CHECK(A_of(3) == 3);
    CHECK(A_of(7) == 1);
    CHECK(K_p(7, 0) == 1);
    CHECK(K_p(7, 1) == 50);
}

TEST_CASE("epsilon(N, d)") {
    // the two ordering conditions conflict at (481, 3); gamma-first fallback
    CHECK_THROWS(prime_ordering(13 * 37, 3, false));
    const OrderedLevel l481 = prime_ordering(13 * 37, 3, true);
    CHECK(l481.relaxed());
    CHECK(epsilon_of(l481, 481) == 18);

    const OrderedLevel l91 = prime_ordering(7 * 13, 3);
    CHECK(epsilon_of(l91, 91) == 3);

    // prime powers have no divisor with two prime factors
    const OrderedLevel l49 = prime_ordering(49, 5);
    CHECK_THROWS(epsilon_of(l49, 49));
    CHECK(!in_DNF(l49, 49));
}

TEST_CASE("n(N, d) is a positive integer for all odd N <= 500") {
    for (long N = 3; N <= 500; N += 2) {
        const OrderedLevel level = ascending_level(N);
        for (long d : level.divisors()) {
            if (d == 1) continue;
            CHECK(n_of(level, d) > 0);
        }
    }
}

TEST_CASE("M(f): tuple-shape table equals condition table") {
    for (long N : {15, 105, 1155, 15015, 255255}) {
        const OrderedLevel level = ascending_level(N);
        const int s = level.s();
        for (long mask = 0; mask < (1LL << s); ++mask) {
            std::vector<int> f(s, 0);
            int ones = 0;
            for (int i = 0; i < s; ++i)
                if (mask >> i & 1) {
                    f[i] = 1;
                    ++ones;
                }
            if (ones < 2) continue;
            CHECK(M_sf_pattern(level, f) == M_sf_conditions(level, f));
        }
    }
}
