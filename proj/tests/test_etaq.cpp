#include <doctest.h>

#include <random>

#include "cuspidal/arith.hpp"
#include "cuspidal/etaq.hpp"
#include "cuspidal/generators.hpp"
#include "support.hpp"

using namespace cuspidal;

TEST_CASE("vanishing orders") {
    CHECK(vanishing_order(45, 3, 5) == Rat(1));
    CHECK(vanishing_order(11, 1, 1) == Rat(11));
    CHECK(vanishing_order(11, 11, 11) == Rat(11));
    CHECK_THROWS(vanishing_order(45, 2, 5));
    // positive with denominator dividing d*d'
    for (long N : {45, 99, 175, 245})
        for (long d : divisors_of(N))
            for (long dp : divisors_of(N)) {
                const Rat a = vanishing_order(N, d, dp);
                CHECK(a > 0);
                CHECK(divides(a.get_den(), Int(d) * dp));
            }
}

TEST_CASE("Lambda inverse is exact for odd N <= 300") {
    for (long N = 3; N <= 300; N += 2) CHECK(Ligozat::get(N)->inverse_is_exact());
}

TEST_CASE("modularity criteria") {
    EtaExponentVector good{11, {Rat(12), Rat(-12)}};
    CHECK(is_modular(good));

    EtaExponentVector bad{11, {Rat(1), Rat(-1)}};
    CHECK_FALSE(is_modular(bad));  // 1 - 11 = -10, not 0 mod 24

    CHECK(is_modular(zero_eta(45)));

    // non-integral exponents fail condition (1)
    EtaExponentVector frac{11, {Rat(12, 5), Rat(-12, 5)}};
    CHECK_FALSE(is_modular(frac));

    // odd prime-exponent sum fails the square condition
    EtaExponentVector notsq{35, {Rat(3), Rat(-3), Rat(0), Rat(0)}};
    CHECK_FALSE(is_modular(notsq));
}

TEST_CASE("div of eta") {
    EtaExponentVector r{11, {Rat(12), Rat(-12)}};
    const std::vector<Rat> d = div_of_eta(r);
    CHECK(d[0] == Rat(5));
    CHECK(d[1] == Rat(-5));

    const std::vector<Rat> z = div_of_eta(zero_eta(45));
    for (const Rat& e : z) CHECK(e == 0);
}

TEST_CASE("eta of divisor and the N = 11 worked chain") {
    DivisorVector D{11, {Int(1), Int(-1)}};  // P_1 - P_11
    const EtaExponentVector r = eta_of_divisor(D);
    CHECK(r.r[0] == Rat(12, 5));
    CHECK(r.r[1] == Rat(-12, 5));

    const OrderData od = order_of_divisor(D);
    CHECK(od.V == std::vector<Int>{Int(12), Int(-12)});
    CHECK(od.gcd == 12);
    CHECK(od.Vnorm == std::vector<Int>{Int(1), Int(-1)});
    CHECK(od.Pw.at(11) == -1);
    CHECK(od.h == 2);
    CHECK(od.order == 5);

    CHECK(order_of_divisor(zero_vector(11)).degenerate);
    CHECK(order_of_divisor(zero_vector(11)).order == 1);

    CHECK_THROWS(eta_of_divisor(basis_vector(11, 1)));  // not degree zero
}

TEST_CASE("Mazur primes need the h factor: N = 17") {
    const OrderedLevel level = ascending_level(17);
    const ZDivisor z = z_vector(level, 17);
    const OrderData od = order_of_divisor(z.vec);
    CHECK(od.h == 2);
    CHECK(od.order == 4);             // num((17-1)/12)
    CHECK(z.n_d == 2);                // formula value disagrees here
    CHECK(testsupport::brute_force_order(z.vec, od.order) == 4);
}

TEST_CASE("round trip div_of_eta after eta_of_divisor") {
    std::mt19937_64 rng(11);
    for (long N : {11, 45, 63, 91, 175, 245}) {
        for (int trial = 0; trial < 20; ++trial) {
            const DivisorVector D = testsupport::random_degree_zero(N, rng);
            const EtaExponentVector r = eta_of_divisor(D);
            const std::vector<Rat> back = div_of_eta(r);
            for (std::size_t i = 0; i < back.size(); ++i)
                CHECK(back[i] == Rat(D.a[i]));
        }
    }
}

TEST_CASE("Z(49) at N = 245 has order 48") {
    const OrderedLevel level = ascending_level(245);
    const ZDivisor z = z_vector(level, 49);
    const OrderData od = order_of_divisor(z.vec);
    CHECK(od.order == 48);
    CHECK(z.n_d == 48);  // num(1152/24)
    CHECK(testsupport::brute_force_order(z.vec, od.order) == 48);
}

TEST_CASE("order formula equals the modularity oracle on random divisors") {
    std::mt19937_64 rng(17);
    for (long N = 3; N <= 200; N += 2) {
        for (int trial = 0; trial < 200; ++trial) {
            const DivisorVector D = testsupport::random_degree_zero(N, rng);
            const OrderData od = order_of_divisor(D);
            if (od.degenerate) continue;
            CHECK(testsupport::brute_force_order(D, od.order) == od.order);
        }
    }
}

TEST_CASE("tensor compatibility of V and Vnorm") {
    std::mt19937_64 rng(23);
    auto check_pair = [&](long N1, long N2) {
        for (int trial = 0; trial < 10; ++trial) {
            const DivisorVector D1 = testsupport::random_degree_zero(N1, rng);
            const DivisorVector D2 = testsupport::random_degree_zero(N2, rng);
            const DivisorVector D = tensor(D1, D2);
            const OrderData o1 = order_of_divisor(D1);
            const OrderData o2 = order_of_divisor(D2);
            const OrderData o = order_of_divisor(D);
            if (o1.degenerate || o2.degenerate || o.degenerate) continue;
            const DivisorVector v1{N1, o1.V}, v2{N2, o2.V};
            CHECK(tensor(v1, v2).a == o.V);
            const DivisorVector n1{N1, o1.Vnorm}, n2{N2, o2.Vnorm};
            CHECK(tensor(n1, n2).a == o.Vnorm);
        }
    };
    check_pair(9, 5);
    check_pair(25, 7);
    check_pair(5, 49);
    check_pair(27, 35);
}
