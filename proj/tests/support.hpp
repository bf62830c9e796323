#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "cuspidal/cusp.hpp"
#include "cuspidal/etaq.hpp"
#include "cuspidal/factor.hpp"
#include "cuspidal/numeric.hpp"

namespace testsupport {

using namespace cuspidal;

/// Independent order oracle: the smallest n >= 1 with n * r(D) modular.
/// The set of such n is an ideal, so it suffices to test the divisors of
/// any known member (the formula value) and confirm the minimum.
inline Int brute_force_order(const DivisorVector& D, const Int& candidate) {
    REQUIRE_MESSAGE(candidate > 0, "order candidate must be positive");
    const EtaExponentVector r = eta_of_divisor(D);
    {
        EtaExponentVector cr = scale(Rat(candidate), r);
        REQUIRE_MESSAGE(is_modular(cr),
                        "formula order does not even give a modular multiple");
    }
    // ascending divisors of the candidate
    std::vector<Int> divs{1};
    Int rest = candidate;
    for (Int p = 2; p * p <= rest; ++p) {
        if (!divides(p, rest)) continue;
        const std::size_t base = divs.size();
        Int pk = 1;
        while (divides(p, rest)) {
            rest = exact_div(rest, p);
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    if (rest > 1) {
        const std::size_t base = divs.size();
        for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * rest);
    }
    std::sort(divs.begin(), divs.end());
    for (const Int& n : divs) {
        EtaExponentVector nr = scale(Rat(n), r);
        if (is_modular(nr)) return n;
    }
    return candidate;
}

/// Deterministic random degree-zero integer divisor on X_0(N).
inline DivisorVector random_degree_zero(long N, std::mt19937_64& rng) {
    const std::vector<long> divs = divisors_of(N);
    std::uniform_int_distribution<long> coef(-20, 20);
    DivisorVector D = zero_vector(N);
    for (std::size_t i = 1; i < divs.size(); ++i) {
        const long c = coef(rng);
        // add c * (phi(M_d) P_1 - P_d), always degree zero
        DivisorVector cd = C_divisor(N, divs[i]);
        D = add(D, scale(Int(c), cd));
    }
    return D;
}

}  // namespace testsupport
