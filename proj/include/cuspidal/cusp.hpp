#pragma once

#include <vector>

#include "cuspidal/factor.hpp"
#include "cuspidal/numeric.hpp"

namespace cuspidal {

/// One cusp level d | N: gcd(d, N/d) and the number phi(gcd) of cusps.
struct CuspLevel {
    long d;
    long Md;
    long count;
};

/// One entry per divisor of N; total cusp count = sum of counts.
std::vector<CuspLevel> cusp_table(long N);

/// Element of the lattice S(N): one integer per divisor of N, the
/// coefficient of the level-d rational cuspidal divisor P_d.  Entries are
/// indexed by the divisors of N in ascending order.
struct DivisorVector {
    long N = 1;
    std::vector<Int> a;

    bool operator==(const DivisorVector&) const = default;
};

DivisorVector zero_vector(long N);
DivisorVector basis_vector(long N, long d);  // e(N)_d

/// C_d = phi(M_d) * P_1 - P_d, a degree-zero generator of S(N)^0.
DivisorVector C_divisor(long N, long d);

/// True iff sum_d a_d * phi(gcd(d, N/d)) = 0, i.e. v lies in S(N)^0.
bool degree_check(const DivisorVector& v);

DivisorVector add(const DivisorVector& x, const DivisorVector& y);
DivisorVector scale(const Int& c, const DivisorVector& x);

/// Tensor over coprime levels: entry at d1*d2 is a_{d1} * b_{d2}.
DivisorVector tensor(const DivisorVector& x, const DivisorVector& y);

}  // namespace cuspidal
