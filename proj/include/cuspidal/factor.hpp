#pragma once

#include <cstdint>
#include <vector>

#include "cuspidal/numeric.hpp"

namespace cuspidal {

struct PrimePower {
    long p;
    int r;
};

/// Prime factorization n = prod p_i^{r_i}, primes strictly increasing.
/// n = 1 has an empty factor list.
struct Factorization {
    long n = 1;
    std::vector<PrimePower> factors;

    int num_primes() const { return static_cast<int>(factors.size()); }
};

/// Trial division; n >= 1.
Factorization factorize(long n);

/// Divisors of n in ascending order.
std::vector<long> divisors_of(long n);

long radical(long n);
long euler_phi(long n);
bool is_prime(long n);

/// sigma_0(n), the number of divisors including 1 and n.
long sigma0(long n);

}  // namespace cuspidal
