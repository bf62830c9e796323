#pragma once

#include <vector>

#include "cuspidal/factor.hpp"
#include "cuspidal/numeric.hpp"

namespace cuspidal {

/// A level N together with a fixed ordering p_1 < p_2 < ... < p_s on its
/// prime factors.  Every exponent tuple f = (f_1,...,f_s) below is indexed
/// in this order.  The ordering is chosen per (N, l) by
/// generators::prime_ordering; the l-free default is ascending primes.
class OrderedLevel {
public:
    OrderedLevel(Factorization fac, std::vector<int> order, long l,
                 bool relaxed);

    long N() const { return fac_.n; }
    long l() const { return l_; }
    bool relaxed() const { return relaxed_; }
    int s() const { return static_cast<int>(order_.size()); }

    long p(int i) const { return fac_.factors[order_[i]].p; }  // 0-based
    int r(int i) const { return fac_.factors[order_[i]].r; }

    /// gamma_i = p_i^{r_i-1} (p_i^2 - 1)
    Int gamma(int i) const;

    const Factorization& factorization() const { return fac_; }
    const std::vector<int>& permutation() const { return order_; }
    const std::vector<long>& divisors() const { return divisors_; }

    int divisor_index(long d) const;            // position in divisors()
    std::vector<int> tuple_of(long d) const;    // exponents, ordering order
    long divisor_of(const std::vector<int>& f) const;

private:
    Factorization fac_;
    std::vector<int> order_;  // order_[i] = index into fac_.factors
    long l_;
    bool relaxed_;
    std::vector<long> divisors_;
};

/// The l-free canonical level: primes ascending.
OrderedLevel ascending_level(long N);

}  // namespace cuspidal
