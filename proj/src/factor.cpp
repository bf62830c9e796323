#include "cuspidal/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace cuspidal {

Factorization factorize(long n) {
    if (n < 1) throw std::domain_error("factorize: n must be >= 1");
    Factorization f;
    f.n = n;
    long m = n;
    for (long p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            int r = 0;
            while (m % p == 0) {
                m /= p;
                ++r;
            }
            f.factors.push_back({p, r});
        }
    }
    if (m > 1) f.factors.push_back({m, 1});
    return f;
}

std::vector<long> divisors_of(long n) {
    Factorization f = factorize(n);
    std::vector<long> divs{1};
    for (const auto& [p, r] : f.factors) {
        const std::size_t base = divs.size();
        long pk = 1;
        for (int k = 1; k <= r; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

long radical(long n) {
    long r = 1;
    for (const auto& pp : factorize(n).factors) r *= pp.p;
    return r;
}

long euler_phi(long n) {
    long phi = 1;
    for (const auto& [p, r] : factorize(n).factors) {
        long pk = 1;
        for (int i = 1; i < r; ++i) pk *= p;
        phi *= pk * (p - 1);
    }
    return phi;
}

bool is_prime(long n) {
    if (n < 2) return false;
    const Factorization f = factorize(n);
    return f.factors.size() == 1 && f.factors[0].r == 1;
}

long sigma0(long n) {
    long c = 1;
    for (const auto& pp : factorize(n).factors) c *= pp.r + 1;
    return c;
}

}  // namespace cuspidal
