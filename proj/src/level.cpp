#include "cuspidal/level.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cuspidal {

OrderedLevel::OrderedLevel(Factorization fac, std::vector<int> order,
                           long l, bool relaxed)
    : fac_(std::move(fac)), order_(std::move(order)), l_(l), relaxed_(relaxed) {
    if (order_.size() != fac_.factors.size())
        throw std::invalid_argument("OrderedLevel: bad permutation");
    divisors_ = divisors_of(fac_.n);
}

Int OrderedLevel::gamma(int i) const {
    const Int pi = p(i);
    return pow_int(pi, r(i) - 1) * (pi * pi - 1);
}

int OrderedLevel::divisor_index(long d) const {
    auto it = std::lower_bound(divisors_.begin(), divisors_.end(), d);
    if (it == divisors_.end() || *it != d)
        throw std::domain_error("divisor_index: not a divisor of N");
    return static_cast<int>(it - divisors_.begin());
}

std::vector<int> OrderedLevel::tuple_of(long d) const {
    if (d < 1 || N() % d != 0)
        throw std::domain_error("tuple_of: not a divisor of N");
    std::vector<int> f(s(), 0);
    for (int i = 0; i < s(); ++i) {
        const long pi = p(i);
        while (d % pi == 0) {
            d /= pi;
            ++f[i];
        }
    }
    return f;
}

long OrderedLevel::divisor_of(const std::vector<int>& f) const {
    if (static_cast<int>(f.size()) != s())
        throw std::invalid_argument("divisor_of: tuple length mismatch");
    long d = 1;
    for (int i = 0; i < s(); ++i) {
        if (f[i] < 0 || f[i] > r(i))
            throw std::domain_error("divisor_of: exponent out of range");
        for (int k = 0; k < f[i]; ++k) d *= p(i);
    }
    return d;
}

OrderedLevel ascending_level(long N) {
    Factorization fac = factorize(N);
    std::vector<int> order(fac.factors.size());
    std::iota(order.begin(), order.end(), 0);
    return OrderedLevel(std::move(fac), std::move(order), 0, false);
}

}  // namespace cuspidal
