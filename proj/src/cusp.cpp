#include "cuspidal/cusp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cuspidal {

std::vector<CuspLevel> cusp_table(long N) {
    if (N < 1) throw std::domain_error("cusp_table: N must be >= 1");
    std::vector<CuspLevel> table;
    for (long d : divisors_of(N)) {
        const long Md = std::gcd(d, N / d);
        table.push_back({d, Md, euler_phi(Md)});
    }
    return table;
}

DivisorVector zero_vector(long N) {
    return {N, std::vector<Int>(divisors_of(N).size(), Int(0))};
}

DivisorVector basis_vector(long N, long d) {
    const std::vector<long> divs = divisors_of(N);
    auto it = std::lower_bound(divs.begin(), divs.end(), d);
    if (it == divs.end() || *it != d)
        throw std::domain_error("basis_vector: d does not divide N");
    DivisorVector v = zero_vector(N);
    v.a[it - divs.begin()] = 1;
    return v;
}

DivisorVector C_divisor(long N, long d) {
    DivisorVector v = basis_vector(N, d);
    const long phi = euler_phi(std::gcd(d, N / d));
    v = scale(Int(-1), v);
    v.a[0] += phi;
    return v;
}

bool degree_check(const DivisorVector& v) {
    const std::vector<long> divs = divisors_of(v.N);
    Int deg = 0;
    for (std::size_t i = 0; i < divs.size(); ++i)
        deg += v.a[i] * euler_phi(std::gcd(divs[i], v.N / divs[i]));
    return deg == 0;
}

DivisorVector add(const DivisorVector& x, const DivisorVector& y) {
    if (x.N != y.N) throw std::invalid_argument("add: level mismatch");
    DivisorVector z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

DivisorVector scale(const Int& c, const DivisorVector& x) {
    DivisorVector z = x;
    for (Int& e : z.a) e *= c;
    return z;
}

DivisorVector tensor(const DivisorVector& x, const DivisorVector& y) {
    if (std::gcd(x.N, y.N) != 1)
        throw std::invalid_argument("tensor: levels must be coprime");
    const std::vector<long> dx = divisors_of(x.N);
    const std::vector<long> dy = divisors_of(y.N);
    const std::vector<long> dz = divisors_of(x.N * y.N);
    DivisorVector z = zero_vector(x.N * y.N);
    for (std::size_t i = 0; i < dx.size(); ++i)
        for (std::size_t j = 0; j < dy.size(); ++j) {
            const long d = dx[i] * dy[j];
            auto it = std::lower_bound(dz.begin(), dz.end(), d);
            z.a[it - dz.begin()] = x.a[i] * y.a[j];
        }
    return z;
}

}  // namespace cuspidal
