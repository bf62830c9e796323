#include "cuspidal/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cuspidal/arith.hpp"

namespace cuspidal {

namespace {

bool ordering_valid(const Factorization& fac, const std::vector<int>& perm,
                    long l, bool gamma_only) {
    const int s = static_cast<int>(perm.size());
    const Int L(l);
    std::vector<long> vg(s), vp(s);
    for (int i = 0; i < s; ++i) {
        const auto& [p, r] = fac.factors[perm[i]];
        const Int gamma = pow_int(Int(p), r - 1) * (Int(p) * p - 1);
        vg[i] = valuation(gamma, L);
        vp[i] = valuation(Int(p) - 1, L);
    }
    for (int i = 0; i + 1 < s; ++i) {
        if (vg[i] < vg[i + 1]) return false;
        if (!gamma_only && vp[i] > vp[i + 1]) return false;
    }
    return true;
}

}  // namespace

OrderedLevel prime_ordering(const Factorization& fac, long l,
                            bool allow_relaxed) {
    if (fac.n < 3 || fac.n % 2 == 0)
        throw std::domain_error("prime_ordering: N must be odd and >= 3");
    if (l < 3 || l % 2 == 0 || !is_prime(l))
        throw std::domain_error("prime_ordering: l must be an odd prime");
    if ((3 * fac.n) % (l * l) == 0)
        throw std::domain_error("prime_ordering: l^2 divides 3N");

    std::vector<int> perm(fac.factors.size());
    std::iota(perm.begin(), perm.end(), 0);
    // primes are ascending in fac, so std::next_permutation enumerates
    // candidate orderings in lexicographic order; the first valid one is
    // the canonical choice
    std::vector<int> cand = perm;
    do {
        if (ordering_valid(fac, cand, l, false))
            return OrderedLevel(fac, cand, l, false);
    } while (std::next_permutation(cand.begin(), cand.end()));

    if (allow_relaxed) {
        cand = perm;
        do {
            if (ordering_valid(fac, cand, l, true))
                return OrderedLevel(fac, cand, l, true);
        } while (std::next_permutation(cand.begin(), cand.end()));
    }
    throw std::domain_error(
        "prime_ordering: no ordering satisfies both valuation conditions for "
        "N=" + std::to_string(fac.n) + ", l=" + std::to_string(l));
}

OrderedLevel prime_ordering(long N, long l, bool allow_relaxed) {
    return prime_ordering(factorize(N), l, allow_relaxed);
}

std::vector<Int> vector_A(long p, int r, int f) {
    if (p < 3 || p % 2 == 0) throw std::domain_error("vector_A: p must be odd");
    if (r < 1 || f < 0 || f > r)
        throw std::domain_error("vector_A: need 0 <= f <= r");
    const Int P(p);
    std::vector<Int> a(r + 1, Int(0));

    if (f == 0) {
        a[0] = 1;
        return a;
    }
    if (f == 1) {
        for (int k = 0; k <= r; ++k)
            a[k] = pow_int(P, std::max(r - 2 * k, 0));
        return a;
    }
    if (f == 2 && r % 2 == 1) {
        a[0] = K_p(p, (r - 3) / 2);
        for (int k = 1; k <= (r - 1) / 2; ++k) a[k] = K_p(p, (r - 1 - 2 * k) / 2);
        a[(r + 1) / 2] = 0;
        for (int k = (r + 3) / 2; k <= r; ++k)
            a[k] = -P * K_p(p, (2 * k - r - 3) / 2);
        return a;
    }
    if (f == 2 && r % 2 == 0) {
        for (int k = 0; k < r / 2; ++k) a[k] = K_p(p, (r - 2 - 2 * k) / 2);
        a[r / 2] = 0;
        for (int k = r / 2 + 1; k <= r; ++k) a[k] = -K_p(p, (2 * k - r - 2) / 2);
        return a;
    }
    const int kappa = kappa_of(r, f);
    if ((r - f) % 2 == 0) {  // f = r - 2 kappa
        a[0] = pow_int(P, kappa);
        for (int k = r - kappa; k <= r; ++k) a[k] = -1;
    } else {  // f = r - 2 kappa + 1
        for (int k = 0; k <= kappa; ++k) a[k] = 1;
        a[r] = -pow_int(P, kappa);
    }
    return a;
}

std::vector<Int> vector_B(long p, int r, int f) {
    if (f < 1) throw std::domain_error("vector_B: need f >= 1");
    if (f >= 2) return vector_A(p, r, f);
    std::vector<Int> b = vector_A(p, r, 0);
    const Int c = pow_int(Int(p), r - 1) * (Int(p) + 1);
    for (Int& e : b) e *= c;
    const std::vector<Int> a1 = vector_A(p, r, 1);
    for (int k = 0; k <= r; ++k) b[k] -= a1[k];
    return b;
}

std::vector<Int> vector_bbA(long p, int r, int f) {
    if (r < 1 || f < 0 || f > r)
        throw std::domain_error("vector_bbA: need 0 <= f <= r");
    const Int P(p);
    std::vector<Int> a(r + 1, Int(0));
    if (f == 0) {
        a[0] = P;
        a[1] = -1;
        return a;
    }
    if (f == 1) {
        a[0] = 1;
        return a;
    }
    if (f == 2) {
        if (r % 2 == 0) {
            a[0] = 1;
            a[r] = -1;
        } else {
            a[1] = 1;
            a[r] = -1;
        }
        return a;
    }
    const int kappa = kappa_of(r, f);
    if ((r - f) % 2 == 0) {  // f = r - 2 kappa
        a[0] = P;
        a[1] = -1;
        a[r - kappa - 1] += 1;
        a[r - kappa] += -P;
    } else {  // f = r - 2 kappa + 1 <= r - 1
        a[kappa] = P;
        a[kappa + 1] = -1;
        a[r - 1] += 1;
        a[r] += -P;
    }
    return a;
}

std::vector<Int> vector_bbB(long p, int r, int f) {
    if (f < 1) throw std::domain_error("vector_bbB: need f >= 1");
    if (f >= 2) return vector_bbA(p, r, f);
    std::vector<Int> b(r + 1, Int(0));
    b[0] = 1;
    b[1] = -1;
    return b;
}

Int g_factor(long p, int r, int f) {
    if (f == 0) return 1;
    if (f == 1) return pow_int(Int(p), r - 1) * (Int(p) * p - 1);
    return pow_int(Int(p), kappa_of(r, f));
}

ZDivisor z_vector(const OrderedLevel& level, long d) {
    if (d <= 1 || level.N() % d != 0)
        throw std::domain_error("z_vector: need d | N, d > 1");
    const std::vector<int> f = level.tuple_of(d);
    const bool squarefree =
        std::all_of(f.begin(), f.end(), [](int e) { return e <= 1; });
    int m = -1;
    if (squarefree)
        for (int i = 0; i < level.s(); ++i)
            if (f[i] == 1) {
                m = i;
                break;
            }

    DivisorVector z{1, {Int(1)}};
    for (int i = 0; i < level.s(); ++i) {
        const long pr = [&] {
            long v = 1;
            for (int k = 0; k < level.r(i); ++k) v *= level.p(i);
            return v;
        }();
        const std::vector<Int> leg = (i == m)
                                         ? vector_B(level.p(i), level.r(i), f[i])
                                         : vector_A(level.p(i), level.r(i), f[i]);
        z = tensor(z, DivisorVector{pr, leg});
    }
    return {d, std::move(z), n_of(level, d)};
}

GroupPresentation cuspidal_group_structure(const OrderedLevel& level) {
    GroupPresentation pres{level, {}, {}};
    for (long d : level.divisors()) {
        if (d == 1) continue;
        ZDivisor z = z_vector(level, d);
        if (d == radical(d))
            pres.squarefree.push_back(std::move(z));
        else
            pres.nonsquarefree.push_back(std::move(z));
    }
    return pres;
}

}  // namespace cuspidal
