#include "cuspidal/arith.hpp"

#include <stdexcept>

namespace cuspidal {

Int num_lowest(const Int& a, const Int& b) {
    if (a < 1) throw std::domain_error("num_lowest: a must be positive");
    if (b < 1) throw std::domain_error("num_lowest: b must be positive");
    return exact_div(a, gcd_int(a, b));
}

Int k_of_N(long N) {
    if (N < 2) throw std::domain_error("k_of_N: N must be >= 2");
    const Factorization fac = factorize(N);
    Int k = N / radical(N);
    for (const auto& [p, r] : fac.factors) k *= Int(p) * p - 1;
    return k;
}

Int B_of(long p) {
    const Int pm1 = Int(p) - 1;
    return num_lowest(pm1, 24) * 24 / pm1;
}

Int B3_of(long p) {
    const Int pm1 = Int(p) - 1;
    return num_lowest(pm1, 3) * 3 / pm1;
}

int A_of(long p) { return p == 3 ? 3 : 1; }

Int K_p(long p, int j) {
    Int sum = 0;
    for (int i = 0; i <= j; ++i) sum += pow_int(Int(p), 2 * i);
    return sum;
}

int kappa_of(int r, int f) {
    if (f < 2 || f > r) throw std::domain_error("kappa_of: need 2 <= f <= r");
    return f == 2 ? r - 1 : (r + 1 - f) / 2;
}

Int script_G_p(long p, int r, int f) {
    if (p % 2 == 0) throw std::domain_error("script_G_p: p must be odd");
    if (r < 1 || f < 0 || f > r)
        throw std::domain_error("script_G_p: need 1 <= r, 0 <= f <= r");
    const Int pp = p;
    if (f == 0) return pow_int(pp, r - 1) * (pp * pp - 1);
    if (f == 1) return 1;
    return pow_int(pp, r - kappa_of(r, f) - 1) * (pp * pp - 1);
}

Int script_G(const OrderedLevel& level, long d) {
    if (d <= 1) throw std::domain_error("script_G: need d > 1");
    const std::vector<int> f = level.tuple_of(d);
    bool some_ge2 = false;
    for (int fi : f) some_ge2 = some_ge2 || fi >= 2;
    Int g = 1;
    if (some_ge2) {
        for (int i = 0; i < level.s(); ++i)
            g *= script_G_p(level.p(i), level.r(i), f[i]);
        return g;
    }
    int m = -1;
    for (int i = 0; i < level.s(); ++i)
        if (f[i] == 1) {
            m = i;
            break;
        }
    g = Int(level.p(m)) - 1;
    for (int i = 0; i < level.s(); ++i)
        if (i != m) g *= script_G_p(level.p(i), level.r(i), f[i]);
    return g;
}

namespace {

// ones run from a to b inclusive (1-based), zeros elsewhere
bool is_run(const TupleIndices& t, int a, int b) {
    for (int i = 1; i <= t.s(); ++i) {
        const int want = (i >= a && i <= b) ? 1 : 0;
        if (t.at(i) != want) return false;
    }
    return true;
}

}  // namespace

Int M_sf_pattern(const OrderedLevel& level, const std::vector<int>& f) {
    const TupleIndices t = classify_tuple(f);
    const int s = t.s();
    if (!t.m) return 1;
    const int m = *t.m;

    // (0,..,0,1_m,..,1_{s-1},0)
    if (m <= s - 1 && is_run(t, m, s - 1)) return Int(level.p(m - 1)) - 1;
    // (0,..,0,1_m,..,1_s)
    if (is_run(t, m, s))
        return (Int(level.p(m - 1)) - 1) * (Int(level.p(m)) - 1);
    // (0,..,0,1_m,0,..,0,1_j,..,1_s): lone 1 at m, then a final run
    for (int j = m + 2; j <= s; ++j) {
        bool ok = t.at(m) == 1;
        for (int i = 1; i <= s && ok; ++i) {
            const int want = (i == m || (i >= j && i <= s)) ? 1 : 0;
            if (t.at(i) != want) ok = false;
        }
        if (ok) return Int(level.p(j - 1)) - 1;
    }
    // (0,..,0,1_m,..,1_n,0,1_{n+2},..,1_s): two runs split by a single zero,
    // first run of length >= 2
    for (int n = m + 1; n + 2 <= s; ++n) {
        bool ok = true;
        for (int i = 1; i <= s && ok; ++i) {
            const int want = ((i >= m && i <= n) || (i >= n + 2)) ? 1 : 0;
            if (t.at(i) != want) ok = false;
        }
        if (ok) return Int(level.p(m - 1)) - 1;
    }
    return 1;
}

Int M_sf_conditions(const OrderedLevel& level, const std::vector<int>& f) {
    const TupleIndices t = classify_tuple(f);
    const int s = t.s();
    if (!t.m || !t.n || !t.n1) return 1;
    const int m = *t.m, n = *t.n, n1 = *t.n1;
    auto pm1 = [&](int i) -> Int { return Int(level.p(i - 1)) - 1; };  // 1-based

    if (n1 < s - 1) return 1;
    if (n1 == s - 1) return n1 == n ? pm1(m) : Int(1);
    // n' = s
    if (n1 == n) return pm1(m) * pm1(m + 1);
    if (m == n) {
        if (t.n2 && *t.n2 == n1) return pm1(*t.m1);
        return 1;
    }
    if (t.n2 && *t.n2 == n1 && t.m1 && *t.m1 == n + 2) return pm1(m);
    return 1;
}

Int M_fib(const OrderedLevel& level, const std::vector<int>& f) {
    const TupleIndices t = classify_tuple(f);
    if (t.cls != TupleClass::Fib)
        throw std::domain_error("M_fib: tuple not in F_iota^b");
    if (t.step_up(*t.n) == t.s() + 1) return Int(level.p(*t.m - 1)) - 1;
    return 1;
}

Int script_G_M(const OrderedLevel& level, long d) {
    const std::vector<int> f = level.tuple_of(d);
    const TupleIndices t = classify_tuple(f);
    switch (t.cls) {
        case TupleClass::General:
            return script_G(level, d);
        case TupleClass::Fib:
            return M_fib(level, f) * script_G(level, d);
        case TupleClass::Fsf: {
            Int g = M_sf_conditions(level, f);
            for (int i = 0; i < level.s(); ++i)
                g *= script_G_p(level.p(i), level.r(i), f[i]);
            return g;
        }
        default:
            throw std::domain_error("script_G_M: d not in D_N^F");
    }
}

Int n_of(const OrderedLevel& level, long d) {
    return num_lowest(script_G(level, d), 24);
}

Int epsilon_of(const OrderedLevel& level, long d) {
    if (!in_DNF(level, d))
        throw std::domain_error("epsilon_of: d not in D_N^F");
    return num_lowest(script_G_M(level, d), 24);
}

bool in_DNF(const OrderedLevel& level, long d) {
    if (d <= 1 || level.N() % d != 0) return false;
    return factorize(d).num_primes() >= 2;
}

}  // namespace cuspidal
