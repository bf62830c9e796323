#include "cuspidal/kernel.hpp"

#include <algorithm>
#include <stdexcept>

#include "cuspidal/arith.hpp"
#include "cuspidal/generators.hpp"

namespace cuspidal {

TupleIndices index_functions(const OrderedLevel& level,
                             const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != level.s())
        throw std::invalid_argument("index_functions: tuple length mismatch");
    for (int i = 0; i < level.s(); ++i)
        if (f[i] < 0 || f[i] > level.r(i))
            throw std::domain_error("index_functions: exponent out of range");
    return classify_tuple(f);
}

std::map<long, Int> D_in_Z_basis(const OrderedLevel& level,
                                 const std::vector<int>& f) {
    const TupleIndices t = index_functions(level, f);
    const long d = level.divisor_of(f);
    std::map<long, Int> c;
    switch (t.cls) {
        case TupleClass::General:
            c[d] = 1;
            return c;
        case TupleClass::Fib: {
            const int iota = t.iota;  // 1-based
            const long p_iota = level.p(iota - 1);
            // p_iota = 3 replacement at f = (1,...,1,2_iota,1,...,1)
            if (p_iota == 3 && t.b == 2 && t.w == level.s() - 1) {
                Int coef = Int(p_iota) * p_iota - 1;
                for (int i = 0; i < level.s(); ++i)
                    if (i != iota - 1)
                        coef *= pow_int(Int(level.p(i)), level.r(i) - 1) *
                                (Int(level.p(i)) + 1);
                c[9] = coef;
                return c;
            }
            Int coef = 1;
            for (int i = 0; i < level.s(); ++i)
                if (i != iota - 1 && f[i] == 1) coef *= level.gamma(i);
            long pb = 1;
            for (int k = 0; k < t.b; ++k) pb *= p_iota;
            c[d] += 1;
            c[pb] -= coef;
            return c;
        }
        case TupleClass::Fsf: {
            const int m = *t.m;  // 1-based
            Int coef = 1;
            for (int i = 0; i < level.s(); ++i)
                if (i != m - 1 && f[i] == 1) coef *= level.gamma(i);
            c[d] += 1;
            c[level.p(m - 1)] -= coef;
            return c;
        }
        default:
            throw std::domain_error("D_in_Z_basis: f not in F");
    }
}

DivisorVector D_of_f(const OrderedLevel& level, const std::vector<int>& f) {
    DivisorVector v = zero_vector(level.N());
    for (const auto& [d, c] : D_in_Z_basis(level, f))
        if (c != 0) v = add(v, scale(c, z_vector(level, d).vec));
    return v;
}

Int gamma_of(const OrderedLevel& level, const std::vector<int>& f) {
    const TupleIndices t = classify_tuple(f);
    Int g = 1;
    for (int i = 0; i < level.s(); ++i) {
        if (t.cls == TupleClass::Fib && i == t.iota - 1) continue;
        if (f[i] == 0) g *= level.gamma(i);
    }
    return g;
}

namespace {

using Ledger = std::map<std::vector<int>, Int>;

void accumulate(Ledger& into, const Ledger& from, const Int& c) {
    for (const auto& [key, v] : from) into[key] += c * v;
}

/// E'(f) as a ledger of D(f') coefficients.
Ledger eprime(const OrderedLevel& level, const std::vector<int>& f,
              C3Convention conv, std::map<std::vector<int>, Ledger>& memo) {
    if (auto it = memo.find(f); it != memo.end()) return it->second;
    const TupleIndices t = classify_tuple(f);
    Ledger led;
    auto D = [&](const std::vector<int>& g, const Int& c) {
        led[g] += c * gamma_of(level, g);  // c * D_gamma(g)
    };
    auto E = [&](const std::vector<int>& g, const Int& c) {
        accumulate(led, eprime(level, g, conv, memo), c);
    };
    auto sw = [&](std::initializer_list<int> pos) {
        return swap_entries(f, std::vector<int>(pos));
    };

    if (t.cls == TupleClass::General) {
        led[f] = 1;
        memo[f] = led;
        return led;
    }
    if (t.cls == TupleClass::Fib) {
        const int s = t.s(), m = *t.m, n = *t.n;
        D(f, 1);
        if (t.step_up(m) != s + 1) {
            if (t.step_up(n) == s + 1)
                D(sw({m}), -1);
            else
                D(sw({n, t.step_up(n)}), -1);
        }
        memo[f] = led;
        return led;
    }
    if (t.cls != TupleClass::Fsf) throw std::domain_error("eprime: f not in F");

    const int s = t.s(), m = *t.m, n = *t.n, n1 = *t.n1, w = t.w;
    const int nu = n + 1, n1u = n1 + 1;  // n_+, n'_+ (no iota skips here)
    if (n1 < s - 1) {
        if (n1 == n) {  // 1.A
            D(f, 1);
            D(sw({n1, n1u}), -1);
            D(sw({m, s}), -1);
            D(sw({n1, n1u, m, s}), 1);
            if (w >= 3) E(sw({m}), 1);
        } else if (m == n) {  // 1.B
            D(f, 1);
            D(sw({n1, n1u}), -1);
            D(sw({m, m + 1}), -1);
            D(sw({n1, n1u, m, m + 1}), 1);
        } else {  // 1.C
            D(f, 1);
            D(sw({n1, n1u}), -1);
            D(sw({n, nu}), -1);
            D(sw({n1, n1u, n, nu}), 1);
            E(sw({m}), 1);
        }
    } else if (n1 == s - 1) {
        if (n1 == n) {  // 2.A
            D(f, 1);
            D(sw({n1, n1u}), -1);
        } else if (m == n) {  // 2.B
            D(f, 1);
            D(sw({n1, n1u}), -1);
            D(sw({m, m + 1}), -1);
            D(sw({n1, n1u, m, m + 1}), 1);
        } else {  // 2.C
            D(f, 1);
            D(sw({n1, n1u}), -1);
            D(sw({n, nu}), -1);
            D(sw({n1, n1u, n, nu}), 1);
            E(sw({m}), 1);
        }
    } else {  // n' = s
        if (n1 == n) {  // 3.A
            D(f, 1);
            if (w >= 3) D(sw({m + 1}), -1);
        } else if (m == n) {  // 3.B
            D(f, 1);
            if (w == 2) {
                D(sw({m, m + 1}), -1);
            } else if (t.n2 && *t.n2 == n1) {
                D(sw({m, m + 1}), -1);
                D(sw({*t.m1}), -1);
                D(sw({m, m + 1, *t.m1}), 1);
            } else {
                const int n2 = *t.n2;
                D(sw({m, m + 1}), -1);
                D(sw({n2, n2 + 1}), -1);
                D(sw({m, m + 1, n2, n2 + 1}), 1);
            }
        } else {  // 3.C
            const int m1 = *t.m1, n2 = *t.n2;
            if (n2 == n1 && m1 == n + 2) {
                D(f, 1);
                D(sw({n, nu}), -1);
            } else if (n2 == n1 && n == m + 1) {
                D(f, 1);
                D(sw({n, nu}), -1);
                E(sw({m, m1 - 1}), -Int(level.p(m1 - 2)));  // -p_{m'_-} E'(f^{m, m'_-})
            } else if (n2 == n1) {
                D(f, 1);
                D(sw({n, nu}), -1);
                E(sw({m}), 1);
            } else {
                // n'' != n': the two printed branches share one guard with
                // opposite signs on E'(f^m); the convention picks the split
                const bool adjacent = n == m + 1;
                const int sign_adj = conv == C3Convention::AdjacentMinus ? -1 : 1;
                D(f, 1);
                D(sw({n, nu}), -1);
                D(sw({n2, n2 + 1}), -1);
                D(sw({n, nu, n2, n2 + 1}), 1);
                E(sw({m}), adjacent ? sign_adj : -sign_adj);
            }
        }
    }
    memo[f] = led;
    return led;
}

}  // namespace

KernelDivisor E_of_f(const OrderedLevel& level, const std::vector<int>& f,
                     C3Convention conv) {
    const TupleIndices t = index_functions(level, f);
    if (t.cls == TupleClass::NotInF)
        throw std::domain_error("E_of_f: f not in F");
    KernelDivisor kd;
    kd.f = f;
    std::map<std::vector<int>, Ledger> memo;
    kd.combo = eprime(level, f, conv, memo);

    kd.G = 0;
    for (const auto& [g, c] : kd.combo) kd.G = gcd_int(kd.G, c);
    if (kd.G == 0) throw std::runtime_error("E_of_f: empty ledger");

    for (const auto& [g, c] : kd.combo) {
        if (c == 0) continue;
        const Int cg = exact_div(c, kd.G);
        for (const auto& [d, zc] : D_in_Z_basis(level, g))
            kd.z_combo[d] += cg * zc;
    }
    DivisorVector sum = zero_vector(level.N());
    for (const auto& [d, c] : kd.z_combo)
        if (c != 0) sum = add(sum, scale(c, z_vector(level, d).vec));
    kd.vec = std::move(sum);
    return kd;
}

std::vector<Int> V_table_of_D(const OrderedLevel& level,
                              const std::vector<int>& f) {
    const TupleIndices t = index_functions(level, f);
    const std::vector<long>& divs = level.divisors();
    std::vector<Int> out(divs.size(), Int(0));
    const int s = level.s();
    auto ppow = [&](int j, int e) -> Int {  // p_j^{1-e} for e in {0,1}
        return e == 0 ? Int(level.p(j)) : Int(1);
    };

    if (t.cls == TupleClass::Fsf) {
        const int m = *t.m;  // 1-based
        Int base = 1;
        for (int j = 0; j < s; ++j)
            if (f[j] == 1) base *= level.gamma(j);
        for (std::size_t i = 0; i < divs.size(); ++i) {
            const std::vector<int> e = level.tuple_of(divs[i]);
            bool squarefree = true;
            int esum = 0;
            for (int x : e) {
                squarefree = squarefree && x <= 1;
                esum += x;
            }
            if (!squarefree) continue;
            Int t1 = 1, t2 = 1;
            for (int j = 0; j < s; ++j) {
                if (f[j] == 1 && j != m - 1) t1 *= ppow(j, e[j]) - 1;
                if (f[j] == 0) t1 *= ppow(j, e[j]);
                if (j != m - 1) t2 *= ppow(j, e[j]);
            }
            out[i] = (esum % 2 == 0 ? 1 : -1) * base * (t1 - t2);
        }
        return out;
    }
    if (t.cls == TupleClass::Fib) {
        const int iota = t.iota;  // 1-based
        const int r = level.r(iota - 1), b = t.b;
        const std::vector<Int> bbA = vector_bbA(level.p(iota - 1), r, b);
        const Int pk = pow_int(Int(level.p(iota - 1)), kappa_of(r, b));
        Int base = 1;
        for (int j = 0; j < s; ++j)
            if (j != iota - 1 && f[j] == 1) base *= level.gamma(j);
        for (std::size_t i = 0; i < divs.size(); ++i) {
            const std::vector<int> e = level.tuple_of(divs[i]);
            bool ok = true;
            int esum = 0;
            for (int j = 0; j < s; ++j) {
                if (j != iota - 1 && e[j] > 1) ok = false;
                if (j != iota - 1) esum += e[j];
            }
            if (!ok) continue;
            Int t1 = 1, t2 = 1;
            for (int j = 0; j < s; ++j) {
                if (j == iota - 1) continue;
                if (f[j] == 1) t1 *= ppow(j, e[j]) - 1;
                if (f[j] == 0) t1 *= ppow(j, e[j]);
                t2 *= ppow(j, e[j]);
            }
            out[i] = pk * bbA[e[iota - 1]] * (esum % 2 == 0 ? 1 : -1) * base *
                     (t1 - t2);
        }
        return out;
    }
    throw std::domain_error("V_table_of_D: tuple not in F_sf or F_iota^b");
}

std::vector<Int> V_table_of_E(const OrderedLevel& level,
                              const KernelDivisor& kd) {
    std::vector<Int> out(level.divisors().size(), Int(0));
    for (const auto& [g, c] : kd.combo) {
        if (c == 0) continue;
        const std::vector<Int> vg = V_table_of_D(level, g);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * vg[i];
    }
    for (Int& x : out) x = exact_div(x, kd.G);
    return out;
}

bool sf_tuple_less(const std::vector<int>& a, const std::vector<int>& b) {
    int na = 0, nb = 0;
    for (int x : a) na += x;
    for (int x : b) nb += x;
    if (na != nb) return na < nb;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];  // first difference: 1 in a wins
    return false;
}

namespace {

int u_iota(int b, int r) {
    if (b == 2) return r % 2 == 0 ? 0 : 1;
    return (r - b) % 2 == 0 ? 1 : r - 1;
}

}  // namespace

SelectionEntry selection_entry(const OrderedLevel& level,
                               const std::vector<int>& f) {
    const TupleIndices t = index_functions(level, f);
    const int s = t.s();
    auto complement_divisor = [&](bool skip_iota) {
        long d = 1;
        for (int i = 1; i <= s; ++i) {
            if (skip_iota && i == t.iota) continue;
            if (t.at(i) == 0) d *= level.p(i - 1);
        }
        return d;
    };

    if (t.cls == TupleClass::Fsf) {
        const int m = *t.m, n = *t.n, n1 = *t.n1;
        long delta = complement_divisor(false);
        if (n1 == s - 1) {
            if (n1 == n) delta *= level.p(m - 1);
        } else if (n1 == s) {
            if (n1 == n)
                delta *= level.p(m - 1) * level.p(m);
            else if (m == n && t.n2 && *t.n2 == n1)
                delta *= level.p(*t.m1 - 1);
            else if (m != n && t.n2 && *t.n2 == n1 && t.m1 && *t.m1 == n + 2)
                delta *= level.p(m - 1);
        }
        // index set: all squarefree divisors of N including 1, ordered
        std::vector<std::vector<int>> sf;
        for (long dv : level.divisors()) {
            std::vector<int> g = level.tuple_of(dv);
            if (std::all_of(g.begin(), g.end(), [](int e) { return e <= 1; }))
                sf.push_back(std::move(g));
        }
        std::sort(sf.begin(), sf.end(), sf_tuple_less);
        SelectionEntry se{delta, {}};
        const std::vector<int> dtuple = level.tuple_of(delta);
        bool past = false;
        for (const auto& g : sf) {
            if (past) se.later.push_back(level.divisor_of(g));
            if (g == dtuple) past = true;
        }
        return se;
    }

    if (t.cls == TupleClass::Fib) {
        const int m = *t.m, n = *t.n;
        const int u = u_iota(t.b, level.r(t.iota - 1));
        long pu = 1;
        for (int k = 0; k < u; ++k) pu *= level.p(t.iota - 1);
        long delta = pu * complement_divisor(true);
        if (t.step_up(n) == s + 1) delta *= level.p(m - 1);

        // index set B_iota^b = p_iota^u times the squarefree divisors in the
        // remaining primes, ordered by the induced squarefree order
        std::vector<std::vector<int>> sf;
        for (long dv : level.divisors()) {
            std::vector<int> g = level.tuple_of(dv);
            if (g[t.iota - 1] != 0) continue;
            bool ok = true;
            for (int i = 0; i < s; ++i) ok = ok && g[i] <= 1;
            if (ok) sf.push_back(std::move(g));
        }
        std::sort(sf.begin(), sf.end(), [&](const auto& a, const auto& b) {
            std::vector<int> ar, br;  // drop the iota coordinate
            for (int i = 0; i < s; ++i)
                if (i != t.iota - 1) {
                    ar.push_back(a[i]);
                    br.push_back(b[i]);
                }
            return sf_tuple_less(ar, br);
        });
        SelectionEntry se{delta, {}};
        bool past = false;
        for (const auto& g : sf) {
            const long dv = pu * level.divisor_of(g);
            if (past) se.later.push_back(dv);
            if (dv == delta) past = true;
        }
        return se;
    }
    throw std::domain_error("selection_entry: f not in F_sf or F_iota^b");
}

TorsionStructure torsion_structure(const OrderedLevel& level) {
    TorsionStructure ts;
    ts.N = level.N();
    ts.l = level.l();
    ts.relaxed_ordering = level.relaxed();
    for (int i = 0; i < level.s(); ++i) ts.ordering.push_back(level.p(i));
    const Int L(level.l());
    for (long d : level.divisors()) {
        if (!in_DNF(level, d)) continue;
        TorsionSummand sm;
        sm.d = d;
        sm.epsilon = epsilon_of(level, d);
        sm.valuation = valuation(sm.epsilon, L);
        sm.cyclic_order = pow_int(L, sm.valuation);
        ts.summands.push_back(std::move(sm));
    }
    return ts;
}

TorsionStructure torsion_structure(long N, long l,
                                   bool allow_relaxed) {
    return torsion_structure(prime_ordering(N, l, allow_relaxed));
}

}  // namespace cuspidal
