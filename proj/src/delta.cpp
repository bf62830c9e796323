#include "cuspidal/delta.hpp"

#include <algorithm>
#include <stdexcept>

#include "cuspidal/arith.hpp"
#include "cuspidal/generators.hpp"

namespace cuspidal {

namespace {

bool is_squarefree_tuple(const std::vector<int>& f) {
    return std::all_of(f.begin(), f.end(), [](int e) { return e <= 1; });
}

}  // namespace

Int beta_of(const OrderedLevel& level, long d) {
    // the exact proportionality n(N,d) * Lambda^{-1}(Z(d)) = beta * (tensor
    // of the normalized eta-side legs): beta = n(N,d) * 24 * g(N,d) / k(N).
    // For 3 not dividing N this reduces to B(p_1) at d = rad(N) and 1
    // elsewhere; the 3 | N branches need the exact constant.
    const std::vector<int> f = level.tuple_of(d);
    int m = -1;
    if (is_squarefree_tuple(f))
        for (int i = 0; i < level.s(); ++i)
            if (f[i] == 1) {
                m = i;
                break;
            }
    Int g = 1;
    for (int i = 0; i < level.s(); ++i) {
        if (i == m)
            g *= pow_int(Int(level.p(i)), level.r(i) - 1) * (Int(level.p(i)) + 1);
        else
            g *= g_factor(level.p(i), level.r(i), f[i]);
    }
    Rat beta(n_of(level, d) * 24 * g, k_of_N(level.N()));
    beta.canonicalize();
    if (!is_integral(beta) || beta <= 0)
        throw std::runtime_error("beta_of: proportionality not a positive integer");
    return beta.get_num();
}

IndexMachinery index_machinery(const OrderedLevel& level, long d) {
    if (d <= 1 || level.N() % d != 0)
        throw std::domain_error("index_machinery: need d | N, d > 1");
    IndexMachinery im;
    im.d = d;
    im.f = level.tuple_of(d);
    im.beta = beta_of(level, d);
    const int s = level.s();
    if (is_squarefree_tuple(im.f))
        for (int i = 0; i < s; ++i)
            if (im.f[i] == 1) {
                im.m = i;
                break;
            }

    // I(d)_i = {0,1} unless f_i in {1,2}; I'(d)_i = {0,1} iff f_i >= 2 or
    // i = m for squarefree d
    std::vector<int> t(s, 0), tp(s, 0);
    auto free_t = [&](int i) { return im.f[i] != 1 && im.f[i] != 2; };
    auto free_tp = [&](int i) { return im.f[i] >= 2 || i == im.m; };
    std::vector<int> slots;
    for (int i = 0; i < s; ++i) {
        if (free_t(i)) slots.push_back(i);
        if (free_tp(i)) slots.push_back(s + i);
    }
    const std::size_t combos = std::size_t(1) << slots.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
        std::fill(t.begin(), t.end(), 0);
        std::fill(tp.begin(), tp.end(), 0);
        for (std::size_t b = 0; b < slots.size(); ++b)
            if (mask >> b & 1) {
                if (slots[b] < s)
                    t[slots[b]] = 1;
                else
                    tp[slots[b] - s] = 1;
            }
        im.pairs.emplace_back(t, tp);
    }
    return im;
}

std::vector<int> IndexMachinery::tau(const std::vector<int>& t,
                                     const std::vector<int>& tp,
                                     const OrderedLevel& level) const {
    const int s = level.s();
    std::vector<int> out(s, 0);
    for (int i = 0; i < s; ++i) {
        const int fi = f[i], r = level.r(i);
        if (fi >= 3) {
            const int kappa = kappa_of(r, fi);
            if ((r - fi) % 2 == 0) {
                // entries of bbA(r, f): +p at 0, -1 at 1, +1 at r-kappa-1,
                // -p at r-kappa; t picks |p| vs |1|, t' picks the sign
                out[i] = t[i] ? (tp[i] ? r - kappa : 0)
                              : (tp[i] ? 1 : r - kappa - 1);
            } else {
                out[i] = t[i] ? ((1 - tp[i]) * kappa + tp[i] * r)
                              : ((1 - tp[i]) * (r - 1) + tp[i] * (kappa + 1));
            }
        } else if (fi == 2) {
            out[i] = r % 2 == 0 ? tp[i] * r : tp[i] * (r - 1) + 1;
        } else if (fi == 1) {
            out[i] = (i == m) ? tp[i] : 0;
        } else {
            out[i] = 1 - t[i];
        }
    }
    return out;
}

Int IndexMachinery::eps(const std::vector<int>& t, const std::vector<int>& tp,
                        const OrderedLevel& level) const {
    int parity = 0;
    Int mag = 1;
    for (int i = 0; i < level.s(); ++i) {
        if (f[i] == 0)
            parity += 1 - t[i];
        else
            parity += tp[i];
        if (t[i]) mag *= level.p(i);
    }
    return parity % 2 == 0 ? mag : -mag;
}

EtaExponentVector eta_quotient_of_Z(const OrderedLevel& level, long d) {
    const IndexMachinery im = index_machinery(level, d);
    EtaExponentVector eta = zero_eta(level.N());
    for (const auto& [t, tp] : im.pairs) {
        const std::vector<int> tv = im.tau(t, tp, level);
        long dp = 1;
        for (int i = 0; i < level.s(); ++i)
            for (int k = 0; k < tv[i]; ++k) dp *= level.p(i);
        eta.r[level.divisor_index(dp)] += Rat(im.eps(t, tp, level));
    }
    return scale(Rat(im.beta), eta);
}

bool upsilon_check(long p, int r, int f) {
    long N = 1;
    for (int i = 0; i < r; ++i) N *= p;
    const auto lig = Ligozat::get(N);
    const Rat scale_k(k_of_N(N), 24);

    auto upsilon = [&](const std::vector<Int>& v) {
        std::vector<Rat> q(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
        std::vector<Rat> u = lig->apply_inverse(q);
        for (Rat& e : u) {
            e *= scale_k;
            e.canonicalize();
        }
        return u;
    };
    auto equals = [](const std::vector<Rat>& u, const Int& c,
                     const std::vector<Int>& w) {
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i] != Rat(c * w[i])) return false;
        return true;
    };

    if (!equals(upsilon(vector_A(p, r, f)), g_factor(p, r, f),
                vector_bbA(p, r, f)))
        return false;
    if (f >= 1) {
        const Int c = f == 1 ? pow_int(Int(p), r - 1) * (Int(p) + 1)
                             : g_factor(p, r, f);
        if (!equals(upsilon(vector_B(p, r, f)), c, vector_bbB(p, r, f)))
            return false;
    }
    return true;
}

bool OmegaTuple::is_zero() const {
    for (const auto& v : e)
        for (const Int& x : v)
            if (!divides(den, x)) return false;
    return true;
}

bool OmegaTuple::is_zero_odd() const {
    Int odd = den;
    while (odd % 2 == 0) odd /= 2;
    for (const auto& v : e)
        for (const Int& x : v)
            if (!divides(odd, x)) return false;
    return true;
}

bool OmegaTuple::is_zero_at(const Int& l) const {
    const long vd = valuation(den, l);
    if (vd == 0) return true;
    const Int lv = pow_int(l, vd);
    for (const auto& v : e)
        for (const Int& x : v)
            if (x != 0 && !divides(lv, x)) return false;
    return true;
}

OmegaTuple add(const OmegaTuple& x, const OmegaTuple& y) {
    if (x.N != y.N) throw std::invalid_argument("OmegaTuple add: level mismatch");
    OmegaTuple z;
    z.N = x.N;
    z.s = x.s;
    z.den = lcm_int(x.den, y.den);
    const Int cx = exact_div(z.den, x.den), cy = exact_div(z.den, y.den);
    z.e.resize(x.e.size(), std::vector<Int>(x.s, Int(0)));
    for (std::size_t i = 0; i < x.e.size(); ++i)
        for (int j = 0; j < x.s; ++j)
            z.e[i][j] = cx * x.e[i][j] + cy * y.e[i][j];
    return z;
}

std::vector<Int> omega_class(const OrderedLevel& level, long d,
                             long dp) {
    if (d <= 1 || level.N() % d != 0)
        throw std::domain_error("omega_class: need d | N, d > 1");
    if (dp < 1 || level.N() % dp != 0 || dp == level.N())
        throw std::domain_error("omega_class: need d' | N, d' != N");
    const int s = level.s();
    const std::vector<int> f = level.tuple_of(d);
    const std::vector<int> k = level.tuple_of(dp);
    std::vector<Int> out(s, Int(0));

    int ge2 = 0, iota = -1;
    for (int i = 0; i < s; ++i)
        if (f[i] >= 2) {
            ++ge2;
            iota = i;
        }
    if (ge2 >= 2) return out;

    if (ge2 == 1) {
        const int r = level.r(iota), b = f[iota], ki = k[iota];
        const Int p = level.p(iota);
        Int mult = 1;
        for (int i = 0; i < s; ++i)
            if (i != iota && f[i] == 0) mult *= Int(level.p(i)) - 1;
        Int expo = 0;
        if (b == 2) {
            expo = Int(ki == 0 ? r - 1 : r - ki) * A_of(level.p(iota));
        } else {
            const int kappa = kappa_of(r, b);
            if ((r - b) % 2 == 0) {
                if (ki == 0)
                    expo = p * (r - kappa) - (r - kappa - 2);
                else if (ki < r - kappa)
                    expo = p * (r - kappa - ki) - (r - kappa - ki - 1);
            } else {
                if (ki <= kappa)
                    expo = p * (r - kappa) - (r - kappa - 2);
                else if (ki <= r - 1)
                    expo = p * (r - ki) - (r - ki - 1);
            }
        }
        out[iota] = expo * mult;
        return out;
    }

    // all f_i in {0, 1}
    int m = -1;
    for (int i = 0; i < s; ++i)
        if (f[i] == 1) {
            m = i;
            break;
        }
    if (k[m] != 0) return out;
    Int mult = beta_of(level, d);
    for (int i = 0; i < s; ++i)
        if (i != m && f[i] == 0) mult *= Int(level.p(i)) - 1;
    out[m] = mult;
    return out;
}

OmegaTuple delta_bar(const OrderedLevel& level,
                     const std::map<long, Int>& coeffs) {
    OmegaTuple t;
    t.N = level.N();
    t.s = level.s();
    const std::vector<long>& divs = level.divisors();
    t.e.assign(divs.size() - 1, std::vector<Int>(t.s, Int(0)));

    t.den = 1;
    for (long d : divs)
        if (d > 1) t.den = lcm_int(t.den, n_of(level, d));

    for (const auto& [d, c] : coeffs) {
        if (c == 0) continue;
        if (d <= 1 || level.N() % d != 0)
            throw std::domain_error("delta_bar: coefficients must be over D_N");
        const Int w = c * exact_div(t.den, n_of(level, d));
        for (std::size_t j = 0; j + 1 < divs.size(); ++j) {
            const std::vector<Int> v = omega_class(level, d, divs[j]);
            for (int i = 0; i < t.s; ++i) t.e[j][i] += w * v[i];
        }
    }
    return t;
}

}  // namespace cuspidal
