#include "cuspidal/etaq.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

#include "cuspidal/arith.hpp"

namespace cuspidal {

Rat vanishing_order(long N, long d, long dp) {
    if (N < 1 || d < 1 || dp < 1 || N % d != 0 || N % dp != 0)
        throw std::domain_error("vanishing_order: d, d' must divide N");
    const long g = std::gcd(d, dp);
    Rat a(Int(N / std::gcd(d, N / d)) * g * g, Int(d) * dp);
    a.canonicalize();
    return a;
}

EtaExponentVector zero_eta(long N) {
    return {N, std::vector<Rat>(divisors_of(N).size(), Rat(0))};
}

EtaExponentVector scale(const Rat& c, const EtaExponentVector& x) {
    EtaExponentVector z = x;
    for (Rat& e : z.r) {
        e *= c;
        e.canonicalize();
    }
    return z;
}

EtaExponentVector add(const EtaExponentVector& x, const EtaExponentVector& y) {
    if (x.N != y.N) throw std::invalid_argument("add: level mismatch");
    EtaExponentVector z = x;
    for (std::size_t i = 0; i < z.r.size(); ++i) {
        z.r[i] += y.r[i];
        z.r[i].canonicalize();
    }
    return z;
}

Ligozat::Ligozat(long N) : N_(N), divs_(divisors_of(N)) {
    const int n = static_cast<int>(divs_.size());
    lambda_.assign(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            lambda_[i][j] = vanishing_order(N, divs_[i], divs_[j]) / 24;
            lambda_[i][j].canonicalize();
        }

    // exact Gauss-Jordan inversion over Q
    std::vector<std::vector<Rat>> a = lambda_;
    inverse_.assign(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) inverse_[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::runtime_error("Ligozat: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inverse_[piv], inverse_[col]);
        const Rat d = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= d;
            inverse_[col][j] /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const Rat f = a[i][col];
            for (int j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inverse_[i][j] -= f * inverse_[col][j];
            }
        }
    }
}

std::shared_ptr<const Ligozat> Ligozat::get(long N) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const Ligozat>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    auto ptr = std::shared_ptr<const Ligozat>(new Ligozat(N));
    cache.emplace(N, ptr);
    return ptr;
}

std::vector<Rat> Ligozat::apply(const std::vector<Rat>& r) const {
    const int n = static_cast<int>(divs_.size());
    std::vector<Rat> out(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out[i] += lambda_[i][j] * r[j];
        out[i].canonicalize();
    }
    return out;
}

std::vector<Rat> Ligozat::apply_inverse(const std::vector<Rat>& v) const {
    const int n = static_cast<int>(divs_.size());
    std::vector<Rat> out(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out[i] += inverse_[i][j] * v[j];
        out[i].canonicalize();
    }
    return out;
}

bool Ligozat::inverse_is_exact() const {
    const int n = static_cast<int>(divs_.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat s(0);
            for (int k = 0; k < n; ++k) s += lambda_[i][k] * inverse_[k][j];
            if (s != Rat(i == j ? 1 : 0)) return false;
        }
    return true;
}

bool is_modular(const EtaExponentVector& eta) {
    const std::vector<long> divs = divisors_of(eta.N);
    for (const Rat& e : eta.r)
        if (!is_integral(e)) return false;  // condition (1)

    Int s_d = 0, s_Nd = 0, s = 0;
    for (std::size_t i = 0; i < divs.size(); ++i) {
        const Int e = eta.r[i].get_num();
        s_d += e * divs[i];
        s_Nd += e * (eta.N / divs[i]);
        s += e;
    }
    if (s_d % 24 != 0 || s_Nd % 24 != 0 || s != 0) return false;

    // condition (5): prod d'^{r_{d'}} is a square iff for every prime p the
    // exponent sum of p is even
    for (const auto& pp : factorize(eta.N).factors) {
        Int e = 0;
        for (std::size_t i = 0; i < divs.size(); ++i) {
            long d = divs[i];
            int v = 0;
            while (d % pp.p == 0) {
                d /= pp.p;
                ++v;
            }
            e += eta.r[i].get_num() * v;
        }
        if (e % 2 != 0) return false;
    }
    return true;
}

std::vector<Rat> div_of_eta(const EtaExponentVector& r) {
    return Ligozat::get(r.N)->apply(r.r);
}

EtaExponentVector eta_of_divisor(const DivisorVector& D) {
    if (!degree_check(D))
        throw std::domain_error("eta_of_divisor: divisor is not degree zero");
    std::vector<Rat> v(D.a.size());
    for (std::size_t i = 0; i < D.a.size(); ++i) v[i] = Rat(D.a[i]);
    return {D.N, Ligozat::get(D.N)->apply_inverse(v)};
}

OrderData order_of_divisor(const DivisorVector& D) {
    OrderData od;
    bool all_zero = true;
    for (const Int& e : D.a) all_zero = all_zero && e == 0;
    if (all_zero) {
        od.degenerate = true;
        od.V.assign(D.a.size(), Int(0));
        od.Vnorm = od.V;
        return od;
    }

    const EtaExponentVector r = eta_of_divisor(D);
    const Rat kN(k_of_N(D.N), 24);
    od.V.resize(r.r.size());
    for (std::size_t i = 0; i < r.r.size(); ++i) {
        Rat v = kN * r.r[i];
        v.canonicalize();
        if (!is_integral(v))
            throw std::runtime_error("order_of_divisor: V(D) not integral");
        od.V[i] = v.get_num();
    }

    od.gcd = 0;
    for (const Int& e : od.V) od.gcd = gcd_int(od.gcd, e);
    od.Vnorm.resize(od.V.size());
    for (std::size_t i = 0; i < od.V.size(); ++i)
        od.Vnorm[i] = exact_div(od.V[i], od.gcd);

    const std::vector<long> divs = divisors_of(D.N);
    od.h = 1;
    for (const auto& pp : factorize(D.N).factors) {
        Int pw = 0;
        for (std::size_t i = 0; i < divs.size(); ++i) {
            long d = divs[i];
            int v = 0;
            while (d % pp.p == 0) {
                d /= pp.p;
                ++v;
            }
            if (v % 2 == 1) pw += od.Vnorm[i];
        }
        od.Pw[pp.p] = pw;
        if (pw % 2 != 0) od.h = 2;
    }
    od.order = num_lowest(k_of_N(D.N) * od.h, 24 * od.gcd);
    return od;
}

}  // namespace cuspidal
