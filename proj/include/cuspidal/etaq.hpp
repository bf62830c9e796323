#pragma once

#include <map>
#include <memory>
#include <vector>

#include "cuspidal/cusp.hpp"
#include "cuspidal/numeric.hpp"

namespace cuspidal {

/// Order of vanishing a_N(d, d') = N/gcd(d, N/d) * gcd(d, d')^2 / (d d')
/// of Delta(d'z) at a level-d cusp of X_0(N).
Rat vanishing_order(long N, long d, long dp);

/// Exponent vector of a generalised eta quotient prod eta(d'z)^{r_{d'}},
/// indexed by the divisors of N in ascending order.  Entries are exact
/// rationals.
struct EtaExponentVector {
    long N = 1;
    std::vector<Rat> r;

    bool operator==(const EtaExponentVector&) const = default;
};

EtaExponentVector zero_eta(long N);
EtaExponentVector scale(const Rat& c, const EtaExponentVector& x);
EtaExponentVector add(const EtaExponentVector& x, const EtaExponentVector& y);

/// The matrix (a_N(d, d')/24) and its exact inverse.  Instances are
/// immutable and shared through get().
class Ligozat {
public:
    static std::shared_ptr<const Ligozat> get(long N);

    long N() const { return N_; }
    const std::vector<long>& divisors() const { return divs_; }
    const Rat& entry(int i, int j) const { return lambda_[i][j]; }

    /// Lambda(N) * r, as exact rational divisor coefficients.
    std::vector<Rat> apply(const std::vector<Rat>& r) const;
    /// Lambda(N)^{-1} * v.
    std::vector<Rat> apply_inverse(const std::vector<Rat>& v) const;
    /// Lambda(N) * Lambda(N)^{-1} == I, checked exactly.
    bool inverse_is_exact() const;

private:
    explicit Ligozat(long N);
    long N_;
    std::vector<long> divs_;
    std::vector<std::vector<Rat>> lambda_;
    std::vector<std::vector<Rat>> inverse_;
};

/// Ligozat's criteria for prod eta(d'z)^{r_{d'}} to be a modular function
/// on X_0(N): integral exponents, sum r d' = 0 mod 24, sum r N/d' = 0 mod 24,
/// sum r = 0, and prod d'^{r_{d'}} a rational square.
bool is_modular(const EtaExponentVector& r);

/// div(g_r) as rational coefficients of the P_d, i.e. Lambda(N) * r.
std::vector<Rat> div_of_eta(const EtaExponentVector& r);

/// r(D) = Lambda(N)^{-1} Phi(D) for a degree-zero D.
EtaExponentVector eta_of_divisor(const DivisorVector& D);

/// Data behind the order computation for an integral degree-zero divisor:
/// V = (k(N)/24) r(D), its gcd, the normalized vector, the per-prime parity
/// sums, h in {1,2}, and the order num(k(N) h / (24 gcd)).
struct OrderData {
    std::vector<Int> V;
    Int gcd = 0;
    std::vector<Int> Vnorm;
    std::map<long, Int> Pw;  // prime l | N -> sum over odd-ord_l entries
    int h = 1;
    Int order = 1;
    bool degenerate = false;  // D = 0
};

OrderData order_of_divisor(const DivisorVector& D);

}  // namespace cuspidal
