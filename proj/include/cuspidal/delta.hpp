#pragma once

#include <map>
#include <vector>

#include "cuspidal/etaq.hpp"
#include "cuspidal/level.hpp"
#include "cuspidal/numeric.hpp"

namespace cuspidal {

/// Index sets I(d), I'(d) and the maps tau, epsilon that expand the eta
/// quotient h_d attached to Z(d): the exponent of eta(prod p_i^{tau_i} z)
/// accumulates epsilon(t, t') over all pairs, all raised to beta(d).
struct IndexMachinery {
    long d;
    std::vector<int> f;
    int m = -1;  // 0-based index of min{i : f_i = 1} for squarefree d, else -1
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
    Int beta;

    std::vector<int> tau(const std::vector<int>& t,
                         const std::vector<int>& tp,
                         const OrderedLevel& level) const;
    Int eps(const std::vector<int>& t, const std::vector<int>& tp,
            const OrderedLevel& level) const;
};

IndexMachinery index_machinery(const OrderedLevel& level, long d);

/// B(p_1) at d = rad(N); B_3(p_1) at d = rad(N)/3 when 3 || N; 1 otherwise.
Int beta_of(const OrderedLevel& level, long d);

/// The eta quotient h_d with div(h_d) = n(N, d) * Z(d).
EtaExponentVector eta_quotient_of_Z(const OrderedLevel& level, long d);

/// Verifies Upsilon(p^r) A_p(r, f) = g_p(r, f) bbA_p(r, f) and the B variant
/// by exact matrix arithmetic.
bool upsilon_check(long p, int r, int f);

/// Element of Omega tensor Q/Z: for every cusp level d' != N an integer
/// exponent vector over the basis {sqrt(p_1*), ..., sqrt(p_s*)}, all divided
/// by a common denominator.  The class of the rational prime p_i has
/// exponent 2 at position i.
struct OmegaTuple {
    long N = 1;
    int s = 0;
    Int den = 1;
    std::vector<std::vector<Int>> e;  // one vector per divisor d' != N

    /// Zero in Omega tensor Q/Z: every entry divisible by den.
    bool is_zero() const;
    /// Zero after discarding 2-primary denominators (each entry integral
    /// once den is stripped of its factor of 2^k).
    bool is_zero_odd() const;
    /// Zero in the l-primary part: v_l(entry) >= v_l(den) everywhere.
    bool is_zero_at(const Int& l) const;
};

OmegaTuple add(const OmegaTuple& x, const OmegaTuple& y);

/// Exponent vector of the leading-coefficient class of h_d at a level-d'
/// cusp, in sqrt(p*) units; the zero vector encodes the class 1.
std::vector<Int> omega_class(const OrderedLevel& level, long d,
                             long dp);

/// delta-bar of sum c_d [Z(d)]: sum c_d (v_{f(d)} tensor 1/n_d) with common
/// denominator lcm(n_d).
OmegaTuple delta_bar(const OrderedLevel& level,
                     const std::map<long, Int>& coeffs);

}  // namespace cuspidal
