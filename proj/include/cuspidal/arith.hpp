#pragma once

#include "cuspidal/level.hpp"
#include "cuspidal/numeric.hpp"
#include "cuspidal/tuples.hpp"

namespace cuspidal {

/// Numerator of a/b in lowest terms; requires a >= 1, b >= 1.
Int num_lowest(const Int& a, const Int& b);

/// k(N) = (N/rad N) * prod_{p|N} (p^2 - 1), N >= 2.
Int k_of_N(long N);

Int B_of(long p);      // num((p-1)/24) * 24/(p-1)
Int B3_of(long p);     // num((p-1)/3)  *  3/(p-1)
int A_of(long p);      // 3 if p = 3, else 1
Int K_p(long p, int j);  // sum_{i=0..j} p^{2i}

/// kappa = r-1 if f = 2, floor((r+1-f)/2) if 3 <= f <= r.
int kappa_of(int r, int f);

/// G_p(r, f): p^{r-1}(p^2-1) at f=0, 1 at f=1, p^{r-kappa-1}(p^2-1) for f>=2.
Int script_G_p(long p, int r, int f);

/// G(N, d) per the two-case rule (some f_i >= 2 vs all f_i in {0,1}).
Int script_G(const OrderedLevel& level, long d);

/// M(f) for all-{0,1} tuples, matched directly against the four tuple shapes.
Int M_sf_pattern(const OrderedLevel& level, const std::vector<int>& f);

/// M(f) for all-{0,1} tuples via the (n, n', m, n'', m') condition table.
Int M_sf_conditions(const OrderedLevel& level, const std::vector<int>& f);

/// M(f) for class-Fib tuples: (p_m - 1) when n_+ = s+1, else 1.
Int M_fib(const OrderedLevel& level, const std::vector<int>& f);

/// G_M(N, d) combining G and M per the three-case rule.
Int script_G_M(const OrderedLevel& level, long d);

/// n(N, d) = num(G(N, d) / 24).
Int n_of(const OrderedLevel& level, long d);

/// epsilon(N, d) = num(G_M(N, d) / 24); requires d in D_N^F.
Int epsilon_of(const OrderedLevel& level, long d);

/// True iff d is divisible by at least two distinct primes of N.
bool in_DNF(const OrderedLevel& level, long d);

}  // namespace cuspidal
