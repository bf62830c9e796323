#pragma once

#include <vector>

#include "cuspidal/cusp.hpp"
#include "cuspidal/level.hpp"
#include "cuspidal/numeric.hpp"

namespace cuspidal {

/// Orders the primes of N so that ord_l(gamma_i) is non-increasing and
/// ord_l(p_i - 1) is non-decreasing, ties broken by ascending prime value
/// (lexicographically first valid permutation).  Throws if no permutation
/// satisfies both conditions, unless allow_relaxed is set, in which case the
/// gamma condition takes priority and the result is marked relaxed.
OrderedLevel prime_ordering(const Factorization& fac, long l,
                            bool allow_relaxed = false);
OrderedLevel prime_ordering(long N, long l,
                            bool allow_relaxed = false);

/// The r+1 vectors A_p(r, f) in S(p^r), indexed by p^0 .. p^r.
std::vector<Int> vector_A(long p, int r, int f);

/// B_p(r, 1) = p^{r-1}(p+1) A_p(r, 0) - A_p(r, 1); B_p(r, f) = A_p(r, f)
/// for f >= 2.  f = 0 is rejected.
std::vector<Int> vector_B(long p, int r, int f);

/// The eta-exponent side vectors: Upsilon(p^r) A_p(r,f) = g_p(r,f) bbA(r,f)
/// and likewise for B with p^{r-1}(p+1) at f = 1.
std::vector<Int> vector_bbA(long p, int r, int f);
std::vector<Int> vector_bbB(long p, int r, int f);
Int g_factor(long p, int r, int f);

/// Z(d) with its formula order n(N, d).  The true order can differ for
/// squarefree d; tests compare against the modularity oracle.
struct ZDivisor {
    long d;
    DivisorVector vec;
    Int n_d;
};

/// Z(d) = tensor of A_{p_i}(r_i, f_i), with B at position m = min{i: f_i=1}
/// when d is squarefree.
ZDivisor z_vector(const OrderedLevel& level, long d);

/// All generators of C(N): the squarefree part as a joint span, plus one
/// cyclic factor Z(d) of order n(N, d) per non-squarefree d.
struct GroupPresentation {
    OrderedLevel level;
    std::vector<ZDivisor> squarefree;
    std::vector<ZDivisor> nonsquarefree;
};

GroupPresentation cuspidal_group_structure(const OrderedLevel& level);

}  // namespace cuspidal
