#pragma once

#include <map>
#include <vector>

#include "cuspidal/cusp.hpp"
#include "cuspidal/level.hpp"
#include "cuspidal/numeric.hpp"
#include "cuspidal/tuples.hpp"

namespace cuspidal {

/// Tuple membership and index functions m, n, n', m', n'' and w for an
/// exponent tuple over the level's prime ordering.
TupleIndices index_functions(const OrderedLevel& level,
                             const std::vector<int>& f);

/// The divisor D(f) generating ker(delta-bar): Z(f) when two exponents are
/// >= 2, otherwise Z(f) minus the gamma-weighted prime-power or prime part,
/// with the special replacement at p_iota = 3.
DivisorVector D_of_f(const OrderedLevel& level, const std::vector<int>& f);

/// D(f) written as integer coefficients over the generators Z(d), d in D_N.
std::map<long, Int> D_in_Z_basis(const OrderedLevel& level,
                                 const std::vector<int>& f);

/// gamma(f) = prod gamma_i^{1-f_i} over the 0/1 entries (skipping iota for
/// class Fib).
Int gamma_of(const OrderedLevel& level, const std::vector<int>& f);

/// The E'(f) case table carries one ambiguous guard split on its
/// n'' != n' branches; both sign conventions are selectable.  AdjacentMinus
/// takes -E'(f^m) when n = m+1 and +E'(f^m) otherwise; AdjacentPlus swaps
/// the two signs.  AdjacentPlus is the convention under which the
/// selection-entry pattern goes through (first discriminated at s = 6,
/// N = 255255) and is the default.
enum class C3Convention { AdjacentMinus, AdjacentPlus };

/// E(f) = E'(f) / G with G the gcd of the D(f')-ledger coefficients.
struct KernelDivisor {
    std::vector<int> f;
    std::map<std::vector<int>, Int> combo;  // coefficient of each D(f')
    Int G = 1;
    DivisorVector vec;
    std::map<long, Int> z_combo;  // E(f) over the Z(d) basis
};

KernelDivisor E_of_f(const OrderedLevel& level, const std::vector<int>& f,
                     C3Convention conv = C3Convention::AdjacentPlus);

/// The distinguished entry delta_f plus every entry coming later in the
/// case's total order (squarefree divisors for class Fsf, the set B_iota^b
/// for class Fib).
struct SelectionEntry {
    long delta;
    std::vector<long> later;
};

SelectionEntry selection_entry(const OrderedLevel& level,
                               const std::vector<int>& f);

/// V(D(f)) by the tabulated closed forms (the "ledger algebra"), one entry
/// per divisor of N.  This table is not consistent with the direct
/// Upsilon-based V on all inputs; it exists so the selection machinery can
/// be cross-checked under the bookkeeping it was derived in.
std::vector<Int> V_table_of_D(const OrderedLevel& level,
                              const std::vector<int>& f);

/// V(E(f)) by pushing the combo ledger through V_table_of_D and dividing
/// by G.
std::vector<Int> V_table_of_E(const OrderedLevel& level,
                              const KernelDivisor& kd);

/// Comparator of Definition-style ordering on squarefree divisors (encoded
/// as 0/1 tuples over the level ordering): fewer prime factors first, then
/// the tuple whose first differing prime is earlier.
bool sf_tuple_less(const std::vector<int>& a, const std::vector<int>& b);

struct TorsionSummand {
    long d;
    Int epsilon;
    long valuation;
    Int cyclic_order;  // l^valuation
};

/// The l-primary rational torsion of the generalized Jacobian: one summand
/// Z/l^{v_l(epsilon(N,d))} per divisor d of N with two distinct prime
/// factors.  Trivial summands (valuation 0) are retained.
struct TorsionStructure {
    long N = 0;
    long l = 0;
    std::vector<long> ordering;  // primes in the order used
    bool relaxed_ordering = false;
    std::vector<TorsionSummand> summands;
};

/// The ordering assumption is not always satisfiable (it already fails for
/// N = 481, l = 3); by default the gamma-first fallback is used then and the
/// result is marked relaxed_ordering.
TorsionStructure torsion_structure(long N, long l, bool allow_relaxed = true);
TorsionStructure torsion_structure(const OrderedLevel& level);

}  // namespace cuspidal
