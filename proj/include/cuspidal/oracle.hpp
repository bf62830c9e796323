#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cuspidal/kernel.hpp"
#include "cuspidal/level.hpp"
#include "cuspidal/numeric.hpp"

namespace cuspidal {

using Mat = std::vector<std::vector<Int>>;  // row-major

/// Column Hermite normal form of the lattice spanned by the columns of A;
/// zero columns are dropped.  Pivots are positive, entries above each pivot
/// are zero and entries to its left are reduced.
Mat hnf_columns(Mat A);

/// Basis (as columns) of the integer kernel {x : A x = 0}.
Mat kernel_columns(const Mat& A);

/// A full-rank sublattice of Z^k, basis columns in HNF.
struct IntegerLattice {
    int ambient = 0;
    Mat basis;  // ambient x rank

    int rank() const { return basis.empty() ? 0 : static_cast<int>(basis[0].size()); }
    bool contains(const std::vector<Int>& v) const;
};

IntegerLattice full_lattice(int k);  // Z^k

/// Solution lattice {c in Z^k : rows[j] . c = 0 mod mods[j] for all j}.
IntegerLattice congruence_lattice(const Mat& rows, const std::vector<Int>& mods,
                                  int k);

/// Lattice of coefficient vectors c with sum c_d Z(d) principal, derived
/// from the modularity congruences on Lambda^{-1}(sum c_d Z(d)).
IntegerLattice relation_lattice(const OrderedLevel& level);

/// Lattice of coefficient vectors c with delta-bar(sum c_d [Z(d)]) = 0,
/// derived from the integrality congruences on the symbolic coefficient
/// classes.
IntegerLattice kernel_lattice(const OrderedLevel& level);

struct AbelianGroupStructure {
    std::vector<Int> invariant_factors;          // d_1 | d_2 | ..., each > 1
    std::vector<Int> l_primary;                  // l^{v_l(d_i)} > 1, if l set
    Int order() const;
};

/// Structure of K / L via the Smith normal form of the matrix expressing
/// L's basis in K's basis; throws if L is not contained in K.
AbelianGroupStructure snf_structure(const IntegerLattice& K,
                                    const IntegerLattice& L,
                                    std::optional<Int> l = std::nullopt);

/// C(N) as Z^{D_N} modulo the relation lattice.
AbelianGroupStructure class_group(const OrderedLevel& level);

struct VerifyReport {
    long N = 0;
    long l = 0;
    bool relaxed_ordering = false;
    bool relations_in_kernel = false;  // relation lattice contained in kernel lattice
    bool equal = false;
    std::vector<Int> formula;  // cyclic orders l^v > 1 from the main formula
    std::vector<Int> oracle;   // cyclic orders from the SNF path
    std::string note;
};

/// Main-theorem structure vs the independent lattice/SNF recomputation.
VerifyReport verify(long N, long l, bool allow_relaxed = true);
VerifyReport verify(const OrderedLevel& level);

}  // namespace cuspidal
