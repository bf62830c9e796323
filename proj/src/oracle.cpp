#include "cuspidal/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "cuspidal/arith.hpp"
#include "cuspidal/delta.hpp"
#include "cuspidal/etaq.hpp"
#include "cuspidal/generators.hpp"

namespace cuspidal {

namespace {

int rows_of(const Mat& a) { return static_cast<int>(a.size()); }
int cols_of(const Mat& a) { return a.empty() ? 0 : static_cast<int>(a[0].size()); }

void negate_column(Mat& a, int j) {
    for (auto& row : a) row[j] = -row[j];
}

// col_j -= q * col_k
void submul_column(Mat& a, int j, int k, const Int& q) {
    if (q == 0) return;
    for (auto& row : a) row[j] -= q * row[k];
}

void swap_columns(Mat& a, int j, int k) {
    for (auto& row : a) std::swap(row[j], row[k]);
}

/// Column echelon reduction by unimodular column operations, pivoting only
/// on the first `pivot_rows` rows.  Returns the pivot (row, col) list.
std::vector<std::pair<int, int>> column_echelon(Mat& a, int pivot_rows) {
    const int m = rows_of(a), n = cols_of(a);
    std::vector<std::pair<int, int>> pivots;
    int col = 0;
    for (int i = 0; i < std::min(pivot_rows, m) && col < n; ++i) {
        int piv = -1;
        for (int j = col; j < n; ++j)
            if (a[i][j] != 0) {
                piv = j;
                break;
            }
        if (piv < 0) continue;
        swap_columns(a, col, piv);
        // clear the rest of row i with gcd steps
        for (int j = col + 1; j < n; ++j) {
            while (a[i][j] != 0) {
                const Int q = a[i][col] / a[i][j];
                submul_column(a, col, j, q);
                swap_columns(a, col, j);
            }
        }
        if (a[i][col] < 0) negate_column(a, col);
        // reduce columns left of the pivot
        for (int j = 0; j < col; ++j) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][j].get_mpz_t(),
                       a[i][col].get_mpz_t());
            submul_column(a, j, col, q);
        }
        pivots.emplace_back(i, col);
        ++col;
    }
    return pivots;
}

}  // namespace

Mat hnf_columns(Mat a) {
    if (a.empty()) return a;
    column_echelon(a, rows_of(a));
    // drop zero columns
    Mat out(rows_of(a));
    for (int j = 0; j < cols_of(a); ++j) {
        bool zero = true;
        for (int i = 0; i < rows_of(a); ++i) zero = zero && a[i][j] == 0;
        if (zero) continue;
        for (int i = 0; i < rows_of(a); ++i) out[i].push_back(a[i][j]);
    }
    return out;
}

Mat kernel_columns(const Mat& a) {
    const int m = rows_of(a), n = cols_of(a);
    Mat stacked(m + n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < m; ++i) stacked[i] = a[i];
    for (int j = 0; j < n; ++j) stacked[m + j][j] = 1;
    column_echelon(stacked, m);
    Mat ker(n);
    for (int j = 0; j < n; ++j) {
        bool zero = true;
        for (int i = 0; i < m; ++i) zero = zero && stacked[i][j] == 0;
        if (!zero) continue;
        for (int i = 0; i < n; ++i) ker[i].push_back(stacked[m + i][j]);
    }
    return ker;
}

bool IntegerLattice::contains(const std::vector<Int>& v) const {
    // forward substitution against the HNF basis (pivot rows increasing)
    std::vector<Int> rem = v;
    int col = 0;
    const int n = rank();
    for (int i = 0; i < ambient; ++i) {
        if (col < n && basis[i][col] != 0) {
            if (!divides(basis[i][col], rem[i])) return false;
            const Int q = exact_div(rem[i], basis[i][col]);
            for (int k = i; k < ambient; ++k) rem[k] -= q * basis[k][col];
            ++col;
        }
        if (rem[i] != 0) return false;
    }
    return true;
}

IntegerLattice full_lattice(int k) {
    IntegerLattice L;
    L.ambient = k;
    L.basis.assign(k, std::vector<Int>(k, Int(0)));
    for (int i = 0; i < k; ++i) L.basis[i][i] = 1;
    return L;
}

IntegerLattice congruence_lattice(const Mat& rows, const std::vector<Int>& mods,
                                  int k) {
    const int R = rows_of(rows);
    // c solves the system iff (c, y) lies in the kernel of [rows | diag(mods)]
    Mat a(R, std::vector<Int>(k + R, Int(0)));
    for (int i = 0; i < R; ++i) {
        for (int j = 0; j < k; ++j) a[i][j] = rows[i][j];
        a[i][k + i] = mods[i];
    }
    const Mat ker = kernel_columns(a);
    // the projection onto the first k coordinates is injective on the kernel
    Mat proj(k);
    for (int i = 0; i < k; ++i) proj[i] = ker[i];
    IntegerLattice L;
    L.ambient = k;
    L.basis = hnf_columns(std::move(proj));
    if (cols_of(L.basis) != k)
        throw std::runtime_error("congruence_lattice: unexpected rank deficit");
    return L;
}

IntegerLattice relation_lattice(const OrderedLevel& level) {
    const long N = level.N();
    const std::vector<long>& divs = level.divisors();
    const int nd = static_cast<int>(divs.size());
    const int k = nd - 1;  // coefficients over D_N

    // exact eta exponents r(Z(d)) for each generator
    std::vector<std::vector<Rat>> r(k);
    for (int j = 0; j < k; ++j)
        r[j] = eta_of_divisor(z_vector(level, divs[j + 1]).vec).r;

    Int den = 1;
    for (const auto& col : r)
        for (const Rat& q : col) den = lcm_int(den, q.get_den());
    // integer matrix Q[i][j] = den * r(Z(d_j))_{d'_i}
    Mat Q(nd, std::vector<Int>(k, Int(0)));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < nd; ++i) {
            Rat q = r[j][i] * den;
            q.canonicalize();
            Q[i][j] = q.get_num();
        }

    Mat rows;
    std::vector<Int> mods;
    // (1) integrality of each exponent
    for (int i = 0; i < nd; ++i) {
        rows.push_back(Q[i]);
        mods.push_back(den);
    }
    // (2) sum r d' = 0 mod 24 and (3) sum r N/d' = 0 mod 24
    std::vector<Int> row_b(k, Int(0)), row_c(k, Int(0));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < nd; ++i) {
            row_b[j] += Int(divs[i]) * Q[i][j];
            row_c[j] += Int(N / divs[i]) * Q[i][j];
        }
    rows.push_back(row_b);
    mods.push_back(24 * den);
    rows.push_back(row_c);
    mods.push_back(24 * den);
    // (4) sum of exponents vanishes identically on S(N)^0; checked exactly
    for (int j = 0; j < k; ++j) {
        Int s = 0;
        for (int i = 0; i < nd; ++i) s += Q[i][j];
        if (s != 0)
            throw std::runtime_error("relation_lattice: exponent sum nonzero");
    }
    // (5) per-prime parity of sum r ord_p(d')
    for (const auto& pp : factorize(N).factors) {
        std::vector<Int> row(k, Int(0));
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < nd; ++i) {
                long d = divs[i];
                int v = 0;
                while (d % pp.p == 0) {
                    d /= pp.p;
                    ++v;
                }
                row[j] += v * Q[i][j];
            }
        rows.push_back(std::move(row));
        mods.push_back(2 * den);
    }
    return congruence_lattice(rows, mods, k);
}

IntegerLattice kernel_lattice(const OrderedLevel& level) {
    const std::vector<long>& divs = level.divisors();
    const int k = static_cast<int>(divs.size()) - 1;
    Int L = 1;
    std::vector<Int> n_d(k);
    for (int j = 0; j < k; ++j) {
        n_d[j] = n_of(level, divs[j + 1]);
        L = lcm_int(L, n_d[j]);
    }
    Mat rows;
    std::vector<Int> mods;
    for (int ip = 0; ip + 1 < static_cast<int>(divs.size()); ++ip)
        for (int coord = 0; coord < level.s(); ++coord) {
            std::vector<Int> row(k, Int(0));
            bool nonzero = false;
            for (int j = 0; j < k; ++j) {
                const std::vector<Int> v =
                    omega_class(level, divs[j + 1], divs[ip]);
                row[j] = exact_div(L, n_d[j]) * v[coord];
                nonzero = nonzero || row[j] != 0;
            }
            if (!nonzero) continue;
            rows.push_back(std::move(row));
            mods.push_back(L);
        }
    if (rows.empty()) return full_lattice(k);
    return congruence_lattice(rows, mods, k);
}

namespace {

/// Smith normal form diagonal of X (destructive).
std::vector<Int> snf_diagonal(Mat x) {
    const int m = rows_of(x), n = cols_of(x);
    const int t = std::min(m, n);
    for (int k = 0; k < t; ++k) {
        // move a nonzero entry into (k, k)
        int pi = -1, pj = -1;
        for (int i = k; i < m && pi < 0; ++i)
            for (int j = k; j < n; ++j)
                if (x[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        std::swap(x[k], x[pi]);
        for (int i = 0; i < m; ++i) std::swap(x[i][k], x[i][pj]);

        bool clean = false;
        while (!clean) {
            // clear column k
            for (int i = k + 1; i < m; ++i)
                while (x[i][k] != 0) {
                    const Int q = x[i][k] / x[k][k];
                    for (int j = k; j < n; ++j) x[i][j] -= q * x[k][j];
                    if (x[i][k] != 0) std::swap(x[i], x[k]);
                }
            // clear row k
            bool row_dirty = false;
            for (int j = k + 1; j < n; ++j)
                while (x[k][j] != 0) {
                    const Int q = x[k][j] / x[k][k];
                    for (int i = k; i < m; ++i) x[i][j] -= q * x[i][k];
                    if (x[k][j] != 0) {
                        for (int i = k; i < m; ++i) std::swap(x[i][j], x[i][k]);
                        row_dirty = true;
                    }
                }
            if (row_dirty) continue;  // column may be dirty again
            clean = true;
            // divisibility: x[k][k] must divide the remaining block
            for (int i = k + 1; i < m && clean; ++i)
                for (int j = k + 1; j < n && clean; ++j)
                    if (!divides(x[k][k], x[i][j])) {
                        for (int jj = k; jj < n; ++jj) x[k][jj] += x[i][jj];
                        clean = false;
                    }
        }
    }
    std::vector<Int> diag;
    for (int k = 0; k < t; ++k) {
        Int d = abs(x[k][k]);
        if (d != 0) diag.push_back(d);
    }
    // enforce the divisibility chain
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j)
            if (!divides(diag[i], diag[j])) {
                const Int g = gcd_int(diag[i], diag[j]);
                diag[j] = exact_div(diag[i] * diag[j], g);
                diag[i] = g;
            }
    return diag;
}

}  // namespace

Int AbelianGroupStructure::order() const {
    Int o = 1;
    for (const Int& d : invariant_factors) o *= d;
    return o;
}

AbelianGroupStructure snf_structure(const IntegerLattice& K,
                                    const IntegerLattice& L,
                                    std::optional<Int> l) {
    if (K.ambient != L.ambient || K.rank() != K.ambient ||
        L.rank() != L.ambient)
        throw std::invalid_argument("snf_structure: need full-rank lattices");
    const int k = K.ambient;
    // X = K^{-1} L, integral iff L is contained in K
    Mat X(k, std::vector<Int>(k, Int(0)));
    for (int c = 0; c < k; ++c) {
        std::vector<Int> rem(k);
        for (int i = 0; i < k; ++i) rem[i] = L.basis[i][c];
        int col = 0;
        for (int i = 0; i < k; ++i) {
            if (col < k && K.basis[i][col] != 0) {
                if (!divides(K.basis[i][col], rem[i]))
                    throw std::domain_error("snf_structure: L not inside K");
                const Int q = exact_div(rem[i], K.basis[i][col]);
                X[col][c] = q;
                for (int t = i; t < k; ++t) rem[t] -= q * K.basis[t][col];
                ++col;
            }
            if (rem[i] != 0)
                throw std::domain_error("snf_structure: L not inside K");
        }
    }
    AbelianGroupStructure g;
    for (const Int& d : snf_diagonal(std::move(X)))
        if (d > 1) g.invariant_factors.push_back(d);
    if (l) {
        for (const Int& d : g.invariant_factors) {
            const long v = valuation(d, *l);
            if (v > 0) g.l_primary.push_back(pow_int(*l, v));
        }
        std::sort(g.l_primary.begin(), g.l_primary.end());
    }
    return g;
}

AbelianGroupStructure class_group(const OrderedLevel& level) {
    const IntegerLattice R = relation_lattice(level);
    return snf_structure(full_lattice(R.ambient), R);
}

VerifyReport verify(const OrderedLevel& level) {
    VerifyReport rep;
    rep.N = level.N();
    rep.l = level.l();
    rep.relaxed_ordering = level.relaxed();

    const TorsionStructure ts = torsion_structure(level);
    for (const auto& sm : ts.summands)
        if (sm.valuation > 0) rep.formula.push_back(sm.cyclic_order);
    std::sort(rep.formula.begin(), rep.formula.end());

    const IntegerLattice R = relation_lattice(level);
    const IntegerLattice K = kernel_lattice(level);

    rep.relations_in_kernel = true;
    for (int c = 0; c < R.rank(); ++c) {
        std::vector<Int> v(R.ambient);
        for (int i = 0; i < R.ambient; ++i) v[i] = R.basis[i][c];
        if (!K.contains(v)) {
            rep.relations_in_kernel = false;
            break;
        }
    }
    if (!rep.relations_in_kernel) {
        rep.equal = false;
        rep.note = "principal relations escape the symbolic kernel lattice";
        return rep;
    }

    const AbelianGroupStructure g = snf_structure(K, R, Int(level.l()));
    rep.oracle = g.l_primary;
    rep.equal = rep.formula == rep.oracle;
    if (level.relaxed())
        rep.note = "ordering assumption unsatisfiable; gamma-first ordering used";
    return rep;
}

VerifyReport verify(long N, long l, bool allow_relaxed) {
    return verify(prime_ordering(N, l, allow_relaxed));
}

}  // namespace cuspidal
