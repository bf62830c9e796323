#pragma once

#include <optional>
#include <vector>

namespace cuspidal {

/// Classification of an exponent tuple f = (f_1,...,f_s), 0 <= f_i <= r_i.
///   NotInF:  fewer than two nonzero entries.
///   General: at least two entries >= 2.
///   Fib:     exactly one entry >= 2 (at iota, value b) and the rest in {0,1},
///            with at least one 1.
///   Fsf:     all entries in {0,1} with at least two 1s.
enum class TupleClass { NotInF, General, Fib, Fsf };

/// Index data attached to a tuple.  Indices are 1-based as in the usual
/// block-of-ones reading; entries outside 1..s count as 0.  For class Fib,
/// steps i -> i+1 skip over iota.
struct TupleIndices {
    std::vector<int> f;
    TupleClass cls = TupleClass::NotInF;
    int iota = 0;  // 1-based, class Fib only
    int b = 0;     // f_iota, class Fib only
    std::optional<int> m, n, n1, m1, n2;  // m, n, n', m', n''
    int w = 0;     // number of entries equal to 1

    int s() const { return static_cast<int>(f.size()); }
    int at(int i) const {  // 1-based with out-of-range = 0
        return (i >= 1 && i <= s()) ? f[i - 1] : 0;
    }
    /// j+1, skipping iota for class Fib.
    int step_up(int j) const {
        int k = j + 1;
        if (cls == TupleClass::Fib && k == iota) ++k;
        return k;
    }
    int step_down(int j) const {
        int k = j - 1;
        if (cls == TupleClass::Fib && k == iota) --k;
        return k;
    }
};

TupleIndices classify_tuple(const std::vector<int>& f);

/// f with the 0/1 entries at the given 1-based positions swapped (0<->1).
std::vector<int> swap_entries(const std::vector<int>& f,
                              const std::vector<int>& positions);

}  // namespace cuspidal
