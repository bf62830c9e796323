#include "cuspidal/tuples.hpp"

#include <stdexcept>

namespace cuspidal {

TupleIndices classify_tuple(const std::vector<int>& f) {
    TupleIndices t;
    t.f = f;
    const int s = t.s();

    int nonzero = 0, ge2 = 0;
    for (int i = 1; i <= s; ++i) {
        if (t.at(i) >= 1) ++nonzero;
        if (t.at(i) >= 2) ++ge2;
        if (t.at(i) == 1) ++t.w;
    }
    if (nonzero < 2) {
        t.cls = TupleClass::NotInF;
        return t;
    }
    if (ge2 >= 2) {
        t.cls = TupleClass::General;
        return t;
    }
    if (ge2 == 1) {
        t.cls = TupleClass::Fib;
        for (int i = 1; i <= s; ++i)
            if (t.at(i) >= 2) {
                t.iota = i;
                t.b = t.at(i);
            }
    } else {
        t.cls = TupleClass::Fsf;
    }

    // m = min{i : f_i = 1}
    for (int i = 1; i <= s; ++i)
        if (t.at(i) == 1) {
            t.m = i;
            break;
        }
    // n = min{i >= m : f_i = 1, f_{i+} = 0}
    if (t.m)
        for (int i = *t.m; i <= s; ++i)
            if (t.at(i) == 1 && t.at(t.step_up(i)) == 0) {
                t.n = i;
                break;
            }
    // n' = max{i : f_i = 1 and f_j != 1 for all j > i}
    for (int i = s; i >= 1; --i)
        if (t.at(i) == 1) {
            t.n1 = i;
            break;
        }
    // m' = min{i : f_i = 1 and f_j = 1 for all i < j < n'}
    if (t.n1)
        for (int i = 1; i <= s; ++i) {
            if (t.at(i) != 1) continue;
            bool run = true;
            for (int j = i + 1; j < *t.n1; ++j)
                if (t.at(j) != 1) {
                    run = false;
                    break;
                }
            if (run) {
                t.m1 = i;
                break;
            }
        }
    // n'' = min{i > n : f_i = 1, f_{i+} = 0}
    if (t.n)
        for (int i = *t.n + 1; i <= s; ++i)
            if (t.at(i) == 1 && t.at(t.step_up(i)) == 0) {
                t.n2 = i;
                break;
            }
    return t;
}

std::vector<int> swap_entries(const std::vector<int>& f,
                              const std::vector<int>& positions) {
    std::vector<int> g = f;
    for (int pos : positions) {
        if (pos < 1 || pos > static_cast<int>(g.size()))
            throw std::domain_error("swap_entries: position out of range");
        int& v = g[pos - 1];
        if (v != 0 && v != 1)
            throw std::domain_error("swap_entries: entry not 0/1");
        v = 1 - v;
    }
    return g;
}

}  // namespace cuspidal
