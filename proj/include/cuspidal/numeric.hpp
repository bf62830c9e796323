#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cuspidal {

// All values are exact: arbitrary-precision integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int m;
    mpz_lcm(m.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return m;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool divides(const Int& d, const Int& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exact quotient a/d; throws if d does not divide a.
inline Int exact_div(const Int& a, const Int& d) {
    if (d == 0 || !divides(d, a))
        throw std::domain_error("exact_div: non-exact division");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

/// p-adic valuation of n (n != 0).
inline long valuation(Int n, const Int& p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    long v = 0;
    n = abs(n);
    while (divides(p, n)) {
        n = exact_div(n, p);
        ++v;
    }
    return v;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace cuspidal
