#pragma once

#include <gmpxx.h>

#include <string>

namespace obstrukt {

/// Exact integer type used everywhere; no floats exist in this library.
using Int = mpz_class;

inline Int mod_reduce(const Int& x, const Int& d) {
    // representative of x mod d in [0, d); d >= 1
    Int r = x % d;
    if (r < 0) r += d;
    return r;
}

/// g = gcd(a,b) together with x,y such that a*x + b*y = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline bool divides(const Int& d, const Int& x) {
    if (d == 0) return x == 0;
    return x % d == 0;
}

/// Exact integer square root when n is a perfect square.
inline bool perfect_sqrt(const Int& n, Int& root) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

}  // namespace obstrukt
