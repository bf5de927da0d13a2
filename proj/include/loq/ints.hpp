#pragma once

#include <boost/multiprecision/cpp_int.hpp>

// Exact integer and rational arithmetic used everywhere in the library.
// cpp_int is arbitrary precision, so intermediate products cannot wrap.

namespace loq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// floor(a/b) for any signs, b != 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

// nearest integer to a/b (ties rounded up), b > 0.
inline Int round_div(const Int& a, const Int& b) {
    return floor_div(2 * a + b, 2 * b);
}

inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_square(const Int& n) {
    if (n < 0) {
        return false;
    }
    Int r = isqrt(n);
    return r * r == n;
}

// n mod 3 in {0,1,2}.
inline int mod3(const Int& n) {
    int m = static_cast<int>(n % 3);
    return m < 0 ? m + 3 : m;
}

}  // namespace loq
