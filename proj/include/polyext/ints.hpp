#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace polyext {

// Exact arbitrary-precision integer. Everything in the library computes over
// these; intermediate values in eliminations can exceed 64 bits even when the
// inputs and invariant factors are tiny.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return abs_int(a / gcd_int(a, b) * b);
}

// Prime factorization by trial division; fine for the sizes that show up as
// invariant factors here. Returns (prime, exponent) pairs, primes ascending.
std::vector<std::pair<Int, int>> factorize(Int n);

std::string int_to_string(const Int& v);

}  // namespace polyext
