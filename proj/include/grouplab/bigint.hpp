#pragma once
// Arbitrary-precision integers for exact word counts.  Universe sizes grow
// like (2m-1)^ell and overflow 64 bits well inside the supported parameter
// range, so every count that scales with the universe is a BigInt.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace grouplab {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(BigInt base, unsigned long long exp) {
    BigInt result = 1;
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

// floor(x^(1/k)) for x >= 0, k >= 1, by binary search on the bit length.
inline BigInt floor_kth_root(const BigInt& x, unsigned k) {
    if (k == 0) throw std::domain_error("floor_kth_root: k must be >= 1");
    if (x < 0) throw std::domain_error("floor_kth_root: negative radicand");
    if (x <= 1 || k == 1) return x;
    unsigned long long bits = boost::multiprecision::msb(x) + 1;
    BigInt lo = 0, hi = BigInt(1) << (bits / k + 2);
    while (lo < hi) {                       // invariant: answer in [lo, hi)
        BigInt mid = (lo + hi + 1) >> 1;
        if (big_pow(mid, k) <= x) lo = mid; else hi = mid - 1;
    }
    return lo;
}

// Natural logarithm of a positive BigInt, via the top bits plus the exponent.
// Accurate to double precision regardless of magnitude.
inline double big_ln(const BigInt& x) {
    if (x <= 0) throw std::domain_error("big_ln: non-positive argument");
    unsigned long long bits = boost::multiprecision::msb(x) + 1;
    if (bits <= 62) return std::log((double)(unsigned long long)x);
    BigInt top = x >> (bits - 62);
    return std::log((double)(unsigned long long)top) + (double)(bits - 62) * std::log(2.0);
}

inline double big_to_double(const BigInt& x) { return x.convert_to<double>(); }

} // namespace grouplab
