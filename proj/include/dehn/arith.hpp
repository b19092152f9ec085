#pragma once

#include <cstdint>
#include <numeric>

#include "dehn/errors.hpp"

namespace dehn {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw overflow_error("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) {
    return checked_sub(0, a);
}

inline Int checked_abs(Int a) {
    return a < 0 ? checked_neg(a) : a;
}

// gcd of absolute values, with gcd(0, n) = |n|.
inline Int gcd_abs(Int a, Int b) {
    return std::gcd(checked_abs(a), checked_abs(b));
}

// Remainder in [0, m). Requires m >= 1.
inline Int mod_floor(Int x, Int m) {
    Int r = x % m;
    return r < 0 ? r + m : r;
}

// (a * b) mod m without overflow. Requires m >= 1 and a, b in [0, m).
inline Int mul_mod(Int a, Int b, Int m) {
    using u128 = unsigned __int128;
    return static_cast<Int>((static_cast<u128>(a) * static_cast<u128>(b)) % static_cast<u128>(m));
}

struct Bezout {
    Int g;  // gcd(a, b) >= 0
    Int x;  // x*a + y*b = g
    Int y;
};

inline Bezout extended_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_x - q * x;
        old_x = x;
        x = t;
        t = old_y - q * y;
        old_y = y;
        y = t;
    }
    if (old_r < 0) {
        old_r = checked_neg(old_r);
        old_x = checked_neg(old_x);
        old_y = checked_neg(old_y);
    }
    return {old_r, old_x, old_y};
}

}  // namespace dehn
