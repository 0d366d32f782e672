#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <tuple>

namespace apcover {

// Arbitrary-precision signed integer. All arithmetic in this library is exact;
// instances coming out of hardness reductions are exponentially larger than
// the set size, so fixed-width integers are not an option.
using Integer = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// Floor division (cpp_int's operator/ truncates toward zero).
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
    return -floor_div(-a, b);
}

// Remainder in [0, |b|).
inline Integer mod_floor(const Integer& a, const Integer& b) {
    Integer r = a - floor_div(a, b) * b;
    return r;
}

// Extended gcd: returns (g, s, t) with a*s + b*t = g = gcd(a, b), g >= 0.
inline std::tuple<Integer, Integer, Integer> extended_gcd(Integer a, Integer b) {
    Integer s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        Integer q = a / b;
        Integer r = a - q * b;
        a = b;
        b = r;
        Integer s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        Integer t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    return {a, s0, t0};
}

// Inverse of a modulo m (gcd(a, m) must be 1), result in [0, m).
inline Integer mod_inverse(const Integer& a, const Integer& m) {
    auto [g, s, t] = extended_gcd(a, m);
    (void)g;
    (void)t;
    return mod_floor(s, m);
}

}  // namespace apcover
