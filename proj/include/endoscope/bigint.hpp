#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace endoscope {

using Bigint = boost::multiprecision::cpp_int;

inline Bigint big_pow(const Bigint& base, unsigned exp) {
    Bigint r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

inline Bigint big_gcd(Bigint a, Bigint b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Bigint t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Bigint big_abs(const Bigint& a) { return a < 0 ? Bigint(-a) : a; }

}  // namespace endoscope
