// Exact integer and rational scalar types shared by every module.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace suspflow {

using Zint = boost::multiprecision::cpp_int;
using Qrat = boost::multiprecision::cpp_rational;

inline Zint znum(const Qrat& q) { return boost::multiprecision::numerator(q); }
inline Zint zden(const Qrat& q) { return boost::multiprecision::denominator(q); }

// Floor division/modulus on Zint (C++ '/' truncates toward zero).
inline Zint floor_div(const Zint& a, const Zint& b) {
    Zint q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Zint floor_mod(const Zint& a, const Zint& b) {
    Zint r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) r += b;
    return r;
}

inline Zint floor_q(const Qrat& q) { return floor_div(znum(q), zden(q)); }

// Fractional part in [0, 1).
inline Qrat mod_one(const Qrat& q) { return q - Qrat(floor_q(q)); }

// Floor of the integer square root; isqrt(n)^2 <= n < (isqrt(n)+1)^2.
inline Zint isqrt(const Zint& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const Zint& n) {
    if (n < 0) return false;
    Zint r = isqrt(n);
    return r * r == n;
}

inline int sign_of(const Zint& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// "p/q" with q omitted when 1; always reduced (Qrat canonicalizes).
std::string rat_to_string(const Qrat& q);
Qrat parse_rational(const std::string& text);

}  // namespace suspflow
