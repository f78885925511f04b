#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "adic/errors.hpp"

namespace adic {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// floor(sqrt(n)) for n >= 0.
inline BigInt isqrt_floor(const BigInt& n) {
    if (n < 0) throw Error("isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

inline BigInt isqrt_ceil(const BigInt& n) {
    BigInt s = isqrt_floor(n);
    return (s * s == n) ? s : s + 1;
}

// floor(a / b) for b > 0 (C++ integer division truncates toward zero).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt floor_rational(const BigRational& q) {
    return floor_div(numerator(q), denominator(q));
}

inline long bit_length(const BigInt& n) {
    if (n == 0) return 0;
    return static_cast<long>(boost::multiprecision::msb(boost::multiprecision::abs(n))) + 1;
}

inline BigInt pow2(long e) {
    BigInt one = 1;
    return one << e;
}

inline std::string rational_to_string(const BigRational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p", "p/q", optional leading sign on p.
BigRational rational_from_string(std::string_view s);

// Decimal rendering with `digits` fractional digits, round toward zero.
std::string rational_to_decimal(const BigRational& q, int digits);

double rational_to_double(const BigRational& q);

}  // namespace adic
