#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "adic/numbers.hpp"

namespace adic {

/// Exact element a + b*sqrt(d) of a real quadratic field, d a fixed
/// square-free integer >= 2. Values with b == 0 are radicand-agnostic and
/// combine with any d; mixing two distinct irrational radicands throws.
class QuadraticReal {
public:
    QuadraticReal() : a_(0), b_(0), d_(0) {}
    QuadraticReal(BigRational a, BigRational b, unsigned d);
    explicit QuadraticReal(BigRational a) : a_(std::move(a)), b_(0), d_(0) {}
    explicit QuadraticReal(long a) : a_(a), b_(0), d_(0) {}

    const BigRational& a() const { return a_; }
    const BigRational& b() const { return b_; }
    // 0 when the value is rational (b == 0).
    unsigned d() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    QuadraticReal operator-() const;
    QuadraticReal operator+(const QuadraticReal& o) const;
    QuadraticReal operator-(const QuadraticReal& o) const;
    QuadraticReal operator*(const QuadraticReal& o) const;
    QuadraticReal operator/(const QuadraticReal& o) const;
    QuadraticReal inverse() const;  // throws Error on zero

    QuadraticReal& operator+=(const QuadraticReal& o) { return *this = *this + o; }
    QuadraticReal& operator-=(const QuadraticReal& o) { return *this = *this - o; }
    QuadraticReal& operator*=(const QuadraticReal& o) { return *this = *this * o; }

    QuadraticReal scaled(const BigRational& r) const;

    bool operator==(const QuadraticReal& o) const;
    bool operator!=(const QuadraticReal& o) const { return !(*this == o); }

    // Exact sign in {-1, 0, +1}: case analysis on coefficient signs plus
    // the rational comparison a^2 vs d*b^2.
    int sign() const;
    int compare(const QuadraticReal& o) const { return (*this - o).sign(); }
    bool operator<(const QuadraticReal& o) const { return compare(o) < 0; }
    bool operator<=(const QuadraticReal& o) const { return compare(o) <= 0; }
    bool operator>(const QuadraticReal& o) const { return compare(o) > 0; }
    bool operator>=(const QuadraticReal& o) const { return compare(o) >= 0; }

    QuadraticReal abs() const { return sign() < 0 ? -*this : *this; }

    // Exact floor via one integer square root.
    BigInt floor() const;

    // Nearest integer; ties at half-integers round down and set the flag.
    std::pair<BigInt, bool> nearest_integer() const;

    // |x - nearest_integer(x)|, in [0, 1/2].
    QuadraticReal frac_distance() const;

    // x - floor(x), in [0, 1).
    QuadraticReal frac() const;

    // Dyadic enclosure as (numerator_lo, numerator_hi) at scale 2^-bits:
    // value lies in [lo/2^bits, hi/2^bits], hi - lo <= 2.
    std::pair<BigInt, BigInt> enclosure_numerators(long bits) const;

    double to_double() const;

    // "p/q+r/s*sqrt(d)" (or "p/q-r/s*sqrt(d)"); rationals render as "p/q".
    std::string str() const;
    static QuadraticReal parse(std::string_view s);

private:
    static unsigned unify_radicand(const QuadraticReal& x, const QuadraticReal& y);

    BigRational a_, b_;
    unsigned d_;
};

inline QuadraticReal operator*(const BigRational& r, const QuadraticReal& x) {
    return x.scaled(r);
}

}  // namespace adic
