#pragma once

#include <optional>
#include <string>
#include <utility>

#include "adic/numbers.hpp"
#include "adic/quadratic.hpp"

namespace adic {

/// Dyadic rational m * 2^e with arbitrary-size mantissa.
struct Dyadic {
    BigInt m;
    long e = 0;

    Dyadic() : m(0) {}
    Dyadic(BigInt mant, long exp) : m(std::move(mant)), e(exp) { normalize(); }
    explicit Dyadic(long v) : m(v) {}

    void normalize();

    bool is_zero() const { return m == 0; }
    int sign() const { return m == 0 ? 0 : (m < 0 ? -1 : 1); }

    Dyadic operator-() const { return Dyadic(-m, e); }
    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const { return *this + (-o); }
    Dyadic operator*(const Dyadic& o) const { return Dyadic(m * o.m, e + o.e); }
    Dyadic abs() const { return Dyadic(boost::multiprecision::abs(m), e); }

    int compare(const Dyadic& o) const { return (*this - o).sign(); }
    bool operator<(const Dyadic& o) const { return compare(o) < 0; }
    bool operator<=(const Dyadic& o) const { return compare(o) <= 0; }
    bool operator==(const Dyadic& o) const { return compare(o) == 0; }

    BigRational to_rational() const;
    static Dyadic from_rational_up(const BigRational& q, long bits);    // >= q
    static Dyadic from_rational_down(const BigRational& q, long bits);  // <= q

    // Nearest dyadic at mantissa target `bits`; returns rounding error bound.
    Dyadic rounded(long bits, Dyadic* err) const;
    // Smallest coarse dyadic >= *this (requires *this >= 0); 16-bit mantissa.
    Dyadic rounded_up_coarse() const;

    double to_double() const;
    std::string decimal(int digits) const { return rational_to_decimal(to_rational(), digits); }
};

/// Interval arithmetic value: the true number lies in [mid - rad, mid + rad].
/// `prec` records the working precision in bits used when compressing
/// mantissas; arithmetic never drops the enclosure property.
class AdaptiveReal {
public:
    AdaptiveReal() : prec_(64) {}
    AdaptiveReal(Dyadic mid, Dyadic rad, long prec);

    static AdaptiveReal exact_integer(const BigInt& v, long prec);
    static AdaptiveReal from_rational(const BigRational& q, long bits);
    static AdaptiveReal from_quadratic(const QuadraticReal& x, long bits);

    const Dyadic& mid() const { return mid_; }
    const Dyadic& rad() const { return rad_; }
    long prec() const { return prec_; }

    Dyadic lower() const { return mid_ - rad_; }
    Dyadic upper() const { return mid_ + rad_; }

    AdaptiveReal operator-() const { return AdaptiveReal(-mid_, rad_, prec_); }
    AdaptiveReal operator+(const AdaptiveReal& o) const;
    AdaptiveReal operator-(const AdaptiveReal& o) const;
    AdaptiveReal operator*(const AdaptiveReal& o) const;
    AdaptiveReal scaled(const BigRational& r) const;
    AdaptiveReal abs() const;

    // Sign if the interval decides it, nullopt otherwise.
    std::optional<int> try_sign() const;

    // Nearest integer if the interval avoids every half-integer boundary.
    std::optional<BigInt> try_nearest_integer() const;

    // Enclosure of |x - k| for the decided nearest k; nullopt if undecided.
    std::optional<AdaptiveReal> try_frac_distance() const;

    double to_double() const { return mid_.to_double(); }
    std::string decimal(int digits) const { return mid_.decimal(digits); }

private:
    void compress();

    Dyadic mid_, rad_;
    long prec_;
};

}  // namespace adic
