#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "adic/adaptive.hpp"
#include "adic/numbers.hpp"
#include "adic/quadratic.hpp"

namespace adic {

/// One number that is either an exact rational, an exact quadratic real,
/// or an interval enclosure. Mixed arithmetic promotes rational -> quadratic
/// -> adaptive; exact kinds stay exact.
class Scalar {
public:
    enum class Kind { Rational, Quadratic, Adaptive };

    Scalar() : v_(BigRational(0)) {}
    Scalar(BigRational q) : v_(std::move(q)) {}
    Scalar(const BigInt& n) : v_(BigRational(n)) {}
    Scalar(long n) : v_(BigRational(n)) {}
    Scalar(QuadraticReal q);  // collapses to Rational when b == 0
    Scalar(AdaptiveReal a) : v_(std::move(a)) {}

    Kind kind() const { return static_cast<Kind>(v_.index()); }
    bool is_exact() const { return kind() != Kind::Adaptive; }

    const BigRational& rational() const { return std::get<BigRational>(v_); }
    const QuadraticReal& quadratic() const { return std::get<QuadraticReal>(v_); }
    const AdaptiveReal& adaptive() const { return std::get<AdaptiveReal>(v_); }

    // View of an exact scalar as a quadratic (rational lifts with b = 0).
    QuadraticReal as_quadratic() const;
    AdaptiveReal as_adaptive(long bits) const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    // Division of exact scalars only.
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }

    Scalar abs() const;

    // Exact kinds decide; adaptive throws PrecisionExhausted when 0 is interior.
    int sign() const;
    int compare(const Scalar& o) const { return (*this - o).sign(); }
    bool operator<(const Scalar& o) const { return compare(o) < 0; }
    bool operator<=(const Scalar& o) const { return compare(o) <= 0; }
    bool operator>(const Scalar& o) const { return compare(o) > 0; }
    bool operator>=(const Scalar& o) const { return compare(o) >= 0; }
    bool operator==(const Scalar& o) const;

    // Nearest integer with tie flag; adaptive throws when undecidable.
    std::pair<BigInt, bool> nearest_integer() const;
    // Distance to the nearest integer, same kind as the input.
    Scalar frac_distance() const;
    bool is_integer() const;

    double to_double() const;
    // Exact kinds: exact string form. Adaptive: decimal midpoint.
    std::string str() const;
    std::string decimal(int digits = 12) const;

private:
    std::variant<BigRational, QuadraticReal, AdaptiveReal> v_;
};

using ScalarVec = std::vector<Scalar>;

Scalar parse_scalar(const std::string& text);  // "p/q" or "p/q+r/s*sqrt(d)"

}  // namespace adic
