#include "adic/quadratic.hpp"

#include <cmath>

namespace adic {

namespace {

bool is_square_free(unsigned d) {
    for (unsigned p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

}  // namespace

QuadraticReal::QuadraticReal(BigRational a, BigRational b, unsigned d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_ == 0) {
        d_ = 0;
        return;
    }
    if (d_ < 2) throw Error("quadratic radicand must be >= 2");
    if (!is_square_free(d_)) throw Error("radicand must be square-free: " + std::to_string(d_));
}

unsigned QuadraticReal::unify_radicand(const QuadraticReal& x, const QuadraticReal& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw MixedRadicandError("mixed radicands " + std::to_string(x.d_) + " and " +
                             std::to_string(y.d_));
}

QuadraticReal QuadraticReal::operator-() const { return QuadraticReal(-a_, -b_, d_ ? d_ : 2); }

QuadraticReal QuadraticReal::operator+(const QuadraticReal& o) const {
    unsigned d = unify_radicand(*this, o);
    return QuadraticReal(a_ + o.a_, b_ + o.b_, d ? d : 2);
}

QuadraticReal QuadraticReal::operator-(const QuadraticReal& o) const { return *this + (-o); }

QuadraticReal QuadraticReal::operator*(const QuadraticReal& o) const {
    unsigned d = unify_radicand(*this, o);
    BigRational dq(d);
    return QuadraticReal(a_ * o.a_ + dq * b_ * o.b_, a_ * o.b_ + b_ * o.a_, d ? d : 2);
}

QuadraticReal QuadraticReal::inverse() const {
    if (sign() == 0) throw Error("division by zero quadratic value");
    if (b_ == 0) return QuadraticReal(1 / a_);
    // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - d b^2); the norm is
    // nonzero since sqrt(d) is irrational.
    BigRational norm = a_ * a_ - BigRational(d_) * b_ * b_;
    return QuadraticReal(a_ / norm, -b_ / norm, d_);
}

QuadraticReal QuadraticReal::operator/(const QuadraticReal& o) const { return *this * o.inverse(); }

QuadraticReal QuadraticReal::scaled(const BigRational& r) const {
    return QuadraticReal(a_ * r, b_ * r, d_ ? d_ : 2);
}

bool QuadraticReal::operator==(const QuadraticReal& o) const {
    if (a_ != o.a_ || b_ != o.b_) return false;
    return b_ == 0 || d_ == o.d_;
}

int QuadraticReal::sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    BigRational lhs = a_ * a_, rhs = BigRational(d_) * b_ * b_;
    if (lhs == rhs) return 0;  // impossible for square-free d, kept for safety
    return lhs > rhs ? sa : sb;
}

BigInt QuadraticReal::floor() const {
    if (b_ == 0) return floor_rational(a_);
    // Write x = (A + s*sqrt(d)*|B|)/C over a common positive denominator;
    // floor((A + y)/C) = floor((A + floor(y))/C) for integer A, C > 0.
    BigInt ad = denominator(a_), bd = denominator(b_);
    BigInt g = boost::multiprecision::gcd(ad, bd);
    BigInt c = ad / g * bd;
    BigInt A = numerator(a_) * (c / ad);
    BigInt B = numerator(b_) * (c / bd);
    BigInt rad = BigInt(d_) * B * B;
    BigInt y = (B > 0) ? isqrt_floor(rad) : -isqrt_ceil(rad);
    return floor_div(A + y, c);
}

std::pair<BigInt, bool> QuadraticReal::nearest_integer() const {
    BigInt f = floor();
    QuadraticReal frac = *this - QuadraticReal(BigRational(f));
    int cmp = frac.compare(QuadraticReal(BigRational(1, 2)));
    if (cmp < 0) return {f, false};
    if (cmp > 0) return {f + 1, false};
    return {f, true};  // half-integer tie: round down
}

QuadraticReal QuadraticReal::frac_distance() const {
    auto [k, tie] = nearest_integer();
    (void)tie;
    return (*this - QuadraticReal(BigRational(k))).abs();
}

QuadraticReal QuadraticReal::frac() const {
    return *this - QuadraticReal(BigRational(floor()));
}

std::pair<BigInt, BigInt> QuadraticReal::enclosure_numerators(long bits) const {
    // floor/ceil of x * 2^bits via the exact floor machinery.
    BigRational scale = BigRational(pow2(bits));
    QuadraticReal scaled_x = scaled(scale);
    BigInt lo = scaled_x.floor();
    return {lo, lo + 1};
}

double QuadraticReal::to_double() const {
    if (b_ == 0) return rational_to_double(a_);
    // 80-bit enclosure midpoint; adequate for display and heuristics.
    auto [lo, hi] = enclosure_numerators(80);
    BigRational mid = BigRational(lo + hi, 2) / BigRational(pow2(80));
    return rational_to_double(mid);
}

std::string QuadraticReal::str() const {
    if (b_ == 0) return rational_to_string(a_);
    std::string out = rational_to_string(a_);
    out += (b_ < 0) ? "-" : "+";
    BigRational babs = b_ < 0 ? BigRational(-b_) : b_;
    out += rational_to_string(babs) + "*sqrt(" + std::to_string(d_) + ")";
    return out;
}

QuadraticReal QuadraticReal::parse(std::string_view s) {
    size_t sq = s.find("*sqrt(");
    if (sq == std::string_view::npos) return QuadraticReal(rational_from_string(s));
    if (s.back() != ')') throw Error("bad quadratic literal: " + std::string(s));
    std::string_view dpart = s.substr(sq + 6, s.size() - sq - 7);
    unsigned d = static_cast<unsigned>(std::stoul(std::string(dpart)));
    // Split "p/q(+|-)r/s" at the sign that follows the first rational.
    std::string_view head = s.substr(0, sq);
    size_t pos = 0;
    if (pos < head.size() && (head[pos] == '+' || head[pos] == '-')) ++pos;
    while (pos < head.size() && (std::isdigit(static_cast<unsigned char>(head[pos])) || head[pos] == '/')) ++pos;
    if (pos >= head.size() || (head[pos] != '+' && head[pos] != '-'))
        throw Error("bad quadratic literal: " + std::string(s));
    BigRational a = rational_from_string(head.substr(0, pos));
    BigRational b = rational_from_string(head.substr(pos + 1));
    if (head[pos] == '-') b = -b;
    return QuadraticReal(a, b, d);
}

}  // namespace adic
