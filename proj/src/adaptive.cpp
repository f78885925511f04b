#include "adic/adaptive.hpp"

#include <cmath>

namespace adic {

void Dyadic::normalize() {
    if (m == 0) {
        e = 0;
        return;
    }
    unsigned long z = boost::multiprecision::lsb(boost::multiprecision::abs(m));
    if (z > 0) {
        m >>= z;
        e += static_cast<long>(z);
    }
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    if (m == 0) return o;
    if (o.m == 0) return *this;
    long e0 = std::min(e, o.e);
    BigInt s = (m << (e - e0)) + (o.m << (o.e - e0));
    return Dyadic(s, e0);
}

BigRational Dyadic::to_rational() const {
    if (e >= 0) return BigRational(m << e);
    return BigRational(m, pow2(-e));
}

Dyadic Dyadic::from_rational_up(const BigRational& q, long bits) {
    // ceil(q * 2^bits) / 2^bits
    BigInt num = numerator(q) << bits;
    BigInt f = floor_div(num, denominator(q));
    if (f * denominator(q) != num) f += 1;
    return Dyadic(f, -bits);
}

Dyadic Dyadic::from_rational_down(const BigRational& q, long bits) {
    BigInt num = numerator(q) << bits;
    return Dyadic(floor_div(num, denominator(q)), -bits);
}

Dyadic Dyadic::rounded(long bits, Dyadic* err) const {
    long len = bit_length(m);
    if (len <= bits) {
        if (err) *err = Dyadic();
        return *this;
    }
    long drop = len - bits;
    BigInt q = m >> drop;
    Dyadic out(q, e + drop);
    if (err) *err = Dyadic(1, e + drop);  // |m - (q << drop)| < 2^drop
    return out;
}

Dyadic Dyadic::rounded_up_coarse() const {
    if (m < 0) throw Error("rounded_up_coarse of negative dyadic");
    long len = bit_length(m);
    if (len <= 16) return *this;
    long drop = len - 16;
    BigInt q = (m >> drop) + 1;
    return Dyadic(q, e + drop);
}

double Dyadic::to_double() const {
    long len = bit_length(m);
    if (len <= 62) return std::ldexp(static_cast<double>(m.convert_to<long long>()), static_cast<int>(e));
    long drop = len - 62;
    BigInt q = m >> drop;
    return std::ldexp(static_cast<double>(q.convert_to<long long>()), static_cast<int>(e + drop));
}

AdaptiveReal::AdaptiveReal(Dyadic mid, Dyadic rad, long prec)
    : mid_(std::move(mid)), rad_(std::move(rad)), prec_(prec) {
    if (rad_.sign() < 0) throw Error("negative enclosure radius");
    if (prec_ < 4) prec_ = 4;
    compress();
}

AdaptiveReal AdaptiveReal::exact_integer(const BigInt& v, long prec) {
    return AdaptiveReal(Dyadic(v, 0), Dyadic(), prec);
}

AdaptiveReal AdaptiveReal::from_rational(const BigRational& q, long bits) {
    BigInt num = numerator(q) << (bits + 2);
    BigInt den = denominator(q);
    if (num % den == 0)  // exactly dyadic at this precision
        return AdaptiveReal(Dyadic(num / den, -(bits + 2)), Dyadic(), bits);
    Dyadic mid = Dyadic(floor_div(num, den), -(bits + 2));
    // true value within (mid, mid + 2^-(bits+2))
    Dyadic half(1, -(bits + 3));
    return AdaptiveReal(mid + half, half, bits);
}

AdaptiveReal AdaptiveReal::from_quadratic(const QuadraticReal& x, long bits) {
    if (x.is_rational()) return from_rational(x.a(), bits);
    auto [lo, hi] = x.enclosure_numerators(bits + 2);
    Dyadic dlo(lo, -(bits + 2)), dhi(hi, -(bits + 2));
    Dyadic mid = (dlo + dhi) * Dyadic(1, -1);
    Dyadic rad = (dhi - dlo) * Dyadic(1, -1);
    return AdaptiveReal(mid, rad, bits);
}

void AdaptiveReal::compress() {
    Dyadic err;
    Dyadic nm = mid_.rounded(prec_ + 16, &err);
    if (!err.is_zero()) {
        mid_ = nm;
        rad_ = rad_ + err;
    }
    if (bit_length(rad_.m) > 16) rad_ = rad_.rounded_up_coarse();
}

AdaptiveReal AdaptiveReal::operator+(const AdaptiveReal& o) const {
    return AdaptiveReal(mid_ + o.mid_, rad_ + o.rad_, std::max(prec_, o.prec_));
}

AdaptiveReal AdaptiveReal::operator-(const AdaptiveReal& o) const { return *this + (-o); }

AdaptiveReal AdaptiveReal::operator*(const AdaptiveReal& o) const {
    Dyadic nm = mid_ * o.mid_;
    Dyadic nr = mid_.abs() * o.rad_ + o.mid_.abs() * rad_ + rad_ * o.rad_;
    return AdaptiveReal(nm, nr, std::max(prec_, o.prec_));
}

AdaptiveReal AdaptiveReal::scaled(const BigRational& r) const {
    if (r == 0) return AdaptiveReal(Dyadic(), Dyadic(), prec_);
    BigInt num = numerator(r), den = denominator(r);
    if (den == 1) {
        Dyadic f(num, 0);
        return AdaptiveReal(mid_ * f, rad_ * f.abs(), prec_);
    }
    BigRational ra = r < 0 ? BigRational(-r) : r;
    long guard = prec_ + 16;
    Dyadic flo = Dyadic::from_rational_down(ra, guard);
    Dyadic fhi = Dyadic::from_rational_up(ra, guard);
    Dyadic fm = (flo + fhi) * Dyadic(1, -1);
    Dyadic fr = (fhi - flo) * Dyadic(1, -1);
    AdaptiveReal factor(r < 0 ? -fm : fm, fr, prec_);
    return *this * factor;
}

AdaptiveReal AdaptiveReal::abs() const {
    Dyadic lo = lower(), hi = upper();
    if (lo.sign() >= 0) return *this;
    if (hi.sign() <= 0) return -*this;
    // interval straddles zero: [0, max(|lo|, hi)]
    Dyadic top = lo.abs();
    if (top < hi) top = hi;
    Dyadic half = top * Dyadic(1, -1);
    return AdaptiveReal(half, half, prec_);
}

std::optional<int> AdaptiveReal::try_sign() const {
    if (mid_.is_zero() && rad_.is_zero()) return 0;
    if (lower().sign() > 0) return 1;
    if (upper().sign() < 0) return -1;
    return std::nullopt;
}

std::optional<BigInt> AdaptiveReal::try_nearest_integer() const {
    // k = floor(mid + 1/2); certain iff [lo, hi] within (k - 1/2, k + 1/2).
    BigRational midq = mid_.to_rational();
    BigInt k = floor_rational(midq + BigRational(1, 2));
    BigRational lo = lower().to_rational(), hi = upper().to_rational();
    BigRational kl = BigRational(k) - BigRational(1, 2), kh = BigRational(k) + BigRational(1, 2);
    if (lo > kl && hi < kh) return k;
    return std::nullopt;
}

std::optional<AdaptiveReal> AdaptiveReal::try_frac_distance() const {
    auto k = try_nearest_integer();
    if (!k) return std::nullopt;
    AdaptiveReal shifted = *this - exact_integer(*k, prec_);
    return shifted.abs();
}

}  // namespace adic
