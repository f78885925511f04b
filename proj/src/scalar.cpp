#include "adic/scalar.hpp"

namespace adic {

namespace {

constexpr long kDefaultBits = 96;

}  // namespace

Scalar::Scalar(QuadraticReal q) {
    if (q.is_rational())
        v_ = q.a();
    else
        v_ = std::move(q);
}

QuadraticReal Scalar::as_quadratic() const {
    switch (kind()) {
        case Kind::Rational: return QuadraticReal(rational());
        case Kind::Quadratic: return quadratic();
        default: throw Error("adaptive scalar has no exact quadratic view");
    }
}

AdaptiveReal Scalar::as_adaptive(long bits) const {
    switch (kind()) {
        case Kind::Rational: return AdaptiveReal::from_rational(rational(), bits);
        case Kind::Quadratic: return AdaptiveReal::from_quadratic(quadratic(), bits);
        default: return adaptive();
    }
}

Scalar Scalar::operator-() const {
    switch (kind()) {
        case Kind::Rational: return Scalar(BigRational(-rational()));
        case Kind::Quadratic: return Scalar(-quadratic());
        default: return Scalar(-adaptive());
    }
}

namespace {

template <class F, class G, class H>
Scalar combine(const Scalar& x, const Scalar& y, F frat, G fquad, H fad) {
    using K = Scalar::Kind;
    if (x.kind() == K::Adaptive || y.kind() == K::Adaptive) {
        long bits = std::max(x.kind() == K::Adaptive ? x.adaptive().prec() : kDefaultBits,
                             y.kind() == K::Adaptive ? y.adaptive().prec() : kDefaultBits);
        return Scalar(fad(x.as_adaptive(bits), y.as_adaptive(bits)));
    }
    if (x.kind() == K::Quadratic || y.kind() == K::Quadratic)
        return Scalar(fquad(x.as_quadratic(), y.as_quadratic()));
    return Scalar(frat(x.rational(), y.rational()));
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    return combine(
        *this, o, [](const BigRational& a, const BigRational& b) { return BigRational(a + b); },
        [](const QuadraticReal& a, const QuadraticReal& b) { return a + b; },
        [](const AdaptiveReal& a, const AdaptiveReal& b) { return a + b; });
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    return combine(
        *this, o, [](const BigRational& a, const BigRational& b) { return BigRational(a * b); },
        [](const QuadraticReal& a, const QuadraticReal& b) { return a * b; },
        [](const AdaptiveReal& a, const AdaptiveReal& b) { return a * b; });
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (kind() == Kind::Adaptive || o.kind() == Kind::Adaptive)
        throw Error("division is supported for exact scalars only");
    if (kind() == Kind::Quadratic || o.kind() == Kind::Quadratic)
        return Scalar(as_quadratic() / o.as_quadratic());
    if (o.rational() == 0) throw Error("division by zero");
    return Scalar(BigRational(rational() / o.rational()));
}

Scalar Scalar::abs() const {
    switch (kind()) {
        case Kind::Rational: return Scalar(BigRational(boost::multiprecision::abs(rational())));
        case Kind::Quadratic: return Scalar(quadratic().abs());
        default: return Scalar(adaptive().abs());
    }
}

int Scalar::sign() const {
    switch (kind()) {
        case Kind::Rational: return rational().sign();
        case Kind::Quadratic: return quadratic().sign();
        default: {
            auto s = adaptive().try_sign();
            if (!s)
                throw PrecisionExhaustedError("sign undecidable at current enclosure width",
                                              adaptive().prec() * 2);
            return *s;
        }
    }
}

bool Scalar::operator==(const Scalar& o) const {
    if (kind() == Kind::Adaptive || o.kind() == Kind::Adaptive)
        throw Error("equality is defined for exact scalars only");
    return compare(o) == 0;
}

std::pair<BigInt, bool> Scalar::nearest_integer() const {
    switch (kind()) {
        case Kind::Rational: {
            const BigRational& q = rational();
            BigInt f = floor_rational(q);
            BigRational frac = q - BigRational(f);
            if (frac < BigRational(1, 2)) return {f, false};
            if (frac > BigRational(1, 2)) return {f + 1, false};
            return {f, true};
        }
        case Kind::Quadratic: return quadratic().nearest_integer();
        default: {
            auto k = adaptive().try_nearest_integer();
            if (!k)
                throw PrecisionExhaustedError("nearest integer undecidable", adaptive().prec() * 2);
            return {*k, false};
        }
    }
}

Scalar Scalar::frac_distance() const {
    switch (kind()) {
        case Kind::Rational: {
            auto [k, tie] = nearest_integer();
            (void)tie;
            BigRational d = rational() - BigRational(k);
            return Scalar(BigRational(boost::multiprecision::abs(d)));
        }
        case Kind::Quadratic: return Scalar(quadratic().frac_distance());
        default: {
            auto f = adaptive().try_frac_distance();
            if (!f)
                throw PrecisionExhaustedError("fractional distance undecidable",
                                              adaptive().prec() * 2);
            return Scalar(*f);
        }
    }
}

bool Scalar::is_integer() const {
    switch (kind()) {
        case Kind::Rational: return denominator(rational()) == 1;
        case Kind::Quadratic: return false;  // b != 0 by construction
        default: throw Error("integrality undecidable for adaptive scalar");
    }
}

double Scalar::to_double() const {
    switch (kind()) {
        case Kind::Rational: return rational_to_double(rational());
        case Kind::Quadratic: return quadratic().to_double();
        default: return adaptive().to_double();
    }
}

std::string Scalar::str() const {
    switch (kind()) {
        case Kind::Rational: return rational_to_string(rational());
        case Kind::Quadratic: return quadratic().str();
        default: return adaptive().decimal(18);
    }
}

std::string Scalar::decimal(int digits) const {
    switch (kind()) {
        case Kind::Rational: return rational_to_decimal(rational(), digits);
        case Kind::Quadratic: {
            auto [lo, hi] = quadratic().enclosure_numerators(96);
            BigRational mid = BigRational(lo + hi, 2) / BigRational(pow2(96));
            return rational_to_decimal(mid, digits);
        }
        default: return adaptive().decimal(digits);
    }
}

Scalar parse_scalar(const std::string& text) {
    if (text.find("sqrt") != std::string::npos) return Scalar(QuadraticReal::parse(text));
    return Scalar(rational_from_string(text));
}

}  // namespace adic
