#include <doctest.h>

#include <random>

#include "adic/adaptive.hpp"
#include "adic/quadratic.hpp"
#include "adic/scalar.hpp"

using namespace adic;

namespace {

QuadraticReal q5(long an, long ad, long bn, long bd) {
    return QuadraticReal(BigRational(an, ad), BigRational(bn, bd), 5);
}

QuadraticReal phi() { return q5(1, 2, 1, 2); }

// Independent nearest-integer oracle: exhaustive argmin of |x - k| over a
// window around the floor, decided by exact sign tests.
BigInt brute_nearest(const QuadraticReal& x) {
    BigInt f = x.floor();
    BigInt best = f - 2;
    QuadraticReal bestd = (x - QuadraticReal(BigRational(best))).abs();
    for (BigInt k = f - 1; k <= f + 2; ++k) {
        QuadraticReal d = (x - QuadraticReal(BigRational(k))).abs();
        if (d < bestd) {
            bestd = d;
            best = k;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("quadratic sign by rational comparison") {
    CHECK(q5(0, 1, 0, 1).sign() == 0);
    // 5 - 2*phi = 4 - sqrt(5): 16 > 5
    CHECK(q5(4, 1, -1, 1).sign() == 1);
    // 2 - phi = 3/2 - (1/2) sqrt(5): 9/4 > 5/4
    CHECK(q5(3, 2, -1, 2).sign() == 1);
    // phi - 2 < 0
    CHECK(q5(-3, 2, 1, 2).sign() == -1);
    CHECK((-phi()).sign() == -1);
    CHECK(phi().sign() == 1);
}

TEST_CASE("sign respects multiplication on random inputs") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coeff(-30, 30);
    std::uniform_int_distribution<long> den(1, 9);
    for (int i = 0; i < 2000; ++i) {
        QuadraticReal x = q5(coeff(rng), den(rng), coeff(rng), den(rng));
        QuadraticReal y = q5(coeff(rng), den(rng), coeff(rng), den(rng));
        CHECK((x * y).sign() == x.sign() * y.sign());
    }
}

TEST_CASE("sign agrees with 128-bit enclosures on random inputs") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coeff(-50, 50);
    std::uniform_int_distribution<long> den(1, 7);
    for (int i = 0; i < 10000; ++i) {
        QuadraticReal x = q5(coeff(rng), den(rng), coeff(rng), den(rng));
        int s = x.sign();
        AdaptiveReal enc = AdaptiveReal::from_quadratic(x, 128);
        auto es = enc.try_sign();
        if (es) CHECK(s == *es);
        if (s == 0) CHECK(x == QuadraticReal(0L));
    }
}

TEST_CASE("nearest integer: pinned values") {
    // 7*phi - 7 ~ 4.3262
    QuadraticReal x = q5(-7, 2, 7, 2);
    auto [k, tie] = x.nearest_integer();
    CHECK(k == 4);
    CHECK_FALSE(tie);

    auto half = Scalar(BigRational(1, 2)).nearest_integer();
    CHECK(half.first == 0);
    CHECK(half.second);

    auto zero = Scalar(BigRational(0)).nearest_integer();
    CHECK(zero.first == 0);
    CHECK_FALSE(zero.second);
}

TEST_CASE("nearest integer is the argmin over an integer window") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> coeff(-400, 400);
    std::uniform_int_distribution<long> den(1, 12);
    for (int i = 0; i < 3000; ++i) {
        QuadraticReal x = q5(coeff(rng), den(rng), coeff(rng), den(rng));
        auto [k, tie] = x.nearest_integer();
        BigInt b = brute_nearest(x);
        if (tie) {
            // either neighbour is at distance exactly 1/2
            CHECK((x - QuadraticReal(BigRational(k))).abs() ==
                  QuadraticReal(BigRational(1, 2)));
        } else {
            CHECK(k == b);
        }
        CHECK((x - QuadraticReal(BigRational(k))).abs() <= QuadraticReal(BigRational(1, 2)));
    }
}

TEST_CASE("frac distance: pinned golden-ratio values") {
    // ||| 7 phi - 7 ||| = 7 phi - 11 = -15/2 + (7/2) sqrt(5)
    QuadraticReal x = q5(-7, 2, 7, 2);
    CHECK(x.frac_distance() == q5(-15, 2, 7, 2));
    CHECK(x.frac_distance() == phi().scaled(BigRational(7)) - QuadraticReal(BigRational(11)));

    // ||| 5 phi - 5 ||| = 5 phi - 8
    QuadraticReal y = phi().scaled(BigRational(5)) - QuadraticReal(BigRational(5));
    CHECK(y.frac_distance() == phi().scaled(BigRational(5)) - QuadraticReal(BigRational(8)));

    CHECK(Scalar(3L).frac_distance() == Scalar(0L));
}

TEST_CASE("frac distance invariances") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> coeff(-60, 60);
    std::uniform_int_distribution<long> den(1, 10);
    std::uniform_int_distribution<long> shift(-25, 25);
    for (int i = 0; i < 1000; ++i) {
        QuadraticReal x = q5(coeff(rng), den(rng), coeff(rng), den(rng));
        QuadraticReal shifted = x + QuadraticReal(BigRational(shift(rng)));
        CHECK(x.frac_distance() == shifted.frac_distance());
        CHECK(x.frac_distance() == (-x).frac_distance());
        QuadraticReal d = x.frac_distance();
        CHECK(d.sign() >= 0);
        CHECK(d <= QuadraticReal(BigRational(1, 2)));
    }
}

TEST_CASE("enclosures meet the advertised width") {
    // phi at 20 bits
    AdaptiveReal e = AdaptiveReal::from_quadratic(phi(), 20);
    CHECK(e.rad().to_rational() <= BigRational(1, 1 << 19));
    double mid = e.to_double();
    CHECK(mid > 1.6180319);
    CHECK(mid < 1.6180361);

    AdaptiveReal z = AdaptiveReal::from_quadratic(QuadraticReal(0L), 4);
    CHECK(z.mid().is_zero());
    CHECK(z.rad().to_rational() <= BigRational(1, 16));

    // 2 - phi at 30 bits ~ 0.3819660113
    AdaptiveReal f = AdaptiveReal::from_quadratic(q5(3, 2, -1, 2), 30);
    CHECK(f.rad().to_rational() <= BigRational(1, 1 << 29));
    CHECK(f.to_double() > 0.381965);
    CHECK(f.to_double() < 0.381967);
}

TEST_CASE("adaptive nearest integer refuses boundary straddles") {
    AdaptiveReal half = AdaptiveReal::from_rational(BigRational(1, 2), 40);
    CHECK_FALSE(half.try_nearest_integer().has_value());
    AdaptiveReal third = AdaptiveReal::from_rational(BigRational(1, 3), 40);
    auto k = third.try_nearest_integer();
    REQUIRE(k.has_value());
    CHECK(*k == 0);
}

TEST_CASE("adaptive arithmetic preserves enclosures") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> coeff(-40, 40);
    std::uniform_int_distribution<long> den(1, 9);
    for (int i = 0; i < 500; ++i) {
        BigRational a(coeff(rng), den(rng)), b(coeff(rng), den(rng));
        AdaptiveReal ea = AdaptiveReal::from_rational(a, 60);
        AdaptiveReal eb = AdaptiveReal::from_rational(b, 60);
        AdaptiveReal sum = ea + eb, prod = ea * eb;
        CHECK(sum.lower().to_rational() <= a + b);
        CHECK(sum.upper().to_rational() >= a + b);
        CHECK(prod.lower().to_rational() <= a * b);
        CHECK(prod.upper().to_rational() >= a * b);
    }
}

TEST_CASE("text round trips are exact") {
    QuadraticReal x = q5(-7, 2, 7, 2);
    CHECK(QuadraticReal::parse(x.str()) == x);
    QuadraticReal y = q5(4, 1, -1, 1);
    CHECK(QuadraticReal::parse(y.str()) == y);
    CHECK(y.str() == "4/1-1/1*sqrt(5)");
    BigRational r(-22, 7);
    CHECK(rational_from_string(rational_to_string(r)) == r);
    Scalar s = parse_scalar("-1/2+1/2*sqrt(5)");
    CHECK(s.kind() == Scalar::Kind::Quadratic);
    CHECK(s.quadratic() == q5(-1, 2, 1, 2));
}

TEST_CASE("mixed radicands are rejected, rationals unify") {
    QuadraticReal a = q5(1, 1, 1, 1);
    QuadraticReal b(BigRational(1), BigRational(1), 2);
    CHECK_THROWS_AS(a + b, MixedRadicandError);
    QuadraticReal r(BigRational(3, 4));
    CHECK((a + r).d() == 5);
    CHECK((r * b).d() == 2);
}

TEST_CASE("scalar promotion keeps exactness") {
    Scalar r(BigRational(1, 3));
    Scalar q(phi());
    Scalar sum = r + q;
    CHECK(sum.kind() == Scalar::Kind::Quadratic);
    // phi * (1/phi) = 1 collapses to rational
    Scalar prod = q * Scalar(phi().inverse());
    CHECK(prod.kind() == Scalar::Kind::Rational);
    CHECK(prod.rational() == 1);
}
