#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "polyu2/radical.hpp"

using namespace polyu2;

namespace {
RadicalScalar rat(long p, long q = 1) { return RadicalScalar(Rational(p, q)); }
} // namespace

TEST_CASE("square parts move into the coefficient") {
    RadicalScalar r8 = RadicalScalar::sqrt_of(Rational(8));
    CHECK(r8.coeff() == Rational(2));
    CHECK(r8.radicand() == 2);

    RadicalScalar r94 = RadicalScalar::sqrt_of(Rational(9, 4));
    CHECK(r94 == rat(3, 2));
    CHECK(r94.is_rational());

    RadicalScalar big(Rational(3), Rational(4, 9)); // 3*sqrt(4/9) = 2
    CHECK(big == rat(2));
}

TEST_CASE("zero is canonical: radicand 0 forces coeff 0") {
    RadicalScalar zero;
    CHECK(zero.is_zero());
    CHECK(zero.radicand() == 0);

    RadicalScalar via_coeff(Rational(0), Rational(7));
    CHECK(via_coeff.is_zero());
    CHECK(via_coeff.radicand() == 0);

    RadicalScalar x = RadicalScalar::sqrt_of(Rational(2));
    CHECK((x - x).is_zero());
    CHECK((x * RadicalScalar()).is_zero());
}

TEST_CASE("products stay in the carrier") {
    RadicalScalar r2 = RadicalScalar::sqrt_of(Rational(2));
    RadicalScalar r3 = RadicalScalar::sqrt_of(Rational(3));
    CHECK(r2 * r3 == RadicalScalar::sqrt_of(Rational(6)));
    CHECK(r2 * r2 == rat(2));
    CHECK(r2 / r2 == rat(1));
    CHECK(RadicalScalar::sqrt_of(Rational(6)) / r2 == r3);
    CHECK(rat(1) / r2 == RadicalScalar(Rational(1, 2), Rational(2)));
}

TEST_CASE("sums require square-compatible radicands") {
    RadicalScalar r2 = RadicalScalar::sqrt_of(Rational(2));
    RadicalScalar r8 = RadicalScalar::sqrt_of(Rational(8));
    CHECK(r8 + r2 == rat(3) * r2);
    CHECK(r8 - r2 == r2);
    CHECK_THROWS_AS(r2 + RadicalScalar::sqrt_of(Rational(3)), Error);

    // rationals and zero always combine
    CHECK(rat(5) + rat(-5) == RadicalScalar());
    CHECK(r2 + RadicalScalar() == r2);
}

TEST_CASE("equality is decided by sign and coeff^2 * radicand") {
    CHECK(RadicalScalar::sqrt_of(Rational(4)) == rat(2));
    CHECK(RadicalScalar(Rational(2), Rational(3)) == RadicalScalar(Rational(1), Rational(12)));
    CHECK(RadicalScalar(Rational(-2), Rational(3)) != RadicalScalar(Rational(2), Rational(3)));
    CHECK(rat(0) == RadicalScalar());
}

TEST_CASE("ordering") {
    RadicalScalar r2 = RadicalScalar::sqrt_of(Rational(2));
    RadicalScalar r3 = RadicalScalar::sqrt_of(Rational(3));
    CHECK(-r2 < RadicalScalar());
    CHECK(RadicalScalar() < r2);
    CHECK(r2 < r3);
    CHECK(r3 < rat(2));
    CHECK(-r3 < -r2);
    CHECK(r2.sign() == 1);
    CHECK((-r2).sign() == -1);
    CHECK(RadicalScalar().sign() == 0);
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(RadicalScalar::sqrt_of(Rational(-1)), InvalidArgument);
    CHECK_THROWS_AS(RadicalScalar::sqrt_of(Rational(2)).rational_value(), InvalidArgument);
    CHECK_THROWS_AS(rat(1) / RadicalScalar(), InvalidArgument);
}

TEST_CASE("random algebra agrees with float evaluation") {
    std::mt19937 rng(20240711);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    std::uniform_int_distribution<long> rad(0, 50);

    auto random_value = [&]() {
        return RadicalScalar(Rational(num(rng), den(rng)), Rational(rad(rng)));
    };

    for (int i = 0; i < 1000; ++i) {
        RadicalScalar a = random_value();
        RadicalScalar b = random_value();
        RadicalScalar c = random_value();

        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));

        double fa = a.to_double(), fb = b.to_double();
        CHECK((a * b).to_double() == doctest::Approx(fa * fb).epsilon(1e-12));

        // equality test vs float evaluation: equal values evaluate equal,
        // distinct values differ beyond tolerance at this magnitude range
        if (a == b)
            CHECK(std::fabs(fa - fb) <= 1e-12 * (1.0 + std::fabs(fa)));
        if (std::fabs(fa - fb) > 1e-6 * (1.0 + std::fabs(fa))) CHECK(a != b);
    }
}
