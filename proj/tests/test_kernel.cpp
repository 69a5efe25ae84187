#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyu2/kernel.hpp"

using namespace polyu2;

namespace {

RadicalScalar rat(long p, long q = 1) { return RadicalScalar(make_rational(p, q)); }

KappaVector<RadicalScalar> kv(std::initializer_list<Rational> ks) {
    KappaVector<RadicalScalar> out;
    for (const Rational& k : ks) out.push_back(RadicalScalar(k));
    return out;
}

// Independent oracle: multiply out prod_i (1 + kappa_i x) coefficient by
// coefficient, without the incremental update the implementation uses.
std::vector<Rational> expand_product_oracle(const std::vector<Rational>& kappa) {
    std::vector<Rational> poly{Rational(1)};
    for (const Rational& k : kappa) {
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] += k * poly[i];
        }
        poly = next;
    }
    return poly;
}

Rational horner(const std::vector<Rational>& poly, const Rational& x) {
    Rational acc(0);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

const std::vector<Rational> kGrid = {Rational(0),          make_rational(1, 5),
                                     make_rational(-1, 5), make_rational(1, 3),
                                     make_rational(-1, 3), make_rational(1, 2),
                                     make_rational(-1, 2), Rational(1)};

} // namespace

TEST_CASE("elementary symmetric coefficients") {
    CHECK(elementary_symmetric(kv({})) == std::vector<RadicalScalar>{rat(1)});

    // oracle: (1+2x)(1+3x) = 1 + 5x + 6x^2
    auto oracle = expand_product_oracle({Rational(2), Rational(3)});
    CHECK(oracle == std::vector<Rational>{Rational(1), Rational(5), Rational(6)});
    CHECK(elementary_symmetric(kv({Rational(2), Rational(3)})) ==
          std::vector<RadicalScalar>{rat(1), rat(5), rat(6)});

    CHECK(elementary_symmetric(kv({Rational(0), Rational(0), Rational(0)})) ==
          std::vector<RadicalScalar>{rat(1), rat(0), rat(0), rat(0)});
}

TEST_CASE("expansion identity: product form vs s_i expansion, r <= 4, n <= 10") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = static_cast<std::size_t>(trial % 5);
        std::vector<Rational> kappa;
        for (std::size_t i = 0; i < r; ++i) kappa.push_back(make_rational(num(rng), den(rng)));

        KappaVector<RadicalScalar> kappa_s;
        for (const Rational& k : kappa) kappa_s.push_back(RadicalScalar(k));
        std::vector<RadicalScalar> s = elementary_symmetric(kappa_s);
        REQUIRE(s.size() == r + 1);
        CHECK(s[0] == rat(1));

        std::vector<Rational> s_rat;
        for (const auto& c : s) s_rat.push_back(c.is_zero() ? Rational(0) : c.rational_value());
        std::vector<Rational> oracle = expand_product_oracle(kappa);
        for (std::size_t i = 0; i <= r; ++i) CHECK(s_rat[i] == oracle[i]);
        for (long n = 0; n <= 10; ++n) {
            Rational prod(1);
            for (const Rational& k : kappa) prod *= Rational(1) + k * Rational(n);
            CHECK(horner(s_rat, Rational(n)) == prod);
        }
    }
}

TEST_CASE("phi values") {
    CHECK(phi(HalfInt(1), HalfInt(0), kv({})) == rat(2));
    // 2*1*(1 - 1/2) = 1
    CHECK(phi(HalfInt(1), HalfInt(1), kv({make_rational(-1, 2)})) == rat(1));
    // 3*1*(1 - 1/2*2) = 0: truncation witness
    CHECK(phi(HalfInt::from_twice(3), HalfInt::from_twice(3), kv({make_rational(-1, 2)})) ==
          rat(0));
}

TEST_CASE("phi rejects mixed parity") {
    CHECK_THROWS_AS(phi(HalfInt(1), HalfInt::from_twice(1), kv({})), InvalidArgument);
    CHECK_THROWS_AS(g_fn(HalfInt::from_twice(3), HalfInt(1), kv({})), InvalidArgument);
}

TEST_CASE("g function") {
    CHECK(g_fn(HalfInt(1), HalfInt(0), kv({})) == rat(0));
    CHECK(g_fn(HalfInt(1), HalfInt(1), kv({})) == rat(2));
    // Phi(1,0) - Phi(1,1) = 2 - 4 = -2 at kappa = 1
    CHECK(g_fn(HalfInt(1), HalfInt(0), kv({Rational(1)})) == rat(-2));
}

TEST_CASE("undeformed limit: g = 2m for all |m| <= j <= 6") {
    for (int jt = 0; jt <= 12; ++jt) {
        HalfInt j = HalfInt::from_twice(jt);
        for (int mt = -jt; mt <= jt; mt += 2) {
            CHECK(g_fn(j, HalfInt::from_twice(mt), kv({})) ==
                  RadicalScalar(make_rational(2 * mt, 2)));
        }
    }
}

TEST_CASE("boundary zeros of phi") {
    for (const Rational& k1 : kGrid) {
        for (int jt = 0; jt <= 12; ++jt) {
            HalfInt j = HalfInt::from_twice(jt);
            auto kappa = kv({k1});
            CHECK(phi(j, -j, kappa).is_zero());
            CHECK(phi(j, j + HalfInt(1), kappa).is_zero());
        }
    }
}

TEST_CASE("one-mode structure function F") {
    CHECK(f_wh(3, rat(0)) == rat(3));
    CHECK(f_wh(3, rat(1)) == rat(9));
    CHECK(f_wh(3, rat(-1, 2)) == rat(0));
    CHECK_THROWS_AS(f_wh(-1, rat(0)), InvalidArgument);
}

TEST_CASE("sector ladder function f") {
    CHECK(f_higgs(1, HalfInt(1), rat(0)) == rat(2));
    CHECK(f_higgs(1, HalfInt(1), rat(1)) == rat(4));
    CHECK(f_higgs(0, HalfInt::from_twice(5), rat(1, 3)) == rat(0));
}

TEST_CASE("factorization f(n) = F(n) F(2j-n+1) for all n, j <= 5") {
    for (const Rational& k : kGrid) {
        RadicalScalar kappa(k);
        for (int jt = 0; jt <= 10; ++jt) {
            HalfInt j = HalfInt::from_twice(jt);
            for (int n = 0; n <= jt + 1; ++n)
                CHECK(f_higgs(n, j, kappa) == f_wh(n, kappa) * f_wh(jt - n + 1, kappa));
        }
    }
}

TEST_CASE("contracted structure function") {
    CHECK(phi_inf(4, kv({})) == rat(4));
    CHECK(phi_inf(4, kv({Rational(1)})) == rat(16));
    // 2*(3/2)*(3/4) = 9/4
    CHECK(phi_inf(2, kv({make_rational(1, 2), make_rational(-1, 4)})) == rat(9, 4));
    CHECK_THROWS_AS(phi_inf(-2, kv({})), InvalidArgument);
}

TEST_CASE("float mode matches exact to 1e-12 relative") {
    for (const Rational& k1 : kGrid) {
        KappaVector<double> kf{k1.get_d()};
        auto ke = kv({k1});
        for (int jt = 0; jt <= 9; ++jt) {
            HalfInt j = HalfInt::from_twice(jt);
            for (int mt = -jt; mt <= jt + 2; mt += 2) {
                HalfInt m = HalfInt::from_twice(mt);
                double exact = phi(j, m, ke).to_double();
                double approx = phi(j, m, kf);
                CHECK(std::fabs(exact - approx) <= 1e-12 * (1.0 + std::fabs(exact)));
            }
        }
    }
}
