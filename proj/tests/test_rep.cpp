#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyu2/rep.hpp"

using namespace polyu2;

namespace {

RadicalScalar rat(long p, long q = 1) { return RadicalScalar(make_rational(p, q)); }

KappaVector<RadicalScalar> kv(std::initializer_list<Rational> ks) {
    KappaVector<RadicalScalar> out;
    for (const Rational& k : ks) out.push_back(RadicalScalar(k));
    return out;
}

// Brute-force oracle in plain rational arithmetic: enumerate n = 0..2j+1 and
// test the sign of Phi(n) = n(2j+1-n) prod(1+kappa_i(n-1)) directly.
struct ScanOracle {
    std::vector<int> levels;
    bool clean;
};

ScanOracle scan_oracle(int j_twice, const std::vector<Rational>& kappa) {
    ScanOracle out{{0}, true};
    for (int n = 1; n <= j_twice + 1; ++n) {
        Rational value = Rational(n) * Rational(j_twice + 1 - n);
        for (const Rational& k : kappa) value *= Rational(1) + k * Rational(n - 1);
        if (value <= 0) {
            out.clean = value == 0;
            return out;
        }
        out.levels.push_back(n);
    }
    return out; // unreachable: Phi(2j+1) = 0
}

const std::vector<Rational> kGrid = {Rational(0),          make_rational(1, 5),
                                     make_rational(-1, 5), make_rational(1, 3),
                                     make_rational(-1, 3), make_rational(1, 2),
                                     make_rational(-1, 2), Rational(1)};

std::vector<KappaVector<RadicalScalar>> kappa_vectors_up_to_r2() {
    std::vector<KappaVector<RadicalScalar>> out;
    out.push_back({});
    for (const Rational& a : kGrid) out.push_back(kv({a}));
    for (const Rational& a : kGrid)
        for (const Rational& b : kGrid) out.push_back(kv({a, b}));
    return out;
}

std::vector<Rational> to_rationals(const KappaVector<RadicalScalar>& kappa) {
    std::vector<Rational> out;
    for (const auto& k : kappa) out.push_back(k.rational_value());
    return out;
}

KappaVector<double> to_floats(const KappaVector<RadicalScalar>& kappa) {
    KappaVector<double> out;
    for (const auto& k : kappa) out.push_back(k.to_double());
    return out;
}

} // namespace

TEST_CASE("admissible levels: frozen examples") {
    auto full = admissible_levels(HalfInt(2), kv({}));
    CHECK(full.levels == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(full.clean);

    auto trunc = admissible_levels(HalfInt::from_twice(5), kv({make_rational(-1, 2)}));
    CHECK(trunc.levels == std::vector<int>{0, 1, 2}); // d = 1 - 1/kappa = 3
    CHECK(trunc.clean);

    auto bound = admissible_levels(HalfInt(1), kv({make_rational(-1, 2)}));
    CHECK(bound.levels == std::vector<int>{0, 1, 2}); // Phi(3) = 3*0*0 = 0
    CHECK(bound.clean);

    CHECK_THROWS_AS(admissible_levels(HalfInt::from_twice(-1), kv({})), InvalidArgument);
}

TEST_CASE("scan agrees with the brute-force oracle on the kappa grid") {
    for (const auto& kappa : kappa_vectors_up_to_r2()) {
        for (int jt = 0; jt <= 9; ++jt) {
            ScanOracle expect = scan_oracle(jt, to_rationals(kappa));
            LevelScan got = admissible_levels(HalfInt::from_twice(jt), kappa);
            CHECK(got.levels == expect.levels);
            CHECK(got.clean == expect.clean);
        }
    }
}

TEST_CASE("dimension: frozen examples and the closed-form law") {
    CHECK(dimension(HalfInt(3), kv({make_rational(1, 4)})) == 7);
    CHECK(dimension(HalfInt::from_twice(5), kv({make_rational(-1, 3)})) == 4);
    CHECK(dimension(HalfInt::from_twice(1), kv({make_rational(-1, 3)})) == 2);

    // one negative kappa_i = -1/K, all others >= 0  =>  d = min(2j+1, K+1)
    for (int K = 1; K <= 4; ++K) {
        for (const Rational& extra : {Rational(0), make_rational(1, 3), Rational(1)}) {
            for (int jt = 0; jt <= 9; ++jt) {
                int expect = std::min(jt + 1, K + 1);
                CHECK(dimension(HalfInt::from_twice(jt), kv({make_rational(-1, K), extra})) ==
                      expect);
            }
        }
    }
}

TEST_CASE("build_rep: Pauli ladder at j = 1/2") {
    auto rep = build_rep<RadicalScalar>(HalfInt::from_twice(1), kv({}));
    REQUIRE(rep.dim() == 2);
    CHECK(rep.jplus.at(0, 0).is_zero());
    CHECK(rep.jplus.at(0, 1).is_zero());
    CHECK(rep.jplus.at(1, 0) == rat(1));
    CHECK(rep.jplus.at(1, 1).is_zero());
    CHECK(rep.j3.at(0, 0) == rat(-1, 2));
    CHECK(rep.j3.at(1, 1) == rat(1, 2));
    CHECK(rep.j0.at(0, 0) == rat(1, 2));
}

TEST_CASE("build_rep: deformed subdiagonal sqrt(Phi)") {
    auto rep = build_rep<RadicalScalar>(HalfInt(1), kv({make_rational(-1, 2)}));
    REQUIRE(rep.dim() == 3);
    CHECK(rep.jplus.at(1, 0) == RadicalScalar::sqrt_of(Rational(2))); // Phi(1) = 2
    CHECK(rep.jplus.at(2, 1) == rat(1));                              // Phi(2) = 1
    CHECK(rep.jminus.at(0, 1) == RadicalScalar::sqrt_of(Rational(2)));
}

TEST_CASE("build_rep: trivial representation at j = 0") {
    for (const auto& kappa : {kv({}), kv({Rational(1)}), kv({make_rational(-1, 2)})}) {
        auto rep = build_rep<RadicalScalar>(HalfInt(0), kappa);
        REQUIRE(rep.dim() == 1);
        CHECK(rep.jplus.at(0, 0).is_zero());
        CHECK(rep.jminus.at(0, 0).is_zero());
        CHECK(rep.j3.at(0, 0).is_zero());
        CHECK(rep.j0.at(0, 0).is_zero());
    }
}

TEST_CASE("build_rep refuses non-clean truncation") {
    // kappa = -2/5: 1 + kappa(n-1) changes sign between n = 3 and n = 4
    CHECK_THROWS_AS(build_rep<RadicalScalar>(HalfInt(2), kv({make_rational(-2, 5)})),
                    NonUnitarizable);
    // but the scan itself reports it
    auto scan = admissible_levels(HalfInt(2), kv({make_rational(-2, 5)}));
    CHECK_FALSE(scan.clean);
    CHECK(scan.levels.size() == 4);
}

TEST_CASE("verify_structure: frozen examples pass with zero residual") {
    for (auto rep : {build_rep<RadicalScalar>(HalfInt::from_twice(3), kv({})),
                     build_rep<RadicalScalar>(HalfInt(2), kv({make_rational(1, 3),
                                                              make_rational(1, 5)})),
                     build_rep<RadicalScalar>(HalfInt::from_twice(5),
                                              kv({make_rational(-1, 2)}))}) {
        VerificationReport report = verify_structure(rep);
        REQUIRE(report.checks.size() == 5);
        CHECK(report.passed());
        CHECK(report.max_residual() == 0.0);
    }
}

TEST_CASE("verify_structure passes exactly across the kappa grid") {
    for (const auto& kappa : kappa_vectors_up_to_r2()) {
        for (int jt = 0; jt <= 9; ++jt) {
            if (!admissible_levels(HalfInt::from_twice(jt), kappa).clean) continue;
            auto rep = build_rep(HalfInt::from_twice(jt), kappa);
            VerificationReport report = verify_structure(rep);
            CHECK(report.passed());
            CHECK(report.max_residual() == 0.0);
        }
    }
}

TEST_CASE("J3 spectrum and positivity of J+J-") {
    auto rep = build_rep<RadicalScalar>(HalfInt::from_twice(7), kv({make_rational(-1, 3)}));
    auto product = rep.jplus * rep.jminus;
    for (int n = 0; n < rep.dim(); ++n) {
        CHECK(rep.j3.at(n, n) == RadicalScalar(make_rational(-7 + 2 * n, 2)));
        CHECK(product.at(n, n).sign() >= 0);
        CHECK(product.at(n, n) == phi(rep.basis.j, rep.basis.m_of_level(n), rep.kappa));
    }
}

TEST_CASE("nilpotency index equals the dimension") {
    CHECK(nilpotency_index(build_rep<RadicalScalar>(HalfInt::from_twice(1), kv({}))) == 2);
    CHECK(nilpotency_index(build_rep<RadicalScalar>(HalfInt::from_twice(5),
                                                    kv({make_rational(-1, 2)}))) == 3);
    CHECK(nilpotency_index(build_rep<RadicalScalar>(HalfInt(1), kv({Rational(1)}))) == 3);

    for (const auto& kappa : {kv({}), kv({make_rational(-1, 4)}), kv({make_rational(1, 2)})}) {
        for (int jt = 0; jt <= 9; ++jt) {
            auto rep = build_rep(HalfInt::from_twice(jt), kappa);
            CHECK(nilpotency_index(rep) == rep.dim());
        }
    }
}

TEST_CASE("float mode representation agrees with exact mode") {
    for (const auto& kappa : kappa_vectors_up_to_r2()) {
        HalfInt j = HalfInt::from_twice(7);
        if (!admissible_levels(j, kappa).clean) continue;
        auto exact = build_rep(j, kappa);
        auto approx = build_rep(j, to_floats(kappa));
        REQUIRE(exact.dim() == approx.dim());
        for (int r = 0; r < exact.dim(); ++r)
            for (int c = 0; c < exact.dim(); ++c) {
                double e = exact.jplus.at(r, c).to_double();
                double a = approx.jplus.at(r, c);
                CHECK(std::fabs(e - a) <= 1e-12 * (1.0 + std::fabs(e)));
            }
        CHECK(verify_structure(approx).passed());
    }
}
