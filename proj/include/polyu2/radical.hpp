#ifndef POLYU2_RADICAL_HPP
#define POLYU2_RADICAL_HPP

#include <string>

#include "polyu2/rationals.hpp"

namespace polyu2 {

// Exact scalar of the form coeff * sqrt(radicand): a rational coefficient
// times the square root of a nonnegative integer. This is the carrier for
// ladder-matrix entries sqrt(Phi) and their products.
//
// Canonical form: value 0 is (0, 0); a rational value has radicand 1; the
// radicand carries no square factor detectable by small-prime trial division
// or a perfect-square test. Equality never relies on canonical radicands:
// it compares sign and coeff^2 * radicand, which is always decisive.
//
// The carrier is closed under products, quotients and negation. Sums are
// defined only when the two radicands differ by a rational square (one
// perfect-square test on their product decides this); other sums fall
// outside the carrier and throw. All sums arising from the structure
// relations verified here combine entries over the same radicand.
class RadicalScalar {
public:
    RadicalScalar() : coeff_(0), radicand_(0) {}
    RadicalScalar(const Rational& q) : coeff_(q), radicand_(0) {
        coeff_.canonicalize();
        if (coeff_ != 0) radicand_ = 1;
    }
    RadicalScalar(int n) : RadicalScalar(Rational(n)) {}
    RadicalScalar(const Rational& coeff, const Rational& radicand);

    // sqrt of a nonnegative rational, as (1/b) * sqrt(a*b) for x = a/b.
    static RadicalScalar sqrt_of(const Rational& x);

    const Rational& coeff() const { return coeff_; }
    const mpz_class& radicand() const { return radicand_; }

    bool is_zero() const { return coeff_ == 0; }
    bool is_rational() const { return radicand_ <= 1; }
    // The exact rational value; only valid when is_rational().
    Rational rational_value() const;
    int sign() const { return sgn(coeff_); }

    double to_double() const;
    std::string to_string() const;

    RadicalScalar operator-() const;
    friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b);
    friend RadicalScalar operator/(const RadicalScalar& a, const RadicalScalar& b);
    friend RadicalScalar operator+(const RadicalScalar& a, const RadicalScalar& b);
    friend RadicalScalar operator-(const RadicalScalar& a, const RadicalScalar& b);
    RadicalScalar& operator+=(const RadicalScalar& b) { return *this = *this + b; }
    RadicalScalar& operator-=(const RadicalScalar& b) { return *this = *this - b; }
    RadicalScalar& operator*=(const RadicalScalar& b) { return *this = *this * b; }

    friend bool operator==(const RadicalScalar& a, const RadicalScalar& b);
    friend bool operator!=(const RadicalScalar& a, const RadicalScalar& b) { return !(a == b); }
    friend bool operator<(const RadicalScalar& a, const RadicalScalar& b);

    RadicalScalar abs() const;

private:
    void canonicalize_integer_radicand();

    Rational coeff_;
    mpz_class radicand_; // nonnegative integer under the root
};

} // namespace polyu2

#endif
