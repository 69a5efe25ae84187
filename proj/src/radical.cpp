#include "polyu2/radical.hpp"

#include <cmath>

namespace polyu2 {

RadicalScalar::RadicalScalar(const Rational& coeff, const Rational& radicand) {
    // mpq_class does not canonicalize (num, den) pairs on its own, and all
    // mpq comparisons assume canonical form; normalize at this boundary.
    Rational q = coeff;
    q.canonicalize();
    Rational p = radicand;
    p.canonicalize();
    if (p < 0) throw InvalidArgument("negative radicand " + rational_to_string(p));
    // q * sqrt(a/b) = (q/b) * sqrt(a*b)
    coeff_ = q / p.get_den();
    radicand_ = p.get_num() * p.get_den();
    canonicalize_integer_radicand();
}

RadicalScalar RadicalScalar::sqrt_of(const Rational& x) {
    if (x < 0)
        throw InvalidArgument("sqrt of negative rational " + rational_to_string(x));
    return RadicalScalar(Rational(1), x);
}

void RadicalScalar::canonicalize_integer_radicand() {
    if (coeff_ == 0 || radicand_ == 0) {
        coeff_ = 0;
        radicand_ = 0;
        return;
    }
    mpz_class root, reduced;
    extract_square_part(radicand_, root, reduced);
    coeff_ *= root;
    radicand_ = reduced;
}

Rational RadicalScalar::rational_value() const {
    if (!is_rational())
        throw InvalidArgument("value " + to_string() + " is irrational");
    return coeff_;
}

double RadicalScalar::to_double() const {
    return coeff_.get_d() * std::sqrt(radicand_.get_d());
}

std::string RadicalScalar::to_string() const {
    if (is_zero()) return "0";
    if (is_rational()) return rational_to_string(coeff_);
    std::string root = "sqrt(" + radicand_.get_str() + ")";
    if (coeff_ == 1) return root;
    if (coeff_ == -1) return "-" + root;
    return rational_to_string(coeff_) + "*" + root;
}

RadicalScalar RadicalScalar::operator-() const {
    RadicalScalar r = *this;
    r.coeff_ = -r.coeff_;
    return r;
}

RadicalScalar RadicalScalar::abs() const {
    RadicalScalar r = *this;
    r.coeff_ = ::abs(r.coeff_);
    return r;
}

RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
    if (a.is_zero() || b.is_zero()) return RadicalScalar();
    RadicalScalar r;
    r.coeff_ = a.coeff_ * b.coeff_;
    r.radicand_ = a.radicand_ * b.radicand_;
    r.canonicalize_integer_radicand();
    return r;
}

RadicalScalar operator/(const RadicalScalar& a, const RadicalScalar& b) {
    if (b.is_zero()) throw InvalidArgument("division by zero RadicalScalar");
    // 1 / (q*sqrt(p)) = (1/(q*p)) * sqrt(p)
    RadicalScalar inv;
    inv.coeff_ = Rational(1) / (b.coeff_ * b.radicand_);
    inv.radicand_ = b.radicand_;
    return a * inv;
}

RadicalScalar operator+(const RadicalScalar& a, const RadicalScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.radicand_ == b.radicand_) {
        RadicalScalar r;
        r.coeff_ = a.coeff_ + b.coeff_;
        r.radicand_ = a.radicand_;
        if (r.coeff_ == 0) r.radicand_ = 0;
        return r;
    }
    // sqrt(p1) = (t/p2) * sqrt(p2) holds exactly iff p1*p2 = t^2.
    mpz_class prod = a.radicand_ * b.radicand_;
    if (mpz_perfect_square_p(prod.get_mpz_t())) {
        mpz_class t;
        mpz_sqrt(t.get_mpz_t(), prod.get_mpz_t());
        RadicalScalar r;
        r.coeff_ = a.coeff_ * Rational(t) / Rational(b.radicand_) + b.coeff_;
        r.radicand_ = b.radicand_;
        if (r.coeff_ == 0) r.radicand_ = 0;
        return r;
    }
    throw Error("sum of radicals over incompatible radicands (" + a.to_string() + " + " +
                b.to_string() + ") leaves the single-radical carrier");
}

RadicalScalar operator-(const RadicalScalar& a, const RadicalScalar& b) {
    return a + (-b);
}

bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
    if (a.sign() != b.sign()) return false;
    if (a.is_zero()) return true;
    return a.coeff_ * a.coeff_ * Rational(a.radicand_) == b.coeff_ * b.coeff_ * Rational(b.radicand_);
}

bool operator<(const RadicalScalar& a, const RadicalScalar& b) {
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb;
    if (sa == 0) return false;
    Rational qa = a.coeff_ * a.coeff_ * Rational(a.radicand_);
    Rational qb = b.coeff_ * b.coeff_ * Rational(b.radicand_);
    return sa > 0 ? qa < qb : qb < qa;
}

} // namespace polyu2
