#ifndef POLYU2_SCALAR_HPP
#define POLYU2_SCALAR_HPP

#include <cmath>
#include <cstdio>
#include <string>

#include "polyu2/radical.hpp"

namespace polyu2 {

// The two scalar modes. Exact mode (RadicalScalar) is the reference; float
// mode (double) exists for large sweeps and for checking float/exact
// agreement. All algebra modules are templated on the scalar type S and use
// these traits for the handful of operations whose meaning differs by mode.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static constexpr const char* mode_name = "float";
    // Relative tolerance for float-mode identity checks and sign
    // classification: a residual passes when <= tol * (1 + scale).
    static constexpr double tol = 1e-12;

    static double from_rational(const Rational& q) { return q.get_d(); }
    static double from_halfint(HalfInt h) { return h.to_double(); }
    static double from_int(long n) { return static_cast<double>(n); }
    static double to_double(double x) { return x; }
    static bool is_zero(double x) { return x == 0.0; }
    static double sqrt_value(double x) { return std::sqrt(x); }
    static double abs_value(double x) { return std::fabs(x); }

    // Sign of x, treating |x| <= tol * (1 + magnitude) as zero. `magnitude`
    // is an upper bound on the roundoff scale of the expression that
    // produced x (e.g. the same product evaluated with |kappa_i|).
    static int sign_classified(double x, double magnitude) {
        if (std::fabs(x) <= tol * (1.0 + magnitude)) return 0;
        return x > 0 ? 1 : -1;
    }

    static std::string to_string(double x) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        return buf;
    }
};

template <>
struct scalar_traits<RadicalScalar> {
    static constexpr bool exact = true;
    static constexpr const char* mode_name = "exact";

    static RadicalScalar from_rational(const Rational& q) { return RadicalScalar(q); }
    static RadicalScalar from_halfint(HalfInt h) { return RadicalScalar(rational_from_halfint(h)); }
    static RadicalScalar from_int(long n) { return RadicalScalar(Rational(static_cast<long>(n))); }
    static double to_double(const RadicalScalar& x) { return x.to_double(); }
    static bool is_zero(const RadicalScalar& x) { return x.is_zero(); }
    static RadicalScalar sqrt_value(const RadicalScalar& x) {
        return RadicalScalar::sqrt_of(x.rational_value());
    }
    static RadicalScalar abs_value(const RadicalScalar& x) { return x.abs(); }

    static int sign_classified(const RadicalScalar& x, double /*magnitude*/) { return x.sign(); }

    static std::string to_string(const RadicalScalar& x) { return x.to_string(); }
};

} // namespace polyu2

#endif
