#ifndef POLYU2_KERNEL_HPP
#define POLYU2_KERNEL_HPP

#include <vector>

#include "polyu2/scalar.hpp"

namespace polyu2 {

// Ordered deformation parameters kappa_1..kappa_r. r = 0 is the undeformed
// algebra. In exact mode every entry is rational (RadicalScalar of radicand 1).
template <class S>
using KappaVector = std::vector<S>;

// Coefficients s_0..s_r of prod_i (1 + kappa_i x) = sum_i s_i x^i, i.e. the
// elementary symmetric polynomials of the kappas with s_0 = 1.
template <class S>
std::vector<S> elementary_symmetric(const KappaVector<S>& kappa) {
    std::vector<S> s;
    s.reserve(kappa.size() + 1);
    s.push_back(scalar_traits<S>::from_int(1));
    for (const S& k : kappa) {
        s.push_back(S{});
        for (std::size_t i = s.size() - 1; i >= 1; --i) s[i] += k * s[i - 1];
    }
    return s;
}

namespace detail {

// prod_i (1 + kappa_i * arg)
template <class S>
S deformation_product(const S& arg, const KappaVector<S>& kappa) {
    S p = scalar_traits<S>::from_int(1);
    for (const S& k : kappa) p *= scalar_traits<S>::from_int(1) + k * arg;
    return p;
}

inline double deformation_magnitude(double arg, const std::vector<double>& kappa_abs) {
    double p = 1.0;
    for (double k : kappa_abs) p *= 1.0 + k * std::fabs(arg);
    return p;
}

template <class S>
std::vector<double> kappa_abs(const KappaVector<S>& kappa) {
    std::vector<double> out;
    out.reserve(kappa.size());
    for (const S& k : kappa) out.push_back(std::fabs(scalar_traits<S>::to_double(k)));
    return out;
}

} // namespace detail

// Structure function Phi(j, m) = (j+m)(1+j-m) prod_i (1 + kappa_i (j+m-1)).
// Defined for all arguments with j +- m integral; positivity is the caller's
// concern.
template <class S>
S phi(HalfInt j, HalfInt m, const KappaVector<S>& kappa) {
    require_same_parity(j, m, "phi");
    int n = (j + m).whole();            // j+m
    int comp = (j - m).whole() + 1;      // 1+j-m
    S head = scalar_traits<S>::from_int(n) * scalar_traits<S>::from_int(comp);
    return head * detail::deformation_product(scalar_traits<S>::from_int(n - 1), kappa);
}

// Upper bound on |phi(j, m, kappa)| with every factor taken in absolute
// value; the roundoff scale used by float-mode sign classification.
template <class S>
double phi_magnitude(HalfInt j, HalfInt m, const KappaVector<S>& kappa) {
    double n = (j + m).to_double();
    double comp = 1.0 + (j - m).to_double();
    return std::fabs(n) * std::fabs(comp) *
           detail::deformation_magnitude(n - 1.0, detail::kappa_abs(kappa));
}

// Commutator eigenvalue G(j, m) = Phi(j, m) - Phi(j, m+1); equals 2m when
// all kappas vanish.
template <class S>
S g_fn(HalfInt j, HalfInt m, const KappaVector<S>& kappa) {
    require_same_parity(j, m, "g_fn");
    return phi(j, m, kappa) - phi(j, m + HalfInt(1), kappa);
}

// One-mode structure function F(n) = n(1 + kappa(n-1)).
template <class S>
S f_wh(int n, const S& kappa_single) {
    if (n < 0) throw InvalidArgument("f_wh: n must be nonnegative");
    return scalar_traits<S>::from_int(n) *
           (scalar_traits<S>::from_int(1) + kappa_single * scalar_traits<S>::from_int(n - 1));
}

template <class S>
double f_wh_magnitude(int n, const S& kappa_single) {
    double k = std::fabs(scalar_traits<S>::to_double(kappa_single));
    return std::fabs(static_cast<double>(n)) * (1.0 + k * std::fabs(n - 1.0));
}

// Sector ladder function f(n) = F(n) F(2j-n+1)
//                             = n(2j+1-n)(1+kappa(n-1))(1+kappa(2j-n)).
template <class S>
S f_higgs(int n, HalfInt j, const S& kappa_single) {
    return f_wh(n, kappa_single) * f_wh(j.twice() - n + 1, kappa_single);
}

template <class S>
double f_higgs_magnitude(int n, HalfInt j, const S& kappa_single) {
    return f_wh_magnitude(n, kappa_single) * f_wh_magnitude(j.twice() - n + 1, kappa_single);
}

// Contracted structure function Phi_inf(n) = n prod_i (1 + kappa_i(n-1)),
// the large-j limit of Phi_j(n)/(2j).
template <class S>
S phi_inf(int n, const KappaVector<S>& kappa) {
    if (n < 0) throw InvalidArgument("phi_inf: n must be nonnegative");
    return scalar_traits<S>::from_int(n) *
           detail::deformation_product(scalar_traits<S>::from_int(n - 1), kappa);
}

template <class S>
double phi_inf_magnitude(int n, const KappaVector<S>& kappa) {
    return std::fabs(static_cast<double>(n)) *
           detail::deformation_magnitude(n - 1.0, detail::kappa_abs(kappa));
}

} // namespace polyu2

#endif
