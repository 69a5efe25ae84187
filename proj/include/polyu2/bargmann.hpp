#ifndef POLYU2_BARGMANN_HPP
#define POLYU2_BARGMANN_HPP

#include "polyu2/higgs.hpp"

namespace polyu2 {

// Polynomial in z representing a spin-j sector state; coeffs[n] multiplies
// z^n. Trailing zero coefficients are stripped, the zero polynomial is empty.
template <class S>
struct PolyFn {
    std::vector<S> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; } // -1 for zero
    bool is_zero() const { return coeffs.empty(); }

    void normalize() {
        while (!coeffs.empty() && scalar_traits<S>::is_zero(coeffs.back())) coeffs.pop_back();
    }

    S coeff(int n) const {
        if (n < 0 || n > degree()) return S{};
        return coeffs[static_cast<std::size_t>(n)];
    }

    friend bool operator==(const PolyFn& a, const PolyFn& b) { return a.coeffs == b.coeffs; }

    friend PolyFn operator-(const PolyFn& a, const PolyFn& b) {
        PolyFn r;
        int deg = std::max(a.degree(), b.degree());
        for (int n = 0; n <= deg; ++n) r.coeffs.push_back(a.coeff(n) - b.coeff(n));
        r.normalize();
        return r;
    }

    friend PolyFn operator*(const S& s, const PolyFn& p) {
        PolyFn r = p;
        for (S& c : r.coeffs) c = s * c;
        r.normalize();
        return r;
    }
};

namespace detail {

// f(1..upto) with unitarity enforced: any strictly negative value throws.
template <class S>
std::vector<S> ladder_values(HalfInt j, const S& kappa, int upto) {
    std::vector<S> f;
    f.reserve(static_cast<std::size_t>(upto));
    for (int n = 1; n <= upto; ++n) {
        S value = f_higgs(n, j, kappa);
        int sign = scalar_traits<S>::sign_classified(value, f_higgs_magnitude(n, j, kappa));
        if (sign < 0)
            throw NegativeLadder("sector (j=" + j.to_string() + ", kappa=" +
                                 scalar_traits<S>::to_string(kappa) + ") is not unitary: f(" +
                                 std::to_string(n) + ") < 0");
        f.push_back(sign == 0 ? S{} : value);
    }
    return f;
}

} // namespace detail

// Coherent-state coefficients a_0..a_{2j}, a_n = sqrt(f(n)!)/n! with
// f(n)! = f(1)...f(n); satisfies n a_n = sqrt(f(n)) a_{n-1}.
template <class S>
std::vector<S> coherent_coeffs(HalfInt j, const S& kappa) {
    std::vector<S> f = detail::ladder_values(j, kappa, j.twice());
    std::vector<S> a;
    a.reserve(static_cast<std::size_t>(j.twice()) + 1);
    a.push_back(scalar_traits<S>::from_int(1));
    S f_factorial = scalar_traits<S>::from_int(1);
    S n_factorial = scalar_traits<S>::from_int(1);
    for (int n = 1; n <= j.twice(); ++n) {
        f_factorial *= f[static_cast<std::size_t>(n - 1)];
        n_factorial *= scalar_traits<S>::from_int(n);
        a.push_back(scalar_traits<S>::sqrt_value(f_factorial) / n_factorial);
    }
    return a;
}

// |N|^2 = sum_{n=0}^{2j} (f(n)!/(n!)^2) |z|^{2n}; equals (1+|z|^2)^{2j} at
// kappa = 0.
template <class S>
S normalization2(const S& z_abs2, HalfInt j, const S& kappa) {
    std::vector<S> f = detail::ladder_values(j, kappa, j.twice());
    S sum = scalar_traits<S>::from_int(1);
    S term = scalar_traits<S>::from_int(1);
    for (int n = 1; n <= j.twice(); ++n) {
        S n_sq = scalar_traits<S>::from_int(n) * scalar_traits<S>::from_int(n);
        term = term * f[static_cast<std::size_t>(n - 1)] / n_sq * z_abs2;
        sum += term;
    }
    return sum;
}

// Basis monomial f_n(z) = (sqrt(f(n)!)/n!) z^n.
template <class S>
PolyFn<S> monomial(int n, HalfInt j, const S& kappa) {
    if (n < 0 || n > j.twice())
        throw OutOfSector("monomial: n = " + std::to_string(n) + " outside sector 0..2j = " +
                          std::to_string(j.twice()));
    std::vector<S> a = coherent_coeffs(j, kappa);
    PolyFn<S> p;
    p.coeffs.assign(static_cast<std::size_t>(n) + 1, S{});
    p.coeffs[static_cast<std::size_t>(n)] = a[static_cast<std::size_t>(n)];
    p.normalize();
    return p;
}

// j- acts as d/dz.
template <class S>
PolyFn<S> apply_jminus(const PolyFn<S>& p) {
    PolyFn<S> r;
    for (int n = 1; n <= p.degree(); ++n)
        r.coeffs.push_back(scalar_traits<S>::from_int(n) * p.coeff(n));
    r.normalize();
    return r;
}

// j+ acts as z (1 + kappa z d/dz)(2j - z d/dz)(1 + (2j-1)kappa - kappa z d/dz):
// on z^n it multiplies by (1+kappa n)(2j-n)(1+kappa(2j-1-n)) and raises the
// degree; the (2j - z d/dz) factor annihilates the top of the chain. The
// three factors are simultaneously diagonal on monomials, so they are
// applied as one eigenvalue.
template <class S>
PolyFn<S> apply_jplus(const PolyFn<S>& p, HalfInt j, const S& kappa) {
    if (p.degree() > j.twice())
        throw OutOfSector("apply_jplus: polynomial degree exceeds 2j");
    if (p.is_zero()) return {};
    const S one = scalar_traits<S>::from_int(1);
    PolyFn<S> r;
    r.coeffs.assign(static_cast<std::size_t>(p.degree()) + 2, S{});
    for (int n = 0; n <= p.degree(); ++n) {
        S mult = (one + kappa * scalar_traits<S>::from_int(n)) *
                 scalar_traits<S>::from_int(j.twice() - n) *
                 (one + kappa * scalar_traits<S>::from_int(j.twice() - 1 - n));
        r.coeffs[static_cast<std::size_t>(n) + 1] = mult * p.coeff(n);
    }
    r.normalize();
    return r;
}

// j3 acts as z d/dz - j: coefficient c_n picks up (n - j).
template <class S>
PolyFn<S> apply_j3(const PolyFn<S>& p, HalfInt j) {
    PolyFn<S> r;
    for (int n = 0; n <= p.degree(); ++n)
        r.coeffs.push_back(scalar_traits<S>::from_rational(make_rational(2 * n - j.twice(), 2)) *
                           p.coeff(n));
    r.normalize();
    return r;
}

// Psi(z) = sum_n psi_n f_n(z), the analytic image of a sector state.
template <class S>
PolyFn<S> analytic_rep(const std::vector<S>& psi, HalfInt j, const S& kappa) {
    if (static_cast<int>(psi.size()) != j.twice() + 1)
        throw InvalidArgument("analytic_rep: psi must have 2j+1 components");
    std::vector<S> a = coherent_coeffs(j, kappa);
    PolyFn<S> p;
    p.coeffs.resize(psi.size(), S{});
    for (std::size_t n = 0; n < psi.size(); ++n) p.coeffs[n] = psi[n] * a[n];
    p.normalize();
    return p;
}

// Coherent state at a point z: coefficients, the point, and |N|^2.
template <class S>
struct CoherentState {
    HalfInt j;
    S kappa;
    std::vector<S> a;
    S z_re, z_im;
    S norm2;
};

template <class S>
CoherentState<S> coherent_state(HalfInt j, const S& kappa, const S& z_re, const S& z_im) {
    if (scalar_traits<S>::exact && !scalar_traits<S>::is_zero(z_im))
        throw InvalidArgument("exact mode restricts z to rationals (Im z must be 0)");
    CoherentState<S> cs;
    cs.j = j;
    cs.kappa = kappa;
    cs.a = coherent_coeffs(j, kappa);
    cs.z_re = z_re;
    cs.z_im = z_im;
    cs.norm2 = normalization2(z_re * z_re + z_im * z_im, j, kappa);
    return cs;
}

// Matrix of a ladder operator's coefficient action on the monomial basis
// {f_n}: column n holds the f-basis expansion of the operator image of f_n.
// Requires a nondegenerate basis (all a_n != 0, i.e. f(n) > 0 for n <= 2j).
template <class S>
struct BargmannMatrices {
    OperatorMatrix<S> jplus, jminus, j3;
};

template <class S>
BargmannMatrices<S> ladder_matrices(HalfInt j, const S& kappa) {
    std::vector<S> a = coherent_coeffs(j, kappa);
    const int d = j.twice() + 1;
    for (const S& an : a)
        if (scalar_traits<S>::is_zero(an))
            throw NegativeLadder("ladder_matrices: degenerate sector (some f(n) = 0)");
    BargmannMatrices<S> out{OperatorMatrix<S>(d, OpLabel::Jplus),
                            OperatorMatrix<S>(d, OpLabel::Jminus),
                            OperatorMatrix<S>(d, OpLabel::J3)};
    for (int n = 0; n < d; ++n) {
        PolyFn<S> fn = monomial(n, j, kappa);
        PolyFn<S> up = apply_jplus(fn, j, kappa);
        PolyFn<S> down = apply_jminus(fn);
        PolyFn<S> diag = apply_j3(fn, j);
        for (int k = 0; k < d; ++k) {
            if (!scalar_traits<S>::is_zero(up.coeff(k)))
                out.jplus.at(k, n) = up.coeff(k) / a[static_cast<std::size_t>(k)];
            if (!scalar_traits<S>::is_zero(down.coeff(k)))
                out.jminus.at(k, n) = down.coeff(k) / a[static_cast<std::size_t>(k)];
            if (!scalar_traits<S>::is_zero(diag.coeff(k)))
                out.j3.at(k, n) = diag.coeff(k) / a[static_cast<std::size_t>(k)];
        }
    }
    return out;
}

} // namespace polyu2

#endif
