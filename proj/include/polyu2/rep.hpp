#ifndef POLYU2_REP_HPP
#define POLYU2_REP_HPP

#include <utility>

#include "polyu2/kernel.hpp"
#include "polyu2/report.hpp"

namespace polyu2 {

// Result of the positivity scan: the retained levels 0..d-1 and whether the
// chain closes on an exact zero of Phi (clean) or hits a strictly negative
// value (non-unitarizable truncation).
struct LevelScan {
    std::vector<int> levels;
    bool clean = true;

    int dim() const { return static_cast<int>(levels.size()); }
};

namespace detail {

// Phi at level n = j+m, i.e. phi(j, -j+n, kappa) = n(2j+1-n) prod(1+kappa_i(n-1)).
template <class S>
S phi_at_level(int n, HalfInt j, const KappaVector<S>& kappa) {
    return phi(j, HalfInt::from_twice(-j.twice() + 2 * n), kappa);
}

template <class S>
double phi_at_level_magnitude(int n, HalfInt j, const KappaVector<S>& kappa) {
    return phi_magnitude(j, HalfInt::from_twice(-j.twice() + 2 * n), kappa);
}

// sqrt of a structure-function value that the scan classified nonnegative;
// float-mode values within tolerance of zero map to exact zero.
template <class S>
S sqrt_classified(const S& value, double magnitude) {
    int s = scalar_traits<S>::sign_classified(value, magnitude);
    if (s < 0)
        throw NonUnitarizable("negative structure-function value " +
                              scalar_traits<S>::to_string(value) + " under a square root");
    if (s == 0) return S{};
    return scalar_traits<S>::sqrt_value(value);
}

} // namespace detail

// Scans Phi(n) for n = 1..2j+1 and keeps the maximal prefix of strictly
// positive values. Always terminates: Phi(2j+1) = 0 identically.
template <class S>
LevelScan admissible_levels(HalfInt j, const KappaVector<S>& kappa) {
    if (j < HalfInt(0)) throw InvalidArgument("admissible_levels: j must be >= 0");
    LevelScan scan;
    scan.levels.push_back(0);
    for (int n = 1; n <= j.twice() + 1; ++n) {
        S value = detail::phi_at_level(n, j, kappa);
        int sign = scalar_traits<S>::sign_classified(value, detail::phi_at_level_magnitude(n, j, kappa));
        if (sign <= 0) {
            scan.clean = (sign == 0);
            return scan;
        }
        scan.levels.push_back(n);
    }
    throw Error("admissible_levels: scan failed to terminate"); // unreachable
}

template <class S>
int dimension(HalfInt j, const KappaVector<S>& kappa) {
    return admissible_levels(j, kappa).dim();
}

// Unitary representation of u_kappa(2) on the level basis n = 0..d-1.
template <class S>
struct Representation {
    RepBasis basis;
    KappaVector<S> kappa;
    OperatorMatrix<S> j0, j3, jplus, jminus;

    int dim() const { return basis.dim(); }
};

// Builds the d-dimensional matrices J0 = j*I, J3 = diag(-j+n),
// (J+)_{n+1,n} = sqrt(Phi(n+1)), J- = (J+)^T. Requires a clean scan:
// a strictly negative Phi inside or at the closing level has no unitary
// truncation, so relation J+J- = Phi(J3,J0) could not hold.
template <class S>
Representation<S> build_rep(HalfInt j, const KappaVector<S>& kappa) {
    LevelScan scan = admissible_levels(j, kappa);
    if (!scan.clean)
        throw NonUnitarizable("no unitary representation at j=" + j.to_string() +
                              ": Phi is strictly negative at level " +
                              std::to_string(scan.dim()));
    const int d = scan.dim();
    RepBasis basis{j, std::move(scan.levels)};

    Representation<S> rep;
    rep.kappa = kappa;
    rep.j0 = OperatorMatrix<S>(d, OpLabel::J0, basis);
    rep.j3 = OperatorMatrix<S>(d, OpLabel::J3, basis);
    rep.jplus = OperatorMatrix<S>(d, OpLabel::Jplus, basis);
    for (int n = 0; n < d; ++n) {
        rep.j0.at(n, n) = scalar_traits<S>::from_halfint(j);
        rep.j3.at(n, n) = scalar_traits<S>::from_halfint(basis.m_of_level(n));
    }
    for (int n = 0; n + 1 < d; ++n) {
        S value = detail::phi_at_level(n + 1, j, kappa);
        rep.jplus.at(n + 1, n) =
            detail::sqrt_classified(value, detail::phi_at_level_magnitude(n + 1, j, kappa));
    }
    rep.jminus = rep.jplus.transpose();
    rep.jminus.set_label(OpLabel::Jminus);
    rep.basis = std::move(basis);
    return rep;
}

// Checks the five structure relations entrywise; exact mode requires
// identically zero residuals.
template <class S>
VerificationReport verify_structure(const Representation<S>& rep) {
    const int d = rep.dim();
    const HalfInt j = rep.basis.j;
    const double scale =
        std::max({rep.j0.max_abs(), rep.j3.max_abs(), rep.jplus.max_abs(),
                  rep.jplus.max_abs() * rep.jplus.max_abs(), 1.0});

    // Clean chains close on Phi(d) = 0 exactly, so the plain eigenvalue
    // formulas already match the truncated matrices at the top level.
    OperatorMatrix<S> g_diag(d), phi_diag(d), phi_up_diag(d);
    for (int n = 0; n < d; ++n) {
        HalfInt m = rep.basis.m_of_level(n);
        g_diag.at(n, n) = g_fn(j, m, rep.kappa);
        phi_diag.at(n, n) = phi(j, m, rep.kappa);
        phi_up_diag.at(n, n) = phi(j, m + HalfInt(1), rep.kappa);
    }

    VerificationReport report;
    {
        VerificationReport parts;
        check_equal_where(parts, "", commutator(rep.j3, rep.jplus), rep.jplus, scale,
                          [](int) { return true; });
        check_equal_where(parts, "", commutator(rep.j3, rep.jminus),
                          scalar_traits<S>::from_int(-1) * rep.jminus, scale,
                          [](int) { return true; });
        merge_checks(report, "[J3,J+-] = +-J+-", std::move(parts));
    }
    check_equal_where(report, "[J+,J-] = diag G(j,m)", commutator(rep.jplus, rep.jminus), g_diag,
                      scale, [](int) { return true; });
    check_equal_where(report, "J+ = (J-)^dagger", rep.jplus, rep.jminus.transpose(), scale,
                      [](int) { return true; });
    {
        VerificationReport parts;
        check_equal_where(parts, "", rep.jplus * rep.jminus, phi_diag, scale,
                          [](int) { return true; });
        check_equal_where(parts, "", rep.jminus * rep.jplus, phi_up_diag, scale,
                          [](int) { return true; });
        merge_checks(report, "J+J- = diag Phi(j,m), J-J+ = diag Phi(j,m+1)", std::move(parts));
    }
    {
        VerificationReport parts;
        OperatorMatrix<S> zero(d);
        check_equal_where(parts, "", commutator(rep.j0, rep.j3), zero, scale,
                          [](int) { return true; });
        check_equal_where(parts, "", commutator(rep.j0, rep.jplus), zero, scale,
                          [](int) { return true; });
        check_equal_where(parts, "", commutator(rep.j0, rep.jminus), zero, scale,
                          [](int) { return true; });
        merge_checks(report, "[J0,J_a] = 0", std::move(parts));
    }
    return report;
}

// Smallest k with (J+)^k = 0; equals the dimension on every clean chain.
// Also confirms (J-)^k vanishes at the same power.
template <class S>
int nilpotency_index(const Representation<S>& rep) {
    OperatorMatrix<S> p = rep.jplus;
    int k = 1;
    while (!p.is_zero()) {
        p = p * rep.jplus;
        ++k;
        if (k > rep.dim() + 1) throw Error("nilpotency_index: (J+)^k does not vanish");
    }
    if (!rep.jminus.pow(k).is_zero())
        throw Error("nilpotency_index: (J-)^k nonzero at k=" + std::to_string(k));
    if (k > 1 && rep.jminus.pow(k - 1).is_zero())
        throw Error("nilpotency_index: (J-)^(k-1) already zero");
    return k;
}

} // namespace polyu2

#endif
