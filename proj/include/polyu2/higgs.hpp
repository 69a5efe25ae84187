#ifndef POLYU2_HIGGS_HPP
#define POLYU2_HIGGS_HPP

#include <cmath>

#include "polyu2/contraction.hpp"

namespace polyu2 {

struct FockState {
    int n1 = 0;
    int n2 = 0;

    friend bool operator==(const FockState&, const FockState&) = default;
};

// Two-mode A_kappa Fock space, per-mode occupations 0..cap-1, states in
// lexicographic (n1, n2) order. kappa < 0 (with -1/kappa a positive integer)
// closes both modes at cap = d = 1 - 1/kappa; kappa >= 0 spaces are
// infinite-dimensional and cap is a user truncation.
template <class S>
struct TwoModeSpace {
    S kappa;
    int cap = 0;
    bool closed = false;
    std::vector<FockState> states;

    int dim() const { return cap * cap; }
    int index(int n1, int n2) const { return n1 * cap + n2; }
    // True when all single-mode images of the state stay below the cap, so
    // every identity check on it is free of truncation artifacts.
    bool interior(const FockState& s) const {
        return closed || (s.n1 <= cap - 2 && s.n2 <= cap - 2);
    }
};

template <class S>
TwoModeSpace<S> build_two_mode(const S& kappa, int cap) {
    if (cap < 1) throw InvalidArgument("build_two_mode: cap must be >= 1");
    TwoModeSpace<S> space;
    space.kappa = kappa;
    double kd = scalar_traits<S>::to_double(kappa);
    int ks = scalar_traits<S>::sign_classified(kappa, std::fabs(kd));
    if (ks < 0) {
        // closed case: need -1/kappa to be a positive integer, then d = 1 - 1/kappa
        int d = static_cast<int>(std::lround(1.0 - 1.0 / kd));
        S f_at_d = d >= 1 ? f_wh(d, kappa) : scalar_traits<S>::from_int(1);
        if (d < 2 || scalar_traits<S>::sign_classified(f_at_d, f_wh_magnitude(std::max(d, 1), kappa)) != 0)
            throw UnsupportedKappa("build_two_mode: kappa < 0 requires -1/kappa to be a "
                                   "positive integer (got kappa = " +
                                   scalar_traits<S>::to_string(kappa) + ")");
        if (cap != d)
            throw InvalidArgument("build_two_mode: kappa = " + scalar_traits<S>::to_string(kappa) +
                                  " closes both modes at d = " + std::to_string(d) +
                                  "; cap must equal d");
        space.closed = true;
    }
    space.cap = cap;
    space.states.reserve(static_cast<std::size_t>(cap) * cap);
    for (int n1 = 0; n1 < cap; ++n1)
        for (int n2 = 0; n2 < cap; ++n2) space.states.push_back({n1, n2});
    return space;
}

template <class S>
struct HiggsOps {
    OperatorMatrix<S> jplus, jminus, j3, j0;
};

namespace detail {

// Single-mode matrices on the two-mode space: creation on mode 1 or 2 with
// entries sqrt(F(n_i + 1)); a- is the transpose.
template <class S>
OperatorMatrix<S> mode_creation(const TwoModeSpace<S>& space, int mode) {
    OperatorMatrix<S> a(space.dim());
    for (const FockState& s : space.states) {
        int n = mode == 1 ? s.n1 : s.n2;
        if (n + 1 >= space.cap) continue;
        int to = mode == 1 ? space.index(s.n1 + 1, s.n2) : space.index(s.n1, s.n2 + 1);
        a.at(to, space.index(s.n1, s.n2)) =
            sqrt_classified(f_wh(n + 1, space.kappa), f_wh_magnitude(n + 1, space.kappa));
    }
    return a;
}

} // namespace detail

// Schwinger bilinears j+ = a1+ a2-, j- = a1- a2+, j3 = (N1-N2)/2,
// j0 = (N1+N2)/2 as matrices on the full two-mode space.
template <class S>
HiggsOps<S> build_higgs_ops(const TwoModeSpace<S>& space) {
    OperatorMatrix<S> a1_plus = detail::mode_creation(space, 1);
    OperatorMatrix<S> a2_plus = detail::mode_creation(space, 2);
    HiggsOps<S> ops;
    ops.jplus = a1_plus * a2_plus.transpose();
    ops.jminus = a1_plus.transpose() * a2_plus;
    ops.j3 = OperatorMatrix<S>(space.dim(), OpLabel::J3);
    ops.j0 = OperatorMatrix<S>(space.dim(), OpLabel::J0);
    for (const FockState& s : space.states) {
        int i = space.index(s.n1, s.n2);
        ops.j3.at(i, i) = scalar_traits<S>::from_rational(make_rational(s.n1 - s.n2, 2));
        ops.j0.at(i, i) = scalar_traits<S>::from_rational(make_rational(s.n1 + s.n2, 2));
    }
    ops.jplus.set_label(OpLabel::Jplus);
    ops.jminus.set_label(OpLabel::Jminus);
    return ops;
}

// Verifies the cubic Higgs relation
//   [j+,j-] = 2 j3 (I - kappa + 2 kappa j0 (I + kappa j0)) - 4 kappa^2 j3^3
// together with [j3,j+-] = +-j+-, [j0,j_a] = 0 and hermiticity, entrywise on
// interior states (all states when the space is closed).
template <class S>
VerificationReport verify_higgs(const TwoModeSpace<S>& space) {
    HiggsOps<S> ops = build_higgs_ops(space);
    const int dim = space.dim();
    const S one = scalar_traits<S>::from_int(1);
    const S kappa = space.kappa;

    OperatorMatrix<S> identity_m = OperatorMatrix<S>::identity(dim);
    OperatorMatrix<S> depth = (one - kappa) * identity_m +
                              (scalar_traits<S>::from_int(2) * kappa) *
                                  (ops.j0 * (identity_m + kappa * ops.j0));
    OperatorMatrix<S> rhs = scalar_traits<S>::from_int(2) * (ops.j3 * depth) -
                            (scalar_traits<S>::from_int(4) * kappa * kappa) *
                                (ops.j3 * ops.j3 * ops.j3);

    const double scale =
        std::max({1.0, ops.jplus.max_abs() * ops.jplus.max_abs(), rhs.max_abs()});
    auto interior = [&space](int i) { return space.interior(space.states[i]); };

    VerificationReport report;
    check_equal_where(report,
                      "[j+,j-] = 2j3(I - k + 2k j0(I + k j0)) - 4k^2 j3^3",
                      commutator(ops.jplus, ops.jminus), rhs, scale, interior);
    {
        VerificationReport parts;
        check_equal_where(parts, "", commutator(ops.j3, ops.jplus), ops.jplus, scale,
                          [](int) { return true; });
        check_equal_where(parts, "", commutator(ops.j3, ops.jminus),
                          scalar_traits<S>::from_int(-1) * ops.jminus, scale,
                          [](int) { return true; });
        merge_checks(report, "[j3,j+-] = +-j+-", std::move(parts));
    }
    {
        VerificationReport parts;
        OperatorMatrix<S> zero(dim);
        check_equal_where(parts, "", commutator(ops.j0, ops.j3), zero, scale,
                          [](int) { return true; });
        check_equal_where(parts, "", commutator(ops.j0, ops.jplus), zero, scale,
                          [](int) { return true; });
        check_equal_where(parts, "", commutator(ops.j0, ops.jminus), zero, scale,
                          [](int) { return true; });
        merge_checks(report, "[j0,j_a] = 0", std::move(parts));
    }
    check_equal_where(report, "j+ = (j-)^dagger", ops.jplus, ops.jminus.transpose(), scale,
                      [](int) { return true; });
    if (!space.closed)
        report.notes.push_back(
            "boundary states (n_i = cap-1) excluded from the cubic commutator check: "
            "truncation at the cap is artificial for kappa >= 0");
    return report;
}

struct Sector {
    HalfInt j;
    std::vector<FockState> states; // ascending m, i.e. ascending n1
    HalfInt m_lo, m_hi;

    int dim() const { return static_cast<int>(states.size()); }
};

struct SectorMap {
    std::vector<Sector> sectors;
    int total_dim = 0;
};

// Groups states by j = (n1+n2)/2. The m-range of sector j on a capped space
// is max(-j, j-(cap-1)) .. min(j, (cap-1)-j); dimensions sum to cap^2.
template <class S>
SectorMap sector_decomposition(const TwoModeSpace<S>& space) {
    SectorMap map;
    for (int total = 0; total <= 2 * (space.cap - 1); ++total) {
        Sector sec;
        sec.j = HalfInt::from_twice(total);
        for (int n1 = 0; n1 < space.cap; ++n1) {
            int n2 = total - n1;
            if (n2 < 0 || n2 >= space.cap) continue;
            sec.states.push_back({n1, n2});
        }
        sec.m_lo = HalfInt::from_twice(std::max(-total, total - 2 * (space.cap - 1)));
        sec.m_hi = HalfInt::from_twice(std::min(total, 2 * (space.cap - 1) - total));
        if (sec.dim() != (sec.m_hi - sec.m_lo).whole() + 1)
            throw Error("sector_decomposition: m-range does not match state count");
        map.total_dim += sec.dim();
        map.sectors.push_back(std::move(sec));
    }
    if (map.total_dim != space.dim())
        throw Error("sector_decomposition: sector dimensions do not sum to cap^2");
    return map;
}

// Restriction of an operator to the sector of total quanta 2j, basis ordered
// by ascending m.
template <class S>
OperatorMatrix<S> sector_matrix(const TwoModeSpace<S>& space, const OperatorMatrix<S>& op,
                                HalfInt j) {
    int total = j.twice();
    if (total < 0 || total > 2 * (space.cap - 1))
        throw InvalidArgument("sector_matrix: no sector with j = " + j.to_string());
    std::vector<int> idx;
    for (int n1 = 0; n1 < space.cap; ++n1) {
        int n2 = total - n1;
        if (n2 < 0 || n2 >= space.cap) continue;
        idx.push_back(space.index(n1, n2));
    }
    return submatrix(op, idx);
}

// Ladder actions j-|n> = sqrt(f(n))|n-1>, j+|n> = sqrt(f(n+1))|n+1>,
// j3|n> = (n-j)|n> on a complete sector, checked against f(n) = F(n)F(2j-n+1).
template <class S>
VerificationReport sector_ladder_check(const TwoModeSpace<S>& space, HalfInt j) {
    int total = j.twice();
    if (total < 0 || total > 2 * (space.cap - 1))
        throw InvalidArgument("sector_ladder_check: no sector with j = " + j.to_string());
    if (total > space.cap - 1)
        throw SectorTruncated("sector j = " + j.to_string() +
                              " is clipped by the cap; the full ladder form does not apply");

    HiggsOps<S> ops = build_higgs_ops(space);
    const int d = total + 1;
    OperatorMatrix<S> expect_plus(d), expect_minus(d), expect_j3(d);
    for (int n = 0; n < d; ++n) {
        expect_j3.at(n, n) = scalar_traits<S>::from_rational(make_rational(2 * n - total, 2));
        if (n + 1 < d) {
            S f = f_higgs(n + 1, j, space.kappa);
            S root = detail::sqrt_classified(f, f_higgs_magnitude(n + 1, j, space.kappa));
            expect_plus.at(n + 1, n) = root;
            expect_minus.at(n, n + 1) = root;
        }
    }
    const double scale = std::max(1.0, expect_plus.max_abs());
    VerificationReport report;
    check_equal_where(report, "j+|n> = sqrt(f(n+1))|n+1>", sector_matrix(space, ops.jplus, j),
                      expect_plus, scale, [](int) { return true; });
    check_equal_where(report, "j-|n> = sqrt(f(n))|n-1>", sector_matrix(space, ops.jminus, j),
                      expect_minus, scale, [](int) { return true; });
    check_equal_where(report, "j3|n> = (n-j)|n>", sector_matrix(space, ops.j3, j), expect_j3,
                      scale, [](int) { return true; });
    return report;
}

} // namespace polyu2

#endif
