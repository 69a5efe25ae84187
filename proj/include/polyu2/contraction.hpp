#ifndef POLYU2_CONTRACTION_HPP
#define POLYU2_CONTRACTION_HPP

#include <algorithm>
#include <map>

#include "polyu2/rep.hpp"

namespace polyu2 {

// Two-boson <-> angular-momentum label maps: j = (n+ + n-)/2, m = (n+ - n-)/2.
inline std::pair<HalfInt, HalfInt> boson_to_jm(int n_plus, int n_minus) {
    if (n_plus < 0 || n_minus < 0)
        throw InvalidArgument("boson_to_jm: occupations must be nonnegative");
    return {HalfInt::from_twice(n_plus + n_minus), HalfInt::from_twice(n_plus - n_minus)};
}

inline std::pair<int, int> jm_to_boson(HalfInt j, HalfInt m) {
    require_same_parity(j, m, "jm_to_boson");
    int n_plus = (j + m).whole();
    int n_minus = (j - m).whole();
    if (n_plus < 0 || n_minus < 0)
        throw InvalidArgument("jm_to_boson: |m| must not exceed j");
    return {n_plus, n_minus};
}

// Restricted structure function Phi_j(n) = n(2j+1-n) prod_i (1 + kappa_i(n-1)),
// the Eq.-(6) function on the 2j-quanta sector with N = J0 + J3.
template <class S>
S phi_j(int n, HalfInt j, const KappaVector<S>& kappa) {
    if (n < 0) throw InvalidArgument("phi_j: n must be nonnegative");
    S head = scalar_traits<S>::from_int(n) * scalar_traits<S>::from_int(j.twice() + 1 - n);
    return head * detail::deformation_product(scalar_traits<S>::from_int(n - 1), kappa);
}

// Submatrix on a subset of basis indices (used to restrict to a sector).
template <class S>
OperatorMatrix<S> submatrix(const OperatorMatrix<S>& m, const std::vector<int>& idx) {
    OperatorMatrix<S> out(static_cast<int>(idx.size()), m.label());
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c)
            out.at(static_cast<int>(r), static_cast<int>(c)) = m.at(idx[r], idx[c]);
    return out;
}

// Ordinary (undeformed) two-boson operators on the Fock space truncated by
// total quanta n+ + n- <= total_cap. States are ordered by (total, n+), so
// sectors are contiguous blocks; J+- preserve the total, so every retained
// sector is complete.
template <class S>
struct SchwingerFockOps {
    std::vector<std::pair<int, int>> states; // (n+, n-)
    OperatorMatrix<S> j0, j3, jplus, jminus, n_plus, n_minus;

    std::vector<int> sector_indices(int total) const {
        std::vector<int> idx;
        for (int i = 0; i < static_cast<int>(states.size()); ++i)
            if (states[i].first + states[i].second == total) idx.push_back(i);
        return idx;
    }
};

template <class S>
SchwingerFockOps<S> schwinger_fock_ops(int total_cap) {
    if (total_cap < 1) throw InvalidArgument("schwinger_fock_ops: total_cap must be >= 1");
    SchwingerFockOps<S> ops;
    for (int total = 0; total <= total_cap; ++total)
        for (int np = 0; np <= total; ++np) ops.states.push_back({np, total - np});
    const int dim = static_cast<int>(ops.states.size());
    std::map<std::pair<int, int>, int> index;
    for (int i = 0; i < dim; ++i) index[ops.states[i]] = i;

    OperatorMatrix<S> bp_plus(dim), bm_plus(dim);
    ops.n_plus = OperatorMatrix<S>(dim);
    ops.n_minus = OperatorMatrix<S>(dim);
    for (int i = 0; i < dim; ++i) {
        auto [np, nm] = ops.states[i];
        ops.n_plus.at(i, i) = scalar_traits<S>::from_int(np);
        ops.n_minus.at(i, i) = scalar_traits<S>::from_int(nm);
        if (np + nm < total_cap) {
            bp_plus.at(index[{np + 1, nm}], i) =
                scalar_traits<S>::sqrt_value(scalar_traits<S>::from_int(np + 1));
            bm_plus.at(index[{np, nm + 1}], i) =
                scalar_traits<S>::sqrt_value(scalar_traits<S>::from_int(nm + 1));
        }
    }
    const S half = scalar_traits<S>::from_rational(make_rational(1, 2));
    ops.jplus = bp_plus * bm_plus.transpose();
    ops.jminus = bm_plus * bp_plus.transpose();
    ops.j0 = half * (ops.n_plus + ops.n_minus);
    ops.j3 = half * (ops.n_plus - ops.n_minus);
    return ops;
}

// Verifies the ordinary su(2) Schwinger relations on all sectors j <= j_max,
// plus the Eq.-(22) identities N = J0+J3 and 2jI-N = J0-J3 sector by sector.
template <class S>
VerificationReport schwinger_u2_check(HalfInt j_max) {
    if (j_max < HalfInt::from_twice(1))
        throw InvalidArgument("schwinger_u2_check: j_max must be >= 1/2");
    const int total_cap = j_max.twice();
    SchwingerFockOps<S> ops = schwinger_fock_ops<S>(total_cap);
    const int dim = static_cast<int>(ops.states.size());
    const OperatorMatrix<S>& jplus = ops.jplus;
    const OperatorMatrix<S>& jminus = ops.jminus;
    const OperatorMatrix<S>& j0 = ops.j0;
    const OperatorMatrix<S>& j3 = ops.j3;

    const double scale = std::max(1.0, jplus.max_abs() * jplus.max_abs());
    VerificationReport report;
    {
        VerificationReport parts;
        check_equal_where(parts, "", commutator(j3, jplus), jplus, scale, [](int) { return true; });
        check_equal_where(parts, "", commutator(j3, jminus),
                          scalar_traits<S>::from_int(-1) * jminus, scale,
                          [](int) { return true; });
        merge_checks(report, "[J3,J+-] = +-J+-", std::move(parts));
    }
    {
        OperatorMatrix<S> two_j3 = scalar_traits<S>::from_int(2) * j3;
        check_equal_where(report, "[J+,J-] = 2J3", commutator(jplus, jminus), two_j3, scale,
                          [](int) { return true; });
    }
    {
        VerificationReport parts;
        OperatorMatrix<S> zero(dim);
        check_equal_where(parts, "", commutator(j0, j3), zero, scale, [](int) { return true; });
        check_equal_where(parts, "", commutator(j0, jplus), zero, scale, [](int) { return true; });
        check_equal_where(parts, "", commutator(j0, jminus), zero, scale, [](int) { return true; });
        merge_checks(report, "[J0,J_a] = 0", std::move(parts));
    }
    {
        // per-sector N = J0 + J3 and 2jI - N = J0 - J3
        VerificationReport parts;
        for (int total = 0; total <= total_cap; ++total) {
            std::vector<int> idx = ops.sector_indices(total);
            OperatorMatrix<S> n_op = submatrix(ops.n_plus, idx);
            OperatorMatrix<S> lhs_sum = submatrix(j0 + j3, idx);
            OperatorMatrix<S> lhs_diff = submatrix(j0 - j3, idx);
            OperatorMatrix<S> two_j_minus_n =
                scalar_traits<S>::from_int(total) * OperatorMatrix<S>::identity(total + 1) - n_op;
            check_equal_where(parts, "", lhs_sum, n_op, scale, [](int) { return true; });
            check_equal_where(parts, "", lhs_diff, two_j_minus_n, scale, [](int) { return true; });
        }
        merge_checks(report, "J0+J3 = N, J0-J3 = 2jI-N per sector", std::move(parts));
    }
    return report;
}

// Matrices of the undeformed Schwinger operators restricted to the
// 2j-quanta sector, ordered by ascending m (test hook for the sector
// consistency property).
template <class S>
struct SchwingerSector {
    OperatorMatrix<S> j0, j3, jplus, jminus;
};

template <class S>
SchwingerSector<S> schwinger_sector(HalfInt j) {
    const int two_j = j.twice();
    const int d = two_j + 1;
    SchwingerSector<S> sec{OperatorMatrix<S>(d), OperatorMatrix<S>(d), OperatorMatrix<S>(d),
                           OperatorMatrix<S>(d)};
    for (int n = 0; n < d; ++n) {
        // |n+, n-> = |n, 2j-n>, m = n - j
        sec.j0.at(n, n) = scalar_traits<S>::from_halfint(j);
        sec.j3.at(n, n) = scalar_traits<S>::from_rational(make_rational(2 * n - two_j, 2));
        if (n + 1 < d) {
            // J+ = b+^dag b-: sqrt((n+1)(2j-n))
            S value = scalar_traits<S>::from_int(n + 1) * scalar_traits<S>::from_int(two_j - n);
            sec.jplus.at(n + 1, n) = scalar_traits<S>::sqrt_value(value);
        }
    }
    sec.jminus = sec.jplus.transpose();
    return sec;
}

struct ContractionRow {
    HalfInt j;
    int n = 0;
    double contracted = 0.0; // Phi_j(n) / (2j)
    double limit = 0.0;      // Phi_inf(n)
    double abs_error = 0.0;  // |contracted - limit| = Phi_inf(n)(n-1)/(2j)

    friend bool operator==(const ContractionRow&, const ContractionRow&) = default;
};

template <class S>
struct ContractionTable {
    KappaVector<S> kappa;
    int n_max = 0;
    std::vector<ContractionRow> rows;
};

// Tabulates Phi_j(n)/(2j) against Phi_inf(n) for n = 0..n_max over the given
// j list; rows sorted by (j, n). Differences are formed in S before the
// float conversion, so exact mode yields the exact error law.
template <class S>
ContractionTable<S> contract_table(int n_max, const KappaVector<S>& kappa,
                                   std::vector<HalfInt> j_list) {
    if (n_max < 0) throw InvalidArgument("contract_table: n_max must be nonnegative");
    for (HalfInt j : j_list)
        if (j.twice() < n_max || j.twice() == 0)
            throw DomainTooSmall("contract_table: need 2j >= max(1, n_max), got 2j = " +
                                 std::to_string(j.twice()));
    for (int n = 1; n <= n_max; ++n) {
        S limit = phi_inf(n, kappa);
        if (scalar_traits<S>::sign_classified(limit, phi_inf_magnitude(n, kappa)) <= 0)
            throw InvalidArgument("contract_table: kappa does not admit level " +
                                  std::to_string(n) + " (Phi_inf <= 0)");
    }
    std::sort(j_list.begin(), j_list.end());
    j_list.erase(std::unique(j_list.begin(), j_list.end()), j_list.end());

    ContractionTable<S> table;
    table.kappa = kappa;
    table.n_max = n_max;
    for (HalfInt j : j_list) {
        const S two_j = scalar_traits<S>::from_int(j.twice());
        for (int n = 0; n <= n_max; ++n) {
            S contracted = phi_j(n, j, kappa) / two_j;
            S limit = phi_inf(n, kappa);
            S err = scalar_traits<S>::abs_value(contracted - limit);
            table.rows.push_back({j, n, scalar_traits<S>::to_double(contracted),
                                  scalar_traits<S>::to_double(limit),
                                  scalar_traits<S>::to_double(err)});
        }
    }
    return table;
}

// One-mode generalized Weyl-Heisenberg algebra A_kappa on levels 0..n_cap-1:
// a+a- = F(N) and [N, a+-] = +-a+- hold on the whole truncated space;
// [a-,a+] = I + 2 kappa N holds on interior levels, and everywhere when the
// space closes exactly (F(n_cap) = 0). The artificial boundary row is
// flagged in the notes, not failed.
template <class S>
VerificationReport a_kappa_check(const S& kappa, int n_cap) {
    if (n_cap < 2) throw InvalidArgument("a_kappa_check: n_cap must be >= 2");
    for (int n = 1; n < n_cap; ++n) {
        S value = f_wh(n, kappa);
        if (scalar_traits<S>::sign_classified(value, f_wh_magnitude(n, kappa)) <= 0)
            throw NonUnitarizable("a_kappa_check: F(" + std::to_string(n) + ") <= 0");
    }
    S top = f_wh(n_cap, kappa);
    int top_sign = scalar_traits<S>::sign_classified(top, f_wh_magnitude(n_cap, kappa));
    if (top_sign < 0)
        throw NonUnitarizable("a_kappa_check: F(n_cap) < 0, no unitary chain of length " +
                              std::to_string(n_cap));
    const bool closed = top_sign == 0;

    OperatorMatrix<S> aplus(n_cap), num(n_cap), f_diag(n_cap), comm_rhs(n_cap);
    for (int n = 0; n < n_cap; ++n) {
        num.at(n, n) = scalar_traits<S>::from_int(n);
        f_diag.at(n, n) = f_wh(n, kappa);
        comm_rhs.at(n, n) = scalar_traits<S>::from_int(1) +
                            scalar_traits<S>::from_int(2) * kappa * scalar_traits<S>::from_int(n);
        if (n + 1 < n_cap)
            aplus.at(n + 1, n) = scalar_traits<S>::sqrt_value(f_wh(n + 1, kappa));
    }
    OperatorMatrix<S> aminus = aplus.transpose();

    const double scale = std::max(1.0, aplus.max_abs() * aplus.max_abs());
    VerificationReport report;
    check_equal_where(report, "a+a- = F(N)", aplus * aminus, f_diag, scale,
                      [](int) { return true; });
    {
        VerificationReport parts;
        check_equal_where(parts, "", commutator(num, aplus), aplus, scale,
                          [](int) { return true; });
        check_equal_where(parts, "", commutator(num, aminus),
                          scalar_traits<S>::from_int(-1) * aminus, scale,
                          [](int) { return true; });
        merge_checks(report, "[N,a+-] = +-a+-", std::move(parts));
    }
    {
        auto include = [n_cap, closed](int i) { return closed || i < n_cap - 1; };
        check_equal_where(report, "[a-,a+] = I + 2 kappa N", commutator(aminus, aplus), comm_rhs,
                          scale, include);
    }
    if (!closed)
        report.notes.push_back("top level " + std::to_string(n_cap - 1) +
                               " excluded from [a-,a+]: truncation at n_cap is artificial "
                               "(F(n_cap) != 0)");
    else
        report.notes.push_back("space closes exactly at n_cap (F(n_cap) = 0)");
    return report;
}

} // namespace polyu2

#endif
