#ifndef POLYU2_REPORT_HPP
#define POLYU2_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "polyu2/matrix.hpp"

namespace polyu2 {

// First entry at which an identity failed, with both sides rendered.
struct Witness {
    int row = 0;
    int col = 0;
    std::string expected;
    std::string actual;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckResult {
    std::string identity;
    bool passed = false;
    double residual = 0.0; // max entrywise |lhs - rhs|, exact mode reports 0 on pass
    std::optional<Witness> witness;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

// Pass/fail record per identity. Exact mode: passed iff the residual is
// identically zero. Float mode: passed iff residual <= 1e-12 * (1 + scale)
// with scale the largest operand entry.
struct VerificationReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    double max_residual() const {
        double r = 0.0;
        for (const auto& c : checks) r = std::max(r, c.residual);
        return r;
    }

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Records the check `lhs == rhs` (entrywise) restricted to rows/cols for
// which `include(index)` is true. `scale` feeds the float-mode tolerance.
template <class S, class Include>
void check_equal_where(VerificationReport& report, std::string identity,
                       const OperatorMatrix<S>& lhs, const OperatorMatrix<S>& rhs,
                       double scale, Include include) {
    CheckResult res;
    res.identity = std::move(identity);
    res.passed = true;
    for (int r = 0; r < lhs.dim(); ++r) {
        if (!include(r)) continue;
        for (int c = 0; c < lhs.dim(); ++c) {
            if (!include(c)) continue;
            S diff = lhs.at(r, c) - rhs.at(r, c);
            double ad = std::fabs(scalar_traits<S>::to_double(diff));
            bool zero = scalar_traits<S>::exact
                            ? scalar_traits<S>::is_zero(diff)
                            : ad <= scalar_traits<double>::tol * (1.0 + scale);
            if (!zero) {
                res.residual = std::max(res.residual, ad);
                if (!res.witness)
                    res.witness = Witness{r, c, scalar_traits<S>::to_string(rhs.at(r, c)),
                                          scalar_traits<S>::to_string(lhs.at(r, c))};
                res.passed = false;
            }
        }
    }
    report.checks.push_back(std::move(res));
}

template <class S>
void check_equal(VerificationReport& report, std::string identity, const OperatorMatrix<S>& lhs,
                 const OperatorMatrix<S>& rhs) {
    double scale = std::max(lhs.max_abs(), rhs.max_abs());
    check_equal_where(report, std::move(identity), lhs, rhs, scale, [](int) { return true; });
}

// Folds several sub-checks into a single named check: passes iff all parts
// pass, keeps the largest residual and the first failing witness.
inline void merge_checks(VerificationReport& report, std::string identity,
                         VerificationReport&& parts) {
    CheckResult merged;
    merged.identity = std::move(identity);
    merged.passed = true;
    for (auto& c : parts.checks) {
        merged.residual = std::max(merged.residual, c.residual);
        if (!c.passed) {
            merged.passed = false;
            if (!merged.witness) merged.witness = std::move(c.witness);
        }
    }
    report.checks.push_back(std::move(merged));
}

} // namespace polyu2

#endif
