#ifndef POLYU2_MATRIX_HPP
#define POLYU2_MATRIX_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "polyu2/scalar.hpp"

namespace polyu2 {

// Basis of a single lowest-weight chain: levels n = j+m, ascending from the
// lowest weight m = -j.
struct RepBasis {
    HalfInt j;
    std::vector<int> levels;

    int dim() const { return static_cast<int>(levels.size()); }
    HalfInt m_of_level(int n) const { return HalfInt::from_twice(-j.twice() + 2 * n); }

    friend bool operator==(const RepBasis& a, const RepBasis& b) {
        return a.j == b.j && a.levels == b.levels;
    }
};

enum class OpLabel { J0, J3, Jplus, Jminus, Other };

inline const char* op_label_name(OpLabel l) {
    switch (l) {
        case OpLabel::J0: return "J0";
        case OpLabel::J3: return "J3";
        case OpLabel::Jplus: return "Jplus";
        case OpLabel::Jminus: return "Jminus";
        default: return "other";
    }
}

inline OpLabel op_label_from_name(const std::string& s) {
    if (s == "J0") return OpLabel::J0;
    if (s == "J3") return OpLabel::J3;
    if (s == "Jplus") return OpLabel::Jplus;
    if (s == "Jminus") return OpLabel::Jminus;
    return OpLabel::Other;
}

// Dense square matrix over the mode scalar, tagged with its basis when it
// acts on a lowest-weight chain. Sizes here are tiny (d <= 144), so dense
// storage with a zero-skipping product is all that is needed.
template <class S>
class OperatorMatrix {
public:
    OperatorMatrix() : dim_(0) {}
    explicit OperatorMatrix(int dim, OpLabel label = OpLabel::Other,
                            std::optional<RepBasis> basis = std::nullopt)
        : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, S{}), label_(label),
          basis_(std::move(basis)) {}

    static OperatorMatrix identity(int dim) {
        OperatorMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = scalar_traits<S>::from_int(1);
        return m;
    }

    int dim() const { return dim_; }
    OpLabel label() const { return label_; }
    void set_label(OpLabel l) { label_ = l; }
    const std::optional<RepBasis>& basis() const { return basis_; }

    S& at(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
    const S& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim_ + c]; }

    OperatorMatrix transpose() const {
        OperatorMatrix t(dim_, label_, basis_);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    OperatorMatrix pow(int k) const {
        OperatorMatrix result = identity(dim_);
        for (int i = 0; i < k; ++i) result = result * *this;
        return result;
    }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(),
                           [](const S& x) { return scalar_traits<S>::is_zero(x); });
    }

    // max_n |entry_n| as a double; the scale used by float-mode tolerances.
    double max_abs() const {
        double m = 0.0;
        for (const S& x : a_) m = std::max(m, std::fabs(scalar_traits<S>::to_double(x)));
        return m;
    }

    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
        OperatorMatrix c(a.dim_);
        for (int i = 0; i < a.dim_; ++i)
            for (int k = 0; k < a.dim_; ++k) {
                const S& aik = a.at(i, k);
                if (scalar_traits<S>::is_zero(aik)) continue;
                for (int j = 0; j < a.dim_; ++j) {
                    const S& bkj = b.at(k, j);
                    if (scalar_traits<S>::is_zero(bkj)) continue;
                    c.at(i, j) += aik * bkj;
                }
            }
        return c;
    }

    friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
        OperatorMatrix c(a.dim_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
        return c;
    }

    friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
        OperatorMatrix c(a.dim_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
        return c;
    }

    friend OperatorMatrix operator*(const S& s, const OperatorMatrix& m) {
        OperatorMatrix c(m.dim_);
        for (std::size_t i = 0; i < m.a_.size(); ++i) c.a_[i] = s * m.a_[i];
        return c;
    }

    friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
        return a.dim_ == b.dim_ && a.a_ == b.a_;
    }

private:
    int dim_;
    std::vector<S> a_;
    OpLabel label_ = OpLabel::Other;
    std::optional<RepBasis> basis_;
};

template <class S>
OperatorMatrix<S> commutator(const OperatorMatrix<S>& a, const OperatorMatrix<S>& b) {
    return a * b - b * a;
}

} // namespace polyu2

#endif
