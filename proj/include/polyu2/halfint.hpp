#ifndef POLYU2_HALFINT_HPP
#define POLYU2_HALFINT_HPP

#include <compare>
#include <string>

#include "polyu2/errors.hpp"

namespace polyu2 {

// Exact half-integer, stored as its doubled value. Used for the spin label j
// and the weight m; arithmetic never leaves the half-integer lattice.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int whole) : twice_(2 * whole) {}

    static constexpr HalfInt from_twice(int t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double to_double() const { return 0.5 * twice_; }

    // Whole-integer value; caller must know is_integer() holds.
    constexpr int whole() const { return twice_ / 2; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

    std::string to_string() const {
        if (is_integer()) return std::to_string(whole());
        return std::to_string(twice_) + "/2";
    }

private:
    int twice_ = 0;
};

// True when a+b (equivalently a-b) is a whole integer.
constexpr bool same_parity(HalfInt a, HalfInt b) {
    return (a.twice() - b.twice()) % 2 == 0;
}

inline void require_same_parity(HalfInt j, HalfInt m, const char* where) {
    if (!same_parity(j, m))
        throw InvalidArgument(std::string(where) + ": j and m must differ by an integer (j=" +
                              j.to_string() + ", m=" + m.to_string() + ")");
}

} // namespace polyu2

#endif
