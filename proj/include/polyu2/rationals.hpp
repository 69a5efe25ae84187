#ifndef POLYU2_RATIONALS_HPP
#define POLYU2_RATIONALS_HPP

#include <gmpxx.h>

#include <string>

#include "polyu2/halfint.hpp"

namespace polyu2 {

using Rational = mpq_class;

// Parses "p/q" or a bare integer (q = 1). Throws InvalidArgument on anything
// else, including decimal notation: exact inputs are rationals only.
Rational parse_rational(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& q);

// mpq_class never canonicalizes (num, den) pairs on its own; route every
// two-argument construction through here.
inline Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_from_halfint(HalfInt h) {
    return make_rational(h.twice(), 2);
}

// Splits n >= 0 as n = s^2 * r with r free of small square factors.
// r is fully squarefree whenever its square part is a perfect square or a
// product of squares of primes below the trial-division bound; that is
// enough for the exact equality tests used throughout (which compare
// sign and coeff^2 * radicand rather than relying on canonical radicands).
void extract_square_part(const mpz_class& n, mpz_class& square_root_part, mpz_class& reduced);

} // namespace polyu2

#endif
