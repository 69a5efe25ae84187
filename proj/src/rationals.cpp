#include "polyu2/rationals.hpp"

#include <cctype>

namespace polyu2 {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InvalidArgument("empty rational literal");
    std::size_t pos = 0;
    if (text[0] == '+' || text[0] == '-') pos = 1;
    bool saw_digit = false;
    bool saw_slash = false;
    for (std::size_t i = pos; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            saw_digit = true;
        } else if (c == '/' && !saw_slash && saw_digit && i + 1 < text.size()) {
            saw_slash = true;
        } else {
            throw InvalidArgument("bad rational literal '" + text + "' (expected p/q or integer)");
        }
    }
    if (!saw_digit) throw InvalidArgument("bad rational literal '" + text + "'");
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw InvalidArgument("bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw InvalidArgument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {
// Trial-division bound for pulling square factors out of radicands. The
// radicands seen here are products of small structure-function values, so
// this catches everything that matters in practice.
constexpr unsigned long kSmallPrimeBound = 1000;
} // namespace

void extract_square_part(const mpz_class& n, mpz_class& square_root_part, mpz_class& reduced) {
    square_root_part = 1;
    reduced = n;
    if (reduced == 0 || reduced == 1) return;

    if (mpz_perfect_square_p(reduced.get_mpz_t())) {
        mpz_sqrt(square_root_part.get_mpz_t(), reduced.get_mpz_t());
        reduced = 1;
        return;
    }

    mpz_class p = 2;
    while (p.get_ui() <= kSmallPrimeBound && p * p <= reduced) {
        mpz_class p2 = p * p;
        while (mpz_divisible_p(reduced.get_mpz_t(), p2.get_mpz_t())) {
            reduced /= p2;
            square_root_part *= p;
        }
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }
    if (mpz_perfect_square_p(reduced.get_mpz_t())) {
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), reduced.get_mpz_t());
        square_root_part *= s;
        reduced = 1;
    }
}

} // namespace polyu2
