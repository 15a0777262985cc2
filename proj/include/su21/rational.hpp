#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "errors.hpp"

namespace su21 {

/// Arbitrary-precision rational in lowest terms with positive denominator
/// (gmp keeps results of arithmetic canonical; explicit constructions below
/// canonicalize).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw division_by_zero();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat_parse(const std::string& num, const std::string& den) {
    mpz_class n(num), d(den);
    if (d == 0) throw division_by_zero();
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline std::string num_str(const Rational& q) { return q.get_num().get_str(); }
inline std::string den_str(const Rational& q) { return q.get_den().get_str(); }

/// Exact square root of a nonnegative rational, when it is a perfect square.
inline std::optional<Rational> rat_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

/// Exact cube root of a rational, when numerator and denominator are cubes.
inline std::optional<Rational> rat_cbrt(const Rational& q) {
    mpz_class n = q.get_num();
    const mpz_class& d = q.get_den();
    const bool neg = n < 0;
    if (neg) n = -n;
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 3)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 3)) return std::nullopt;
    if (neg) rn = -rn;
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace su21
