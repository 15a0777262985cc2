#pragma once

#include <array>
#include <optional>
#include <string>

#include "errors.hpp"
#include "rational.hpp"

namespace su21 {

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Element of the degree-4 cyclotomic field Q(z), where z is a fixed
/// primitive 8th root of unity with z^4 = -1.  Stored as
///
///     c0 + c1*z + c2*z^2 + c3*z^3,   c_k rational.
///
/// The derived constants i = z^2 and sqrt2 = z - z^3 satisfy i^2 = -1 and
/// sqrt2^2 = 2.  Complex conjugation is the automorphism z -> z^-1 = -z^3;
/// its fixed subfield is Q(sqrt2), the real-scalar domain used throughout.
/// All values are immutable after construction.
class FieldElement {
public:
    FieldElement() : c_{Rational(0), Rational(0), Rational(0), Rational(0)} {}

    FieldElement(Rational c0) : FieldElement() { c_[0] = std::move(c0); } // NOLINT: Q embeds in Q(z)

    FieldElement(Rational c0, Rational c1, Rational c2, Rational c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static FieldElement zero() { return FieldElement(); }
    static FieldElement one() { return FieldElement(rat(1)); }
    static FieldElement from(long n, long d = 1) { return FieldElement(rat(n, d)); }

    /// z, the chosen primitive 8th root of unity, equal to (1+i)/sqrt2.
    static FieldElement zeta() { return FieldElement(rat(0), rat(1), rat(0), rat(0)); }
    /// i = z^2.
    static FieldElement i() { return FieldElement(rat(0), rat(0), rat(1), rat(0)); }
    /// sqrt2 = z - z^3.
    static FieldElement sqrt2() { return FieldElement(rat(0), rat(1), rat(0), rat(-1)); }

    const Rational& coeff(int k) const { return c_[static_cast<size_t>(k)]; }

    bool is_zero() const {
        return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
    }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    /// Fixed by conjugation, i.e. lies in Q(sqrt2).
    bool is_real() const { return c_[2] == 0 && c_[1] == -c_[3]; }

    /// The rational value; requires is_rational().
    const Rational& rat_value() const {
        if (!is_rational()) throw not_real("element is not rational");
        return c_[0];
    }

    /// For real elements a = r + s*sqrt2: r.
    const Rational& real_rat_part() const {
        require_real();
        return c_[0];
    }
    /// For real elements a = r + s*sqrt2: s.
    const Rational& sqrt2_part() const {
        require_real();
        return c_[1];
    }

    FieldElement operator-() const {
        return FieldElement(-c_[0], -c_[1], -c_[2], -c_[3]);
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        return FieldElement(a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2],
                            a.c_[3] + b.c_[3]);
    }

    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        return FieldElement(a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2],
                            a.c_[3] - b.c_[3]);
    }

    /// Product, reduced modulo z^4 = -1.
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        std::array<Rational, 4> r{Rational(0), Rational(0), Rational(0), Rational(0)};
        for (int p = 0; p < 4; ++p) {
            if (a.c_[static_cast<size_t>(p)] == 0) continue;
            for (int q = 0; q < 4; ++q) {
                if (b.c_[static_cast<size_t>(q)] == 0) continue;
                Rational t = a.c_[static_cast<size_t>(p)] * b.c_[static_cast<size_t>(q)];
                const int k = p + q;
                if (k < 4)
                    r[static_cast<size_t>(k)] += t;
                else
                    r[static_cast<size_t>(k - 4)] -= t;
            }
        }
        return FieldElement(std::move(r[0]), std::move(r[1]), std::move(r[2]),
                            std::move(r[3]));
    }

    friend FieldElement operator*(const Rational& s, const FieldElement& a) {
        return FieldElement(s * a.c_[0], s * a.c_[1], s * a.c_[2], s * a.c_[3]);
    }

    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

    /// Galois automorphism z -> z^k for odd k in {1,3,5,7}.
    FieldElement galois(int k) const {
        switch (k & 7) {
            case 1: return *this;
            case 3: return FieldElement(c_[0], c_[3], -c_[2], c_[1]);
            case 5: return FieldElement(c_[0], -c_[1], c_[2], -c_[3]);
            case 7: return FieldElement(c_[0], -c_[3], -c_[2], -c_[1]);
            default: throw error("no such automorphism");
        }
    }

    /// Complex conjugation z -> z^-1; involutive, fixes exactly Q(sqrt2).
    FieldElement conj() const { return galois(7); }

    /// Multiplicative inverse via the Galois norm down to Q.
    FieldElement inverse() const {
        if (is_zero()) throw division_by_zero();
        FieldElement rest = galois(3) * galois(5) * galois(7);
        FieldElement norm = *this * rest;
        // The norm is Galois-invariant, hence rational.
        const Rational& n = norm.rat_value();
        if (n == 0) throw division_by_zero();
        Rational inv_n = Rational(1) / n;
        return inv_n * rest;
    }

    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        return a * b.inverse();
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2] &&
               a.c_[3] == b.c_[3];
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) {
        return !(a == b);
    }

    /// Real part with respect to i: (a + conj(a))/2, an element of Q(sqrt2).
    FieldElement re() const { return rat(1, 2) * (*this + conj()); }
    /// Imaginary part with respect to i: (a - conj(a))/(2i), in Q(sqrt2).
    FieldElement im() const {
        FieldElement d = *this - conj();
        // (2i)^-1 = -i/2
        return rat(-1, 2) * (i() * d);
    }

    /// Exact sign of a real element under the embedding sqrt2 -> 1.4142...
    Sign real_sign() const {
        require_real();
        const Rational& r = c_[0];
        const Rational& s = c_[1];
        const int sr = sgn(r), ss = sgn(s);
        if (sr == 0 && ss == 0) return Sign::zero;
        if (ss == 0) return sr > 0 ? Sign::positive : Sign::negative;
        if (sr == 0) return ss > 0 ? Sign::positive : Sign::negative;
        if (sr > 0 && ss > 0) return Sign::positive;
        if (sr < 0 && ss < 0) return Sign::negative;
        // Mixed signs: r + s*sqrt2 has the sign of the dominant term,
        // decided by comparing r^2 against 2 s^2.
        Rational r2 = r * r, s2 = Rational(2) * s * s;
        if (r2 == s2) return Sign::zero;
        const bool rational_dominates = r2 > s2;
        return (rational_dominates ? sr : ss) > 0 ? Sign::positive : Sign::negative;
    }

    /// Key string usable for ordering/deduplication; equal keys iff equal
    /// elements (coefficients are canonical rationals).
    std::string key() const {
        std::string s;
        for (int k = 0; k < 4; ++k) {
            s += c_[static_cast<size_t>(k)].get_str();
            s += (k < 3) ? ',' : ';';
        }
        return s;
    }

    /// Short display form x + y*i with x, y in Q(sqrt2); "r2" denotes sqrt2.
    std::string str() const {
        FieldElement x = re(), y = im();
        std::string sx = real_str(x);
        if (y.is_zero()) return sx;
        std::string sy = real_str(y);
        std::string t;
        if (!(x.is_zero())) t = sx;
        if (sy == "1")
            t += t.empty() ? "i" : "+i";
        else if (sy == "-1")
            t += "-i";
        else if (!sy.empty() && sy[0] == '-')
            t += sy + "*i";
        else
            t += (t.empty() ? "" : "+") + sy + "*i";
        return t;
    }

private:
    void require_real() const {
        if (!is_real()) throw not_real("element is not conjugation-fixed");
    }

    static int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

    static std::string real_str(const FieldElement& a) {
        const Rational& r = a.c_[0];
        const Rational& s = a.c_[1];
        if (s == 0) return rat_str(r);
        std::string t;
        if (r != 0) t = rat_str(r);
        if (s == 1)
            t += t.empty() ? "r2" : "+r2";
        else if (s == -1)
            t += "-r2";
        else if (s < 0)
            t += rat_str(s) + "*r2";
        else
            t += (t.empty() ? "" : "+") + rat_str(s) + "*r2";
        return t;
    }

    std::array<Rational, 4> c_;
};

/// Nonnegative square root of a nonnegative real element, when it exists in
/// Q(sqrt2).  A return of nullopt with real_sign(a) = positive means only
/// that the root lies outside the field.
inline std::optional<FieldElement> real_sqrt(const FieldElement& a) {
    if (a.is_zero()) return FieldElement::zero();
    if (a.real_sign() == Sign::negative) return std::nullopt;
    const Rational& r0 = a.real_rat_part();
    const Rational& r1 = a.sqrt2_part();
    auto check = [&](const FieldElement& cand) -> std::optional<FieldElement> {
        if (cand * cand == a)
            return cand.real_sign() == Sign::negative ? -cand : cand;
        return std::nullopt;
    };
    if (r1 == 0) {
        if (auto u = rat_sqrt(r0)) return check(FieldElement(*u));
        if (auto v = rat_sqrt(r0 / 2)) return check(*v * FieldElement::sqrt2());
        return std::nullopt;
    }
    // (u + v*sqrt2)^2 = u^2 + 2v^2 + 2uv*sqrt2 with u, v nonzero:
    // u^2 solves t^2 - r0 t + r1^2/2 = 0.
    Rational disc = r0 * r0 - Rational(2) * r1 * r1;
    auto d = rat_sqrt(disc);
    if (!d) return std::nullopt;
    for (int sign = 0; sign < 2; ++sign) {
        Rational t = (r0 + (sign == 0 ? *d : -*d)) / 2;
        auto u = rat_sqrt(t);
        if (!u || *u == 0) continue;
        Rational v = r1 / (Rational(2) * *u);
        FieldElement cand = FieldElement(*u) + v * FieldElement::sqrt2();
        if (auto ok = check(cand)) return ok;
    }
    return std::nullopt;
}

} // namespace su21
