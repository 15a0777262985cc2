#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "linsolve.hpp"
#include "matrix.hpp"

namespace su21 {

// ---------------------------------------------------------------------------
// Fixed bases
// ---------------------------------------------------------------------------

/// Traceless 3x3 matrices; tracelessness is validated where spans are built.
using AlgElement = Mat3;

/// The eight-element basis a_1..a_8 of su(2,1) (index 0-based).
inline const std::array<Mat3, 8>& a_basis() {
    static const std::array<Mat3, 8> b = [] {
        const FieldElement i = FieldElement::i();
        std::array<Mat3, 8> r;
        r[0] = Mat3::diag(i, -i, FieldElement::zero());
        r[1] = Mat3::diag(FieldElement::zero(), i, -i);
        r[2] = Mat3::unit(1, 2) - Mat3::unit(2, 1);
        r[3] = i * (Mat3::unit(1, 2) + Mat3::unit(2, 1));
        r[4] = Mat3::unit(1, 3) + Mat3::unit(3, 1);
        r[5] = i * (Mat3::unit(1, 3) - Mat3::unit(3, 1));
        r[6] = Mat3::unit(2, 3) + Mat3::unit(3, 2);
        r[7] = i * (Mat3::unit(2, 3) - Mat3::unit(3, 2));
        return r;
    }();
    return b;
}

/// Chevalley-basis index order used for complex coordinates.
enum Chev { cHa = 0, cHb, cXa, cXb, cXab, cYa, cYb, cYab };

/// The Chevalley basis {H_a, H_b, X_a, X_b, X_ab, Y_a, Y_b, Y_ab} of sl3,
/// with the sign conventions X_ab = -E13 and Y_ab = -E31.
inline const std::array<Mat3, 8>& chevalley_basis() {
    static const std::array<Mat3, 8> b = [] {
        const FieldElement o = FieldElement::one();
        std::array<Mat3, 8> r;
        r[cHa] = Mat3::diag(o, -o, FieldElement::zero());
        r[cHb] = Mat3::diag(FieldElement::zero(), o, -o);
        r[cXa] = Mat3::unit(1, 2);
        r[cXb] = Mat3::unit(2, 3);
        r[cXab] = -Mat3::unit(1, 3);
        r[cYa] = Mat3::unit(2, 1);
        r[cYb] = Mat3::unit(3, 2);
        r[cYab] = -Mat3::unit(3, 1);
        return r;
    }();
    return b;
}

inline Mat3 a_combo(std::initializer_list<std::pair<int, FieldElement>> terms) {
    Mat3 m;
    for (const auto& [k, c] : terms) m = m + c * a_basis()[static_cast<size_t>(k - 1)];
    return m;
}

// ---------------------------------------------------------------------------
// Conjugations
// ---------------------------------------------------------------------------

inline Mat3 bracket(const Mat3& x, const Mat3& y) { return x * y - y * x; }

/// Algebra conjugation x -> -N conj(x)^t N^-1; anti-linear involution with
/// fixed-point set su(2,1).
inline Mat3 tau_alg(const Mat3& x) {
    const Mat3 n = Mat3::form_n();
    return -(n * x.dagger() * n);
}

/// Group conjugation g -> N conj(g)^-t N^-1; involutive automorphism with
/// fixed-point group SU(2,1).
inline Mat3 tau_grp(const Mat3& g) {
    const Mat3 n = Mat3::form_n();
    return n * g.dagger().inverse() * n;
}

inline bool in_su21_algebra(const Mat3& x) {
    return x.is_traceless() && tau_alg(x) == x;
}

inline bool in_su21_group(const Mat3& g) {
    if (g.det() != FieldElement::one()) return false;
    const Mat3 n = Mat3::form_n();
    return g.dagger() * n * g == n;
}

// ---------------------------------------------------------------------------
// Coordinates
// ---------------------------------------------------------------------------

/// Coordinates of a traceless matrix in the a-basis (a complex basis of sl3).
inline std::array<FieldElement, 8> a_coords(const Mat3& x) {
    const FieldElement i = FieldElement::i();
    const FieldElement half = FieldElement(rat(1, 2));
    const FieldElement half_over_i = half * i.inverse(); // = -i/2
    std::array<FieldElement, 8> z;
    z[0] = -(i * x.at(0, 0));                                 // x11 = i z1
    z[1] = i * x.at(2, 2);                                    // x33 = -i z2
    z[2] = half * (x.at(0, 1) - x.at(1, 0));
    z[3] = half_over_i * (x.at(0, 1) + x.at(1, 0));
    z[4] = half * (x.at(0, 2) + x.at(2, 0));
    z[5] = half_over_i * (x.at(0, 2) - x.at(2, 0));
    z[6] = half * (x.at(1, 2) + x.at(2, 1));
    z[7] = half_over_i * (x.at(1, 2) - x.at(2, 1));
    return z;
}

inline std::array<FieldElement, 8> chevalley_coords(const Mat3& x) {
    std::array<FieldElement, 8> z;
    z[cHa] = x.at(0, 0);
    z[cHb] = -x.at(2, 2);
    z[cXa] = x.at(0, 1);
    z[cXb] = x.at(1, 2);
    z[cXab] = -x.at(0, 2);
    z[cYa] = x.at(1, 0);
    z[cYb] = x.at(2, 1);
    z[cYab] = -x.at(2, 0);
    return z;
}

/// Split each complex a-coordinate into its conjugation-fixed part and its
/// i-part, giving 16 coordinates over Q(sqrt2).  Real spans of complex
/// matrices are canonicalized in these coordinates.
inline Vec realified_a_coords(const Mat3& x) {
    auto z = a_coords(x);
    Vec v;
    v.reserve(16);
    for (const auto& c : z) {
        v.push_back(c.re());
        v.push_back(c.im());
    }
    return v;
}

inline Vec complex_coords(const Mat3& x) {
    auto z = chevalley_coords(x);
    return Vec(z.begin(), z.end());
}

// ---------------------------------------------------------------------------
// Subalgebra spans
// ---------------------------------------------------------------------------

enum class Scalars { real, complex };

/// A finite spanning set of traceless matrices together with its scalar
/// domain and the canonical reduced form of the span.  Real spans are
/// reduced in realified a-coordinates over Q(sqrt2); complex spans in
/// Chevalley coordinates over the full field.
struct Subalgebra {
    std::vector<Mat3> basis;        // as given (possibly dependent)
    Scalars domain = Scalars::real;
    std::string label;
    std::map<std::string, FieldElement> params;

    std::vector<Vec> canon; // rref rows
    int dim = 0;

    Vec coords_of(const Mat3& x) const {
        return domain == Scalars::real ? realified_a_coords(x) : complex_coords(x);
    }
};

inline Subalgebra make_subalgebra(std::vector<Mat3> basis, Scalars domain,
                                  std::string label = "",
                                  std::map<std::string, FieldElement> params = {}) {
    Subalgebra u;
    u.basis = std::move(basis);
    u.domain = domain;
    u.label = std::move(label);
    u.params = std::move(params);
    for (const Mat3& m : u.basis)
        if (!m.is_traceless()) throw error("span vector is not traceless: " + u.label);
    std::vector<Vec> rows;
    rows.reserve(u.basis.size());
    for (const Mat3& m : u.basis) rows.push_back(u.coords_of(m));
    u.dim = rref(rows);
    u.canon = std::move(rows);
    return u;
}

inline Subalgebra conjugate_subalgebra(const Mat3& g, const Subalgebra& u) {
    Mat3 gi = g.inverse();
    std::vector<Mat3> mapped;
    mapped.reserve(u.basis.size());
    for (const Mat3& x : u.basis) mapped.push_back(g * x * gi);
    return make_subalgebra(std::move(mapped), u.domain, u.label, u.params);
}

inline bool span_equal(const Subalgebra& u, const Subalgebra& v) {
    if (u.domain != v.domain) throw domain_mismatch();
    return u.canon == v.canon;
}

inline bool in_span(const Subalgebra& u, const Mat3& x) {
    return in_rowspace(u.canon, u.coords_of(x));
}

/// Closure under the bracket over the declared scalars; the second component
/// lists offending basis index pairs.
inline std::pair<bool, std::vector<std::pair<int, int>>> is_closed(const Subalgebra& u) {
    std::vector<std::pair<int, int>> bad;
    const int k = static_cast<int>(u.basis.size());
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (!in_span(u, bracket(u.basis[static_cast<size_t>(a)],
                                    u.basis[static_cast<size_t>(b)])))
                bad.emplace_back(a, b);
    return {bad.empty(), bad};
}

/// Whether the conjugation maps the span onto itself.
inline bool is_real_span(const Subalgebra& u) {
    for (const Mat3& x : u.basis)
        if (!in_span(u, tau_alg(x))) return false;
    return true;
}

/// Real form of a conjugation-stable complex span: real span of
/// {x + tau(x), i(x - tau(x))} over the given basis.
inline Subalgebra real_form_basis(const Subalgebra& u, std::string label = "") {
    if (u.domain != Scalars::complex) throw domain_mismatch();
    std::vector<Mat3> gens;
    const FieldElement i = FieldElement::i();
    for (const Mat3& x : u.basis) {
        Mat3 t = tau_alg(x);
        gens.push_back(x + t);
        gens.push_back(i * (x - t));
    }
    return make_subalgebra(std::move(gens), Scalars::real,
                           label.empty() ? u.label : std::move(label), u.params);
}

inline Subalgebra complexify(const Subalgebra& u, std::string label = "") {
    return make_subalgebra(u.basis, Scalars::complex,
                           label.empty() ? u.label : std::move(label), u.params);
}

/// Pick a maximal independent subset of the given elements over the domain.
inline std::vector<Mat3> independent_subset(const std::vector<Mat3>& xs, Scalars domain) {
    std::vector<Mat3> picked;
    std::vector<Vec> rows;
    int rank = 0;
    for (const Mat3& x : xs) {
        Vec v = domain == Scalars::real ? realified_a_coords(x) : complex_coords(x);
        std::vector<Vec> trial = rows;
        trial.push_back(v);
        int r = rref(trial);
        if (r > rank) {
            rank = r;
            rows = std::move(trial);
            picked.push_back(x);
        }
    }
    return picked;
}

} // namespace su21
