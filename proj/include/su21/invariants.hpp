#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liealg.hpp"

namespace su21 {

enum class StructureClass {
    abelian,
    nilpotent,
    solvable,
    semisimple,
    levi_decomposable,
    other,
};

inline std::string to_string(StructureClass c) {
    switch (c) {
        case StructureClass::abelian: return "abelian";
        case StructureClass::nilpotent: return "nilpotent";
        case StructureClass::solvable: return "solvable";
        case StructureClass::semisimple: return "semisimple";
        case StructureClass::levi_decomposable: return "levi_decomposable";
        case StructureClass::other: return "other";
    }
    return "?";
}

/// Conjugation-invariant data of a closed real subalgebra.  killing is the
/// intrinsic trace form of ad on the subalgebra (an isomorphism invariant);
/// ambient is the restriction of the trace form of the ambient algebra (a
/// conjugation invariant that also separates the two Cartan subalgebras,
/// which are isomorphic as abstract algebras).
struct Fingerprint {
    int dim = 0;
    std::vector<int> derived_dims;
    std::vector<int> lower_central_dims;
    int center_dim = 0;
    Signature killing;
    Signature ambient;
    StructureClass cls = StructureClass::other;

    friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
        return a.dim == b.dim && a.derived_dims == b.derived_dims &&
               a.lower_central_dims == b.lower_central_dims &&
               a.center_dim == b.center_dim && a.killing == b.killing &&
               a.ambient == b.ambient && a.cls == b.cls;
    }
    friend bool operator!=(const Fingerprint& a, const Fingerprint& b) {
        return !(a == b);
    }

    std::string str() const {
        std::string s = "dim=" + std::to_string(dim) + " derived=[";
        for (size_t k = 0; k < derived_dims.size(); ++k)
            s += (k ? "," : "") + std::to_string(derived_dims[k]);
        s += "] lcs=[";
        for (size_t k = 0; k < lower_central_dims.size(); ++k)
            s += (k ? "," : "") + std::to_string(lower_central_dims[k]);
        s += "] center=" + std::to_string(center_dim) + " killing=" + killing.str() +
             " ambient=" + ambient.str() + " class=" + to_string(cls);
        return s;
    }
};

namespace detail {

/// Independent basis of the span of all brackets [x, y], x in xs, y in ys.
inline std::vector<Mat3> bracket_span(const std::vector<Mat3>& xs,
                                      const std::vector<Mat3>& ys, Scalars domain) {
    std::vector<Mat3> prods;
    for (const auto& x : xs)
        for (const auto& y : ys) {
            Mat3 b = bracket(x, y);
            if (!b.is_zero()) prods.push_back(b);
        }
    return independent_subset(prods, domain);
}

} // namespace detail

/// Compute the invariant fingerprint of a closed subalgebra over the real
/// scalars.  Throws not_closed when a bracket of basis vectors leaves the
/// span.
inline Fingerprint fingerprint(const Subalgebra& u) {
    if (u.domain != Scalars::real) throw domain_mismatch();
    if (!is_closed(u).first) throw not_closed("subalgebra is not bracket-closed: " + u.label);

    std::vector<Mat3> basis = independent_subset(u.basis, Scalars::real);
    const size_t d = basis.size();

    Fingerprint fp;
    fp.dim = static_cast<int>(d);

    // Derived series.
    fp.derived_dims.push_back(fp.dim);
    {
        std::vector<Mat3> cur = basis;
        while (!cur.empty()) {
            cur = detail::bracket_span(cur, cur, Scalars::real);
            int dim = static_cast<int>(cur.size());
            fp.derived_dims.push_back(dim);
            if (dim == fp.derived_dims[fp.derived_dims.size() - 2]) break;
        }
    }
    // Lower central series.
    fp.lower_central_dims.push_back(fp.dim);
    {
        std::vector<Mat3> cur = basis;
        while (!cur.empty()) {
            cur = detail::bracket_span(basis, cur, Scalars::real);
            int dim = static_cast<int>(cur.size());
            fp.lower_central_dims.push_back(dim);
            if (dim == fp.lower_central_dims[fp.lower_central_dims.size() - 2]) break;
        }
    }

    // Center: kernel of c -> ([sum_k c_k b_k, b_j])_j over the real scalars.
    {
        std::vector<Vec> cols; // one coordinate column per unknown c_k
        for (size_t k = 0; k < d; ++k) {
            Vec col;
            for (size_t j = 0; j < d; ++j) {
                Vec w = realified_a_coords(bracket(basis[k], basis[j]));
                col.insert(col.end(), w.begin(), w.end());
            }
            cols.push_back(std::move(col));
        }
        int rank = rref(cols);
        fp.center_dim = fp.dim - rank;
    }

    // Structure constants of the basis, needed for the intrinsic trace form
    // of ad.
    std::vector<Vec> basis_coords;
    for (const auto& b : basis) basis_coords.push_back(realified_a_coords(b));
    std::vector<std::vector<Vec>> gamma(d, std::vector<Vec>(d)); // gamma[i][j][k]
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            auto c = solve_coords(basis_coords, realified_a_coords(bracket(basis[i], basis[j])));
            if (!c) throw not_closed("bracket left the span: " + u.label);
            gamma[i][j] = std::move(*c);
        }

    // killing[i][j] = tr(ad b_i ad b_j) = sum_{k,l} gamma[i][l][k] gamma[j][k][l].
    std::vector<Vec> killing(d, Vec(d, FieldElement::zero()));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i; j < d; ++j) {
            FieldElement s;
            for (size_t k = 0; k < d; ++k)
                for (size_t l = 0; l < d; ++l) s += gamma[i][l][k] * gamma[j][k][l];
            killing[i][j] = s;
            killing[j][i] = s;
        }
    fp.killing = signature_of(killing);

    // Restriction of the ambient trace form: tr(b_i b_j), real on su(2,1).
    std::vector<Vec> amb(d, Vec(d, FieldElement::zero()));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i; j < d; ++j) {
            FieldElement s = (basis[i] * basis[j]).trace();
            amb[i][j] = s;
            amb[j][i] = s;
        }
    fp.ambient = signature_of(amb);

    const bool solvable = fp.derived_dims.back() == 0;
    const bool nilpotent = fp.lower_central_dims.back() == 0;
    if (solvable) {
        if (d == 0 || fp.derived_dims[1] == 0)
            fp.cls = StructureClass::abelian;
        else
            fp.cls = nilpotent ? StructureClass::nilpotent : StructureClass::solvable;
    } else if (fp.killing.z == 0) {
        fp.cls = StructureClass::semisimple; // Cartan's criterion
    } else {
        fp.cls = StructureClass::levi_decomposable;
    }
    return fp;
}

// ---------------------------------------------------------------------------
// Eigenvalue-scaling comparison of one-dimensional spans
// ---------------------------------------------------------------------------

/// Result of matching charpoly(y)(t) = c^3 charpoly(x)(t/c) over real c != 0.
/// kind == all means every c works (both charpolys are t^3); inconclusive
/// means a real solution may exist outside Q(sqrt2), so emptiness must not
/// be used as a non-conjugacy certificate.
struct MatchSet {
    enum class Kind { empty, values, all, inconclusive };
    Kind kind = Kind::empty;
    std::vector<FieldElement> values;

    bool certifies_distinct() const { return kind == Kind::empty; }
    bool contains(const FieldElement& c) const {
        if (kind == Kind::all) return true;
        for (const auto& v : values)
            if (v == c) return true;
        return false;
    }
};

/// The set of real scalars c for which the eigenvalue multiset of y is c
/// times that of x, decided by exact comparison of characteristic
/// coefficients (p2 vanishes for traceless matrices).
inline MatchSet eigenvalue_scaling_match(const Mat3& x, const Mat3& y) {
    auto px = x.charpoly(), py = y.charpoly();
    const FieldElement &p1x = px[1], &p0x = px[2];
    const FieldElement &p1y = py[1], &p0y = py[2];
    MatchSet out;
    if (!px[0].is_zero() || !py[0].is_zero()) {
        // Non-traceless input: fall back to requiring the p2 ratio as well.
        if (px[0].is_zero() || py[0].is_zero()) return out;
    }

    auto verify = [&](const FieldElement& c) {
        if (c.is_zero() || !c.is_real()) return false;
        return p1y == c * c * p1x && p0y == c * c * c * p0x &&
               (px[0].is_zero() ? py[0].is_zero() : py[0] == c * px[0]);
    };
    auto push = [&](const FieldElement& c) {
        if (verify(c)) {
            out.kind = MatchSet::Kind::values;
            out.values.push_back(c);
        }
    };

    if (p1x.is_zero() && p0x.is_zero()) {
        if (!p1y.is_zero() || !p0y.is_zero()) return out;
        if (!px[0].is_zero()) { // non-traceless input: the trace pins c
            push(py[0] / px[0]);
            return out;
        }
        if (py[0].is_zero()) out.kind = MatchSet::Kind::all;
        return out;
    }
    if (!p1x.is_zero() && !p0x.is_zero()) {
        if (p1y.is_zero() || p0y.is_zero()) return out;
        push((p0y * p1x) / (p0x * p1y));
        return out;
    }
    if (!p1x.is_zero()) { // p0x = 0: need p0y = 0 and c^2 = p1y/p1x
        if (!p0y.is_zero() || p1y.is_zero()) return out;
        FieldElement r = p1y / p1x;
        if (!r.is_real() || r.real_sign() != Sign::positive) return out;
        if (auto s = real_sqrt(r)) {
            push(*s);
            push(-*s);
        } else {
            out.kind = MatchSet::Kind::inconclusive;
        }
        return out;
    }
    // p1x = 0, p0x != 0: need p1y = 0 and c^3 = p0y/p0x.
    if (!p1y.is_zero() || p0y.is_zero()) return out;
    FieldElement r = p0y / p0x;
    if (!r.is_real()) return out;
    if (r.sqrt2_part() == 0) {
        if (auto c = rat_cbrt(r.real_rat_part())) {
            push(FieldElement(*c));
            return out;
        }
    }
    out.kind = MatchSet::Kind::inconclusive;
    return out;
}

// ---------------------------------------------------------------------------
// Catalogue-specific eigenvalue claims
// ---------------------------------------------------------------------------

/// Second generator of the two-dimensional family u_2_6 at a real parameter.
inline Mat3 u26_second_generator(const FieldElement& lambda) {
    FieldElement two_l = rat(2) * lambda;
    return a_combo({{1, two_l},
                    {2, rat(2) * two_l},
                    {4, rat(3) * two_l},
                    {5, -FieldElement::sqrt2()},
                    {7, FieldElement::sqrt2()}});
}

/// Claimed diagonalization of u26_second_generator(lambda):
/// {-2i(i+2l), 2i(i-2l), 8il}.
inline std::vector<FieldElement> u26_claimed_eigenvalues(const FieldElement& lambda) {
    const FieldElement i = FieldElement::i();
    FieldElement two_i = rat(2) * i, two_l = rat(2) * lambda;
    return {-(two_i * (i + two_l)), two_i * (i - two_l), rat(8) * (i * lambda)};
}

/// Whether the claimed eigenvalues are exactly the roots of the second
/// generator's characteristic polynomial: each claimed root annihilates the
/// polynomial and the symmetric functions match.
inline bool jordan_claim_check(const FieldElement& lambda) {
    if (!lambda.is_real()) throw not_real("parameter must be real");
    Mat3 y = u26_second_generator(lambda);
    auto ev = u26_claimed_eigenvalues(lambda);
    for (const auto& r : ev)
        if (!y.charpoly_at(r).is_zero()) return false;
    auto p = y.charpoly();
    FieldElement e1 = ev[0] + ev[1] + ev[2];
    FieldElement e2 = ev[0] * ev[1] + ev[0] * ev[2] + ev[1] * ev[2];
    FieldElement e3 = ev[0] * ev[1] * ev[2];
    return p[0] == -e1 && p[1] == e2 && p[2] == -e3;
}

/// Necessary condition for u_2_6 at lambda to be equivalent to u_2_6 at eta:
/// some real beta != 0 rescales one claimed spectrum onto the other.
/// Returns nullopt when the scaling equations cannot be decided inside the
/// field.
inline std::optional<bool> u26_scaling_possible(const FieldElement& lambda,
                                                const FieldElement& eta) {
    MatchSet m = eigenvalue_scaling_match(u26_second_generator(eta),
                                          u26_second_generator(lambda));
    if (m.kind == MatchSet::Kind::inconclusive) return std::nullopt;
    return m.kind != MatchSet::Kind::empty;
}

} // namespace su21
