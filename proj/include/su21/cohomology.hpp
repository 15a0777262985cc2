#pragma once

#include <functional>
#include <string>
#include <vector>

#include "liealg.hpp"

namespace su21 {

// ---------------------------------------------------------------------------
// Cocycles and coboundaries in SL3 under the group conjugation
// ---------------------------------------------------------------------------

/// g is a cocycle when g tau(g) = 1.  Requires det(g) = 1.
inline bool is_cocycle(const Mat3& g) {
    if (g.det() != FieldElement::one()) throw not_in_sl3();
    return g * tau_grp(g) == Mat3::identity();
}

/// Whether g^-1 tau(g) = c, i.e. g trivializes the cocycle c.
inline bool check_coboundary(const Mat3& g, const Mat3& c) {
    return g.inverse() * tau_grp(g) == c;
}

// ---------------------------------------------------------------------------
// Torus cohomology (1- and 2-parameter cases)
// ---------------------------------------------------------------------------

/// How the conjugation acts on the parameters of a torus chi(t) resp.
/// chi(s, t); each action is an involution on the parameter tuple.
enum class TorusKind {
    fix,               // sigma chi(t) = chi(conj t)
    inv,               // sigma chi(t) = chi(conj(t)^-1)
    swap_inv,          // sigma chi(s,t) = chi(conj(t)^-1, conj(s)^-1)
    componentwise,     // sigma chi(s,t) = chi(conj s, conj t)
    componentwise_inv, // sigma chi(s,t) = chi(conj(s)^-1, conj(t)^-1)
};

enum class H1Class { trivial, nontrivial };

/// Cohomology class of the cocycle chi(z) in a torus with the given action.
/// One-parameter tuples for fix/inv, two-parameter tuples otherwise.
inline H1Class torus_class(const std::vector<FieldElement>& z, TorusKind kind) {
    auto need = [&](size_t n) {
        if (z.size() != n) throw error("parameter tuple has wrong arity");
        for (const auto& c : z)
            if (c.is_zero()) throw not_a_cocycle("zero torus parameter");
    };
    switch (kind) {
        case TorusKind::fix: {
            need(1);
            if (!((z[0] * z[0].conj()) == FieldElement::one()))
                throw not_a_cocycle("need z conj(z) = 1");
            return H1Class::trivial;
        }
        case TorusKind::inv: {
            need(1);
            if (!z[0].is_real()) throw not_a_cocycle("need z real");
            // z = h conj(h) forces z positive; negative z is the second class.
            return z[0].real_sign() == Sign::positive ? H1Class::trivial
                                                      : H1Class::nontrivial;
        }
        case TorusKind::swap_inv: {
            need(2);
            if (!(z[0] == z[1].conj())) throw not_a_cocycle("need s = conj(t)");
            return H1Class::trivial;
        }
        case TorusKind::componentwise: {
            need(2);
            if (!((z[0] * z[0].conj()) == FieldElement::one()) ||
                !((z[1] * z[1].conj()) == FieldElement::one()))
                throw not_a_cocycle("need unit-modulus parameters");
            return H1Class::trivial;
        }
        case TorusKind::componentwise_inv: {
            need(2);
            if (!z[0].is_real() || !z[1].is_real())
                throw not_a_cocycle("need real parameters");
            return H1Class::trivial;
        }
    }
    throw error("unreachable");
}

// ---------------------------------------------------------------------------
// The two-element cohomology of SL3
// ---------------------------------------------------------------------------

/// Class of a cocycle c in SL3 under the group conjugation.  The cocycle
/// condition makes cN Hermitian of determinant -1; its signature, (2,1) or
/// (0,3), is a complete congruence invariant under SL3, so it decides the
/// class.  Validated against every catalogued coboundary and against
/// diag(-1,-1,1).
inline H1Class sl3_class(const Mat3& c) {
    if (!is_cocycle(c)) throw not_a_cocycle("sl3_class needs a cocycle");
    Mat3 m = c * Mat3::form_n();
    std::vector<Vec> gram(3, Vec(3, FieldElement::zero()));
    for (int r = 0; r < 3; ++r)
        for (int k = 0; k < 3; ++k) gram[static_cast<size_t>(r)][static_cast<size_t>(k)] = m.at(r, k);
    Signature s = signature_of(gram);
    if (s.p == 2 && s.n == 1) return H1Class::trivial;
    if (s.p == 0 && s.n == 3) return H1Class::nontrivial;
    throw error("Hermitian form of a cocycle must have signature (2,1) or (0,3)");
}

// ---------------------------------------------------------------------------
// Parametrized stabilizer families
// ---------------------------------------------------------------------------

/// A stabilizer-torus parametrization S(p): multiplicative in p, with a
/// claimed rule for how the conjugation permutes/inverts the parameters.
struct TorusFamily {
    std::string name;
    int arity = 1;
    TorusKind kind = TorusKind::fix;
    std::function<Mat3(const std::vector<FieldElement>&)> make;
    std::function<std::vector<FieldElement>(const std::vector<FieldElement>&)> tau_param;
};

/// Exact check tau(S(p)) = S(claimed(p)) at every sample tuple.
inline bool check_family_tau_action(const TorusFamily& fam,
                                    const std::vector<std::vector<FieldElement>>& samples) {
    for (const auto& p : samples) {
        if (static_cast<int>(p.size()) != fam.arity) throw error("bad sample arity");
        for (const auto& c : p)
            if (c.is_zero()) throw singular_sample();
        if (!(tau_grp(fam.make(p)) == fam.make(fam.tau_param(p)))) return false;
    }
    return true;
}

/// Membership in the stabilizer of a span: g . u = u.
inline bool check_stabilizer_membership(const Mat3& g, const Subalgebra& u) {
    return span_equal(conjugate_subalgebra(g, u), u);
}

} // namespace su21
