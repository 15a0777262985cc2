#pragma once

#include <vector>

#include "cohomology.hpp"

namespace su21::wit {

// Constant matrices used as transporters, cocycles and coboundary solutions
// across the catalogue.  Shorthands: o = 1, i = sqrt(-1), r2 = sqrt(2),
// h = 1/2, hr2 = sqrt(2)/2.

namespace detail {
inline FieldElement o() { return FieldElement::one(); }
inline FieldElement z() { return FieldElement::zero(); }
inline FieldElement fi() { return FieldElement::i(); }
inline FieldElement r2() { return FieldElement::sqrt2(); }
inline FieldElement h() { return FieldElement(rat(1, 2)); }
inline FieldElement hr2() { return h() * r2(); }
} // namespace detail

/// Rotation by 90 degrees in the 1-2 plane; transports the line of X_a onto
/// its conjugate image.  Lies in SU(2,1).
inline const Mat3& rot12() {
    using namespace detail;
    static const Mat3 m{z(), o(), z(), -o(), z(), z(), z(), z(), o()};
    return m;
}

/// -(swap of coordinates 1,2) extended by -1; the cocycle trivialized by
/// mix12() and the transporter for the X_a + H_a + 2H_b line.
inline const Mat3& negswap12() {
    using namespace detail;
    static const Mat3 m{z(), -o(), z(), -o(), z(), z(), z(), z(), -o()};
    return m;
}

/// Real orthogonal matrix mixing all three coordinates; solves
/// g^-1 tau(g) = negswap12().
inline const Mat3& mix12() {
    using namespace detail;
    static const Mat3 m{-h(),  h(),  hr2(),
                        -h(),  h(),  -hr2(),
                        -hr2(), -hr2(), z()};
    return m;
}

/// Signed cycle sending e1 -> -e3, e3 -> e1; a cocycle.  Its inverse
/// transports the X_a + X_b line onto its conjugate image.
inline const Mat3& cyc13() {
    using namespace detail;
    static const Mat3 m{z(), z(), o(), z(), o(), z(), -o(), z(), z()};
    return m;
}

/// Inverse of cyc13(); the transporter used for the upper-triangular cases.
inline const Mat3& cyc13_inv() {
    using namespace detail;
    static const Mat3 m{z(), z(), -o(), z(), o(), z(), o(), z(), z()};
    return m;
}

/// Unitary-like mix of coordinates 1,3 with an i in the centre; solves
/// h^-1 tau(h) = cyc13().
inline const Mat3& mix13() {
    using namespace detail;
    static const Mat3 m{h() * (o() - fi()), z(), h() * (-o() + fi()),
                        z(),                fi(), z(),
                        h() * (o() - fi()), z(), h() * (o() - fi())};
    return m;
}

/// Solves g^-1 tau(g) = diag(-1, 1, -1).
inline const Mat3& col3_rot() {
    using namespace detail;
    static const Mat3 m{z(),  hr2(), hr2(),
                        z(),  hr2(), -hr2(),
                        -o(), z(),   z()};
    return m;
}

/// Solves g^-1 tau(g) = diag(1, -1, -1).
inline const Mat3& col2_rot() {
    using namespace detail;
    static const Mat3 m{hr2(),  z(), -hr2(),
                        -hr2(), z(), -hr2(),
                        z(),    o(), z()};
    return m;
}

/// Swap of coordinates 1,2 extended by -1; an order-2 cocycle in SU(2,1).
/// Appears as a stabilizer component representative and as a transporter.
inline const Mat3& swap12_neg3() {
    using namespace detail;
    static const Mat3 m{z(), o(), z(), o(), z(), z(), z(), z(), -o()};
    return m;
}

/// Real orthogonal mix solving g^-1 tau(g) = swap12_neg3().
inline const Mat3& mix123() {
    using namespace detail;
    static const Mat3 m{-h(),  -h(),  -hr2(),
                        h(),   h(),   -hr2(),
                        hr2(), -hr2(), z()};
    return m;
}

/// Swap of coordinates 2,3 through i; a cocycle.
inline const Mat3& swap23_i() {
    using namespace detail;
    static const Mat3 m{o(), z(), z(), z(), z(), fi(), z(), fi(), z()};
    return m;
}

/// Solves g^-1 tau(g) = swap23_i().
inline const Mat3& mix23() {
    using namespace detail;
    static const Mat3 m{fi(), z(),                 z(),
                        z(),  h() * (o() - fi()),  -h() * (o() + fi()),
                        z(),  -h() * (o() + fi()), h() * (o() - fi())};
    return m;
}

/// 45-degree reflection in the 1-2 plane extended by -1; an element of
/// SU(2,1) conjugating one catalogued one-parameter family onto another.
inline const Mat3& rot45_neg3() {
    using namespace detail;
    static const Mat3 m{hr2(),  -hr2(), z(),
                        -hr2(), -hr2(), z(),
                        z(),    z(),    -o()};
    return m;
}

/// Unitary-like mix of coordinates 1,3; solves h^-1 tau(h) = cyc13_inv().
inline const Mat3& mix13_b() {
    using namespace detail;
    static const Mat3 m{h() * (o() + fi()),  z(),  h() * (o() + fi()),
                        z(),                 -fi(), z(),
                        -h() * (o() + fi()), z(),  h() * (o() + fi())};
    return m;
}

inline Mat3 diag_t(const FieldElement& a, const FieldElement& b) {
    return Mat3::diag(a, b, (a * b).inverse());
}

inline const Mat3& diag_mm1() { // diag(-1,-1,1): the nontrivial class in SL3
    static const Mat3 m = Mat3::diag(-FieldElement::one(), -FieldElement::one(),
                                     FieldElement::one());
    return m;
}

inline const Mat3& diag_m1m() { // diag(-1,1,-1)
    static const Mat3 m = Mat3::diag(-FieldElement::one(), FieldElement::one(),
                                     -FieldElement::one());
    return m;
}

inline const Mat3& diag_1mm() { // diag(1,-1,-1)
    static const Mat3 m = Mat3::diag(FieldElement::one(), -FieldElement::one(),
                                     -FieldElement::one());
    return m;
}

// ---------------------------------------------------------------------------
// Stabilizer-torus parametrizations, named after the catalogued real
// subalgebra whose stabilizer they describe.
// ---------------------------------------------------------------------------

/// Two-parameter family stabilizing the span of u_1_1 (complexified):
/// S(a,b) = mix12 . diag(a, b, (ab)^-1) . mix12^-1.
inline TorusFamily fam_u11() {
    TorusFamily f;
    f.name = "S:u_1_1";
    f.arity = 2;
    f.kind = TorusKind::swap_inv;
    f.make = [](const std::vector<FieldElement>& p) {
        const FieldElement &a = p[0], &b = p[1];
        FieldElement c = (a * b).inverse();
        FieldElement q = rat(1, 4), r2 = FieldElement::sqrt2(), two = rat(2);
        FieldElement d1 = q * (a + b + two * c);
        FieldElement d2 = q * (a + b - two * c);
        FieldElement e = q * (r2 * (a - b));
        FieldElement f33 = rat(1, 2) * (a + b);
        return Mat3{d1, d2, e, d2, d1, e, e, e, f33};
    };
    f.tau_param = [](const std::vector<FieldElement>& p) {
        return std::vector<FieldElement>{p[1].conj().inverse(), p[0].conj().inverse()};
    };
    return f;
}

/// One-parameter family stabilizing the span of u_1_2:
/// S(t) = mix13 . diag(t, 1, t^-1) . mix13^-1.
inline TorusFamily fam_u12() {
    TorusFamily f;
    f.name = "S:u_1_2";
    f.arity = 1;
    f.kind = TorusKind::fix;
    f.make = [](const std::vector<FieldElement>& p) {
        const FieldElement& t = p[0];
        FieldElement ti = t.inverse(), h = rat(1, 2);
        FieldElement d = h * (t + ti), e = h * (t - ti);
        FieldElement o = FieldElement::one(), z = FieldElement::zero();
        return Mat3{d, z, e, z, o, z, e, z, d};
    };
    f.tau_param = [](const std::vector<FieldElement>& p) {
        return std::vector<FieldElement>{p[0].conj()};
    };
    return f;
}

/// One-parameter family stabilizing the span of u_1_3:
/// S(t) = mix12 . diag(t, t, t^-2) . mix12^-1.
inline TorusFamily fam_u13() {
    TorusFamily f;
    f.name = "S:u_1_3";
    f.arity = 1;
    f.kind = TorusKind::inv;
    f.make = [](const std::vector<FieldElement>& p) {
        const FieldElement& t = p[0];
        FieldElement ti2 = (t * t).inverse(), h = rat(1, 2);
        FieldElement d = h * (t + ti2), e = h * (t - ti2);
        FieldElement z = FieldElement::zero();
        return Mat3{d, e, z, e, d, z, z, z, t};
    };
    f.tau_param = [](const std::vector<FieldElement>& p) {
        return std::vector<FieldElement>{p[0].conj().inverse()};
    };
    return f;
}

/// Two-parameter family stabilizing the span of u_1_7: mixes coordinates 1,3.
inline TorusFamily fam_u17() {
    TorusFamily f;
    f.name = "T:u_1_7";
    f.arity = 2;
    f.kind = TorusKind::swap_inv;
    f.make = [](const std::vector<FieldElement>& p) {
        const FieldElement &a = p[0], &c = p[1];
        FieldElement b = (a * c).inverse(), h = rat(1, 2);
        FieldElement d = h * (a + c), e = h * (a - c), z = FieldElement::zero();
        return Mat3{d, z, e, z, b, z, e, z, d};
    };
    f.tau_param = [](const std::vector<FieldElement>& p) {
        return std::vector<FieldElement>{p[1].conj().inverse(), p[0].conj().inverse()};
    };
    return f;
}

/// Two-parameter family stabilizing the span of v_3: mixes coordinates 2,3
/// through i.
inline TorusFamily fam_v3() {
    TorusFamily f;
    f.name = "T:v_3";
    f.arity = 2;
    f.kind = TorusKind::swap_inv;
    f.make = [](const std::vector<FieldElement>& p) {
        const FieldElement &b = p[0], &c = p[1];
        FieldElement a = (b * c).inverse(), h = rat(1, 2), i = FieldElement::i();
        FieldElement d = h * (b + c), e = h * (i * (b - c)), z = FieldElement::zero();
        return Mat3{a, z, z, z, d, e, z, -e, d};
    };
    f.tau_param = [](const std::vector<FieldElement>& p) {
        return std::vector<FieldElement>{p[1].conj().inverse(), p[0].conj().inverse()};
    };
    return f;
}

/// Two-parameter family stabilizing the span of v_4 (and of u_2_6, u_3_3):
/// T(a,b) = mix123 . diag(a, b, (ab)^-1) . mix123^-1.
inline TorusFamily fam_v4() {
    TorusFamily f;
    f.name = "T:v_4";
    f.arity = 2;
    f.kind = TorusKind::swap_inv;
    f.make = [](const std::vector<FieldElement>& p) {
        static const Mat3 g = mix123();
        static const Mat3 gi = mix123().inverse();
        return g * diag_t(p[0], p[1]) * gi;
    };
    f.tau_param = [](const std::vector<FieldElement>& p) {
        return std::vector<FieldElement>{p[1].conj().inverse(), p[0].conj().inverse()};
    };
    return f;
}

/// One-parameter family stabilizing the span of u_2_1:
/// S(a) = mix13_b . diag(a, 1, a^-1) . mix13_b^-1.
inline TorusFamily fam_u21() {
    TorusFamily f;
    f.name = "S:u_2_1";
    f.arity = 1;
    f.kind = TorusKind::fix;
    f.make = [](const std::vector<FieldElement>& p) {
        const FieldElement& a = p[0];
        FieldElement ai = a.inverse(), h = rat(1, 2);
        FieldElement d = h * (a + ai), e = h * (-a + ai);
        FieldElement o = FieldElement::one(), z = FieldElement::zero();
        return Mat3{d, z, e, z, o, z, e, z, d};
    };
    f.tau_param = [](const std::vector<FieldElement>& p) {
        return std::vector<FieldElement>{p[0].conj()};
    };
    return f;
}

/// Two-parameter family stabilizing the span of u_2_2; same matrices as
/// fam_v4 (the conjugator is mix123 in both cases).
inline TorusFamily fam_u22() {
    TorusFamily f = fam_v4();
    f.name = "S:u_2_2";
    return f;
}

/// Two-parameter family stabilizing the spans of u_4_1, u_4_2, u_5_1:
/// S(a,c) = mix13_b . diag(a, (ac)^-1, c) . mix13_b^-1.
inline TorusFamily fam_u41() {
    TorusFamily f;
    f.name = "S:u_4_1";
    f.arity = 2;
    f.kind = TorusKind::swap_inv;
    f.make = [](const std::vector<FieldElement>& p) {
        const FieldElement &a = p[0], &c = p[1];
        FieldElement b = (a * c).inverse(), h = rat(1, 2);
        FieldElement d = h * (a + c), e = h * (-a + c), z = FieldElement::zero();
        return Mat3{d, z, e, z, b, z, e, z, d};
    };
    f.tau_param = [](const std::vector<FieldElement>& p) {
        return std::vector<FieldElement>{p[1].conj().inverse(), p[0].conj().inverse()};
    };
    return f;
}

/// Deterministic generic samples for family checks: one-parameter families
/// use {2, 3, 1+i, sqrt2, 2+i}; two-parameter families pair each value with
/// the cyclically next one.
inline std::vector<std::vector<FieldElement>> family_samples(int arity) {
    const std::vector<FieldElement> base = {
        FieldElement::from(2), FieldElement::from(3),
        FieldElement::one() + FieldElement::i(), FieldElement::sqrt2(),
        FieldElement::from(2) + FieldElement::i()};
    std::vector<std::vector<FieldElement>> out;
    for (size_t k = 0; k < base.size(); ++k) {
        if (arity == 1)
            out.push_back({base[k]});
        else
            out.push_back({base[k], base[(k + 1) % base.size()]});
    }
    return out;
}

} // namespace su21::wit
