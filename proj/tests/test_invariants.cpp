#include <catch2/catch.hpp>

#include "su21/invariants.hpp"
#include "su21/witnesses.hpp"
#include "test_support.hpp"

using namespace su21;
using su21::test::A;
using su21::test::Rng;

TEST_CASE("fingerprints of catalogued subalgebras") {
    auto u23 = make_subalgebra({A(1), A(2)}, Scalars::real, "u_2_3");
    Fingerprint f23 = fingerprint(u23);
    CHECK(f23.dim == 2);
    CHECK(f23.cls == StructureClass::abelian);
    CHECK(f23.killing == Signature{0, 0, 2});
    CHECK(f23.ambient == Signature{0, 2, 0});
    CHECK(f23.center_dim == 2);

    auto u36 = make_subalgebra({A(1), A(3), A(4)}, Scalars::real, "u_3_6");
    Fingerprint f36 = fingerprint(u36);
    CHECK(f36.killing == Signature{0, 3, 0});
    CHECK(f36.cls == StructureClass::semisimple);

    auto u35 = make_subalgebra({A(1) + A(2), A(5), A(6)}, Scalars::real, "u_3_5");
    Fingerprint f35 = fingerprint(u35);
    CHECK(f35.killing == Signature{2, 1, 0});
    CHECK(f35.cls == StructureClass::semisimple);

    // Heisenberg-type triple: nilpotent.
    auto u31 = make_subalgebra({A(4) - A(8), A(3) + A(7), A(1) + A(2) - A(6)},
                               Scalars::real, "u_3_1");
    Fingerprint f31 = fingerprint(u31);
    CHECK(f31.cls == StructureClass::nilpotent);
    CHECK(f31.center_dim == 1);

    // u_2_2 descends from a plane whose diagonal part annihilates the root
    // vector, so it is abelian.
    auto u22 = make_subalgebra(
        {A(1) + rat(2) * A(2) - A(4) + FieldElement::sqrt2() * (A(6) - A(8)),
         A(1) + rat(2) * A(2) + rat(3) * A(4)},
        Scalars::real, "u_2_2");
    CHECK(fingerprint(u22).cls == StructureClass::abelian);

    // The u_2_6 members are solvable but not nilpotent.
    auto u26 = make_subalgebra(
        {A(1) + rat(2) * A(2) - A(4) + FieldElement::sqrt2() * (A(6) - A(8)),
         u26_second_generator(FieldElement::one())},
        Scalars::real, "u_2_6");
    CHECK(fingerprint(u26).cls == StructureClass::solvable);

    auto u43 = make_subalgebra({A(1), A(2), A(5), A(6)}, Scalars::real, "u_4_3");
    CHECK(fingerprint(u43).cls == StructureClass::levi_decomposable);

    std::vector<Mat3> all(a_basis().begin(), a_basis().end());
    Fingerprint full = fingerprint(make_subalgebra(all, Scalars::real, "su21"));
    CHECK(full.killing.z == 0);
    CHECK(full.killing.p + full.killing.n == 8);
    CHECK(full.cls == StructureClass::semisimple);
    CHECK(full.center_dim == 0);

    CHECK_THROWS_AS(fingerprint(make_subalgebra({A(1), A(3)}, Scalars::real)),
                    not_closed);
}

TEST_CASE("fingerprint is invariant under catalogued conjugations") {
    const std::vector<Mat3> group = {wit::rot12(), wit::swap12_neg3(),
                                     wit::rot45_neg3(), wit::diag_1mm()};
    const std::vector<std::vector<Mat3>> algebras = {
        {A(1), A(2)},
        {A(1), A(3), A(4)},
        {A(1) + A(2), A(5), A(6)},
        {A(1), A(2), A(5), A(6)},
    };
    for (const auto& g : group) {
        REQUIRE(in_su21_group(g));
        for (const auto& basis : algebras) {
            auto u = make_subalgebra(basis, Scalars::real);
            CHECK(fingerprint(conjugate_subalgebra(g, u)) == fingerprint(u));
        }
    }
}

TEST_CASE("eigenvalue scaling match") {
    Mat3 x = A(1) + rat(3) * A(2);
    CHECK(eigenvalue_scaling_match(x, x).contains(FieldElement::one()));

    Mat3 y = A(1) + rat(3, 2) * A(2);
    CHECK(eigenvalue_scaling_match(x, y).contains(FieldElement(rat(1, 2))));

    CHECK(eigenvalue_scaling_match(A(1), A(5) - A(7)).certifies_distinct());

    // Nilpotent against nilpotent: every scale works.
    Mat3 n1 = test::Cv(cXa), n2 = test::Cv(cXab);
    CHECK(eigenvalue_scaling_match(n1, n2).kind == MatchSet::Kind::all);
    CHECK(eigenvalue_scaling_match(n1, A(1)).certifies_distinct());

    // sqrt2-valued scale factors are found exactly.
    Mat3 z = FieldElement::sqrt2() * x;
    CHECK(eigenvalue_scaling_match(x, z).contains(FieldElement::sqrt2()));

    // Non-traceless input: the trace coefficient pins the scale.
    Mat3 d1 = Mat3::diag(FieldElement::one(), FieldElement::zero(),
                         FieldElement::zero());
    Mat3 d2 = Mat3::diag(FieldElement::from(5), FieldElement::zero(),
                         FieldElement::zero());
    CHECK(eigenvalue_scaling_match(d1, d2).contains(FieldElement::from(5)));
    CHECK(eigenvalue_scaling_match(d1, Mat3::zero()).certifies_distinct());

    // A scale solving c^2 = 3 exists over the reals but not in the field:
    // the result must be inconclusive, never a spurious separation.
    Mat3 a = A(1) + A(2); // eigenvalues {i, 0, -i}
    Mat3 b{FieldElement::zero(), FieldElement::one(),  FieldElement::zero(),
           FieldElement::from(-3), FieldElement::zero(), FieldElement::zero(),
           FieldElement::zero(), FieldElement::zero(), FieldElement::zero()};
    CHECK(eigenvalue_scaling_match(a, b).kind == MatchSet::Kind::inconclusive);
}

TEST_CASE("scaling match as a predicate is rescale-invariant") {
    Rng rng(51);
    for (int t = 0; t < 40; ++t) {
        Mat3 x = rng.su21_element(), y = rng.su21_element();
        FieldElement c = FieldElement(rng.rational());
        if (c.is_zero()) continue;
        auto m1 = eigenvalue_scaling_match(x, y);
        auto m2 = eigenvalue_scaling_match(c * x, y);
        CHECK((m1.kind == MatchSet::Kind::empty) == (m2.kind == MatchSet::Kind::empty));
    }
}

TEST_CASE("diagonalization claims of the u_2_6 family") {
    CHECK(jordan_claim_check(FieldElement::zero()));
    CHECK(jordan_claim_check(FieldElement::one()));
    CHECK(jordan_claim_check(FieldElement(rat(3, 2))));
    CHECK(jordan_claim_check(FieldElement(rat(-1, 2))));
    CHECK(jordan_claim_check(FieldElement(rat(5, 2))));
    CHECK_THROWS_AS(jordan_claim_check(FieldElement::i()), not_real);

    // lambda = 0 degenerates to eigenvalues {2, -2, 0}.
    Mat3 y0 = u26_second_generator(FieldElement::zero());
    CHECK(y0.charpoly_at(FieldElement::from(2)).is_zero());
    CHECK(y0.charpoly_at(FieldElement::from(-2)).is_zero());
    CHECK(y0.charpoly_at(FieldElement::zero()).is_zero());
}

TEST_CASE("u_2_6 rescaling is possible exactly at +/- lambda") {
    for (long l : {1L, 2L, 3L}) {
        FieldElement L = FieldElement::from(l);
        for (long e = -4; e <= 4; ++e) {
            FieldElement E = FieldElement::from(e);
            auto r = u26_scaling_possible(L, E);
            REQUIRE(r.has_value());
            CHECK(*r == (e == l || e == -l));
        }
    }
    auto r = u26_scaling_possible(FieldElement(rat(1, 3)), FieldElement(rat(-1, 3)));
    REQUIRE(r.has_value());
    CHECK(*r);
}
