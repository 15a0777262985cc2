#include <catch2/catch.hpp>

#include "su21/invariants.hpp"
#include "su21/witnesses.hpp"
#include "test_support.hpp"

using namespace su21;
using su21::test::A;
using su21::test::Cv;
using su21::test::Rng;

TEST_CASE("matrix arithmetic") {
    Rng rng(21);
    Mat3 m = rng.matrix();
    CHECK(Mat3::identity() * m == m);
    CHECK(Mat3::form_n() * Mat3::form_n() == Mat3::identity());
    // The signed 1<->3 cycle squares to diag(-1, 1, -1).
    CHECK(wit::cyc13() * wit::cyc13() == wit::diag_m1m());
}

TEST_CASE("determinants") {
    CHECK(Mat3::identity().det() == FieldElement::one());
    CHECK(wit::mix13().det() == FieldElement::one());
    CHECK(wit::mix12().det() == FieldElement::one());
    CHECK(wit::mix23().det() == FieldElement::one());
    CHECK(wit::mix13_b().det() == FieldElement::one());

    Rng rng(22);
    for (int t = 0; t < 60; ++t) {
        Mat3 a = rng.matrix(), b = rng.matrix();
        CHECK((a * b).det() == a.det() * b.det());
    }
}

TEST_CASE("inverses") {
    CHECK(Mat3::identity().inverse() == Mat3::identity());
    Mat3 d = Mat3::diag(FieldElement::from(2), FieldElement::sqrt2(),
                        FieldElement::i());
    CHECK(d.inverse() == Mat3::diag(FieldElement(rat(1, 2)),
                                    rat(1, 2) * FieldElement::sqrt2(),
                                    -FieldElement::i()));
    // Signed rotation: the inverse is the transpose.
    CHECK(wit::rot12().inverse() == wit::rot12().transpose());
    CHECK_THROWS_AS(Mat3::zero().inverse(), singular_matrix);

    Rng rng(23);
    for (int t = 0; t < 40; ++t) {
        Mat3 a = rng.matrix();
        if (a.det().is_zero()) continue;
        CHECK(a * a.inverse() == Mat3::identity());
    }
}

TEST_CASE("conjugate transpose") {
    CHECK(Mat3::identity().dagger() == Mat3::identity());
    CHECK(A(4).dagger() == -A(4)); // a_4 = i(E12 + E21) is anti-Hermitian
    CHECK(A(5).dagger() == A(5));
    CHECK(Cv(cXa).dagger() == Cv(cYa));

    Rng rng(24);
    for (int t = 0; t < 60; ++t) {
        Mat3 a = rng.matrix(), b = rng.matrix();
        CHECK((a * b).dagger() == b.dagger() * a.dagger());
    }
}

TEST_CASE("characteristic polynomials") {
    auto p0 = Mat3::zero().charpoly();
    CHECK((p0[0].is_zero() && p0[1].is_zero() && p0[2].is_zero()));

    auto p1 = A(1).charpoly();
    CHECK(p1[0] == FieldElement::zero());
    CHECK(p1[1] == FieldElement::one());
    CHECK(p1[2] == FieldElement::zero());

    // Elementary symmetric functions of diagonal matrices.
    Rng rng(25);
    for (int t = 0; t < 60; ++t) {
        FieldElement a = rng.field(), b = rng.field(), c = rng.field();
        auto p = Mat3::diag(a, b, c).charpoly();
        CHECK(p[0] == -(a + b + c));
        CHECK(p[1] == a * b + a * c + b * c);
        CHECK(p[2] == -(a * b * c));
    }
}

TEST_CASE("diagonalization claim of the u_2_6 second generator at lambda = 1") {
    Mat3 y = u26_second_generator(FieldElement::one());
    auto ev = u26_claimed_eigenvalues(FieldElement::one());
    FieldElement e2 = ev[0] * ev[1] + ev[0] * ev[2] + ev[1] * ev[2];
    FieldElement e3 = ev[0] * ev[1] * ev[2];
    auto p = y.charpoly();
    CHECK(p[0].is_zero());
    CHECK(p[1] == e2);
    CHECK(p[2] == -e3);
    CHECK(p[1] == FieldElement::from(44));
    CHECK(p[2] == FieldElement::from(160) * FieldElement::i());
}
