#include <catch2/catch.hpp>

#include "test_support.hpp"

using namespace su21;
using su21::test::A;
using su21::test::Rng;

namespace {

Vec fe(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(FieldElement::from(x));
    return v;
}

} // namespace

TEST_CASE("row reduction basics") {
    std::vector<Vec> rows = {fe({0, 2, 4})};
    CHECK(rref(rows) == 1);
    CHECK(rows[0] == fe({0, 1, 2}));

    // A real scalar multiple adds nothing to a real span.
    Mat3 v = A(1) + rat(2) * A(5);
    auto u1 = make_subalgebra({v, FieldElement::sqrt2() * v}, Scalars::real);
    CHECK(u1.dim == 1);
    // Multiplication by i is not a real scalar.
    auto u2 = make_subalgebra({v, FieldElement::i() * v}, Scalars::real);
    CHECK(u2.dim == 2);
    // Over the complex scalars it is.
    auto u3 = make_subalgebra({v, FieldElement::i() * v}, Scalars::complex);
    CHECK(u3.dim == 1);
}

TEST_CASE("row reduction is canonical") {
    Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        std::vector<Vec> rows;
        for (int r = 0; r < 4; ++r) {
            Vec v;
            for (int c = 0; c < 6; ++c) v.push_back(rng.field());
            rows.push_back(v);
        }
        std::vector<Vec> a = rows;
        rref(a);
        std::vector<Vec> b = a;
        rref(b);
        CHECK(a == b); // idempotent

        // Reordering and mixing rows leaves the canonical form unchanged.
        std::vector<Vec> shuffled = {rows[2], rows[0], rows[3], rows[1]};
        for (size_t c = 0; c < 6; ++c)
            shuffled[0][c] = shuffled[0][c] + FieldElement::from(3) * shuffled[1][c];
        rref(shuffled);
        CHECK(shuffled == a);
    }
}

TEST_CASE("linear solving") {
    std::vector<Vec> basis = {fe({1, 0, 1}), fe({0, 1, 1})};
    auto c = solve_coords(basis, fe({2, 3, 5}));
    REQUIRE(c.has_value());
    CHECK((*c)[0] == FieldElement::from(2));
    CHECK((*c)[1] == FieldElement::from(3));
    CHECK(!solve_coords(basis, fe({1, 0, 0})).has_value());
}

TEST_CASE("signatures of symmetric and Hermitian forms") {
    auto F = [](long x) { return FieldElement::from(x); };
    std::vector<Vec> diag = {{F(2), F(0), F(0)},
                             {F(0), F(-3), F(0)},
                             {F(0), F(0), F(0)}};
    CHECK(signature_of(diag) == Signature{1, 1, 1});

    std::vector<Vec> hyp = {{F(0), F(1)}, {F(1), F(0)}};
    CHECK(signature_of(hyp) == Signature{1, 1, 0});

    std::vector<Vec> herm = {{F(0), -FieldElement::i()}, {FieldElement::i(), F(0)}};
    CHECK(signature_of(herm) == Signature{1, 1, 0});

    // sqrt2 entries are compared exactly.
    std::vector<Vec> s2 = {{FieldElement::sqrt2() - F(2)}};
    CHECK(signature_of(s2) == Signature{0, 1, 0});

    // Congruence-invariance under a change of basis, spot-checked.
    std::vector<Vec> g = {{F(2), F(1)}, {F(1), F(-1)}};
    CHECK(signature_of(g) == Signature{1, 1, 0});
}
