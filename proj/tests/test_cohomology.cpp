#include <catch2/catch.hpp>

#include "su21/witnesses.hpp"
#include "test_support.hpp"

using namespace su21;
using su21::test::A;
using su21::test::Cv;
using su21::test::Rng;

TEST_CASE("cocycles") {
    CHECK(is_cocycle(Mat3::identity()));
    CHECK(is_cocycle(wit::negswap12()));
    CHECK(is_cocycle(wit::diag_mm1()));
    CHECK(is_cocycle(wit::cyc13()));
    CHECK(is_cocycle(wit::swap12_neg3()));
    CHECK(!is_cocycle(wit::mix12())); // a coboundary solution, not a cocycle
    CHECK_THROWS_AS(is_cocycle(Mat3::diag(FieldElement::from(2), FieldElement::one(),
                                          FieldElement::one())),
                    not_in_sl3);
}

TEST_CASE("coboundary equations") {
    CHECK(check_coboundary(Mat3::identity(), Mat3::identity()));
    CHECK(check_coboundary(wit::mix12(), wit::negswap12()));
    CHECK(check_coboundary(wit::mix123(), wit::swap12_neg3()));
    CHECK(check_coboundary(wit::mix13(), wit::cyc13()));
    CHECK(check_coboundary(wit::col3_rot(), wit::diag_m1m()));
    CHECK(check_coboundary(wit::col2_rot(), wit::diag_1mm()));
    CHECK(!check_coboundary(wit::mix12(), wit::cyc13()));
}

TEST_CASE("torus cohomology classes") {
    const FieldElement one = FieldElement::one();
    CHECK(torus_class({one}, TorusKind::inv) == H1Class::trivial);
    CHECK(torus_class({-one}, TorusKind::inv) == H1Class::nontrivial);
    FieldElement pos = FieldElement::from(3) - rat(2) * FieldElement::sqrt2();
    CHECK(torus_class({pos}, TorusKind::inv) == H1Class::trivial);

    CHECK(torus_class({one}, TorusKind::fix) == H1Class::trivial);
    CHECK(torus_class({FieldElement::i()}, TorusKind::fix) == H1Class::trivial);
    CHECK(torus_class({FieldElement::from(5), FieldElement::from(5)},
                      TorusKind::swap_inv) == H1Class::trivial);
    CHECK(torus_class({one, -one}, TorusKind::componentwise_inv) == H1Class::trivial);

    // Cocycle preconditions.
    CHECK_THROWS_AS(torus_class({FieldElement::i()}, TorusKind::inv), not_a_cocycle);
    CHECK_THROWS_AS(torus_class({FieldElement::from(2)}, TorusKind::fix),
                    not_a_cocycle);
    CHECK_THROWS_AS(torus_class({FieldElement::zero()}, TorusKind::inv),
                    not_a_cocycle);
    CHECK_THROWS_AS(torus_class({FieldElement::from(2), FieldElement::from(3)},
                                TorusKind::swap_inv),
                    not_a_cocycle);

    // Multiplying by a norm h conj(h) never changes the class.
    Rng rng(61);
    for (int t = 0; t < 50; ++t) {
        FieldElement h = rng.nonzero_field();
        FieldElement norm = h * h.conj();
        for (const FieldElement& z : {one, -one, pos, -pos})
            CHECK(torus_class({z}, TorusKind::inv) ==
                  torus_class({norm * z}, TorusKind::inv));
    }
}

TEST_CASE("the two classes of SL3") {
    CHECK(sl3_class(Mat3::identity()) == H1Class::trivial);
    CHECK(sl3_class(wit::diag_mm1()) == H1Class::nontrivial);
    CHECK(sl3_class(wit::negswap12()) == H1Class::trivial);
    CHECK(sl3_class(wit::cyc13()) == H1Class::trivial);
    CHECK(sl3_class(wit::cyc13_inv()) == H1Class::trivial);
    CHECK(sl3_class(wit::swap23_i()) == H1Class::trivial);
    CHECK(sl3_class(wit::swap12_neg3()) == H1Class::trivial);
    CHECK(sl3_class(wit::diag_m1m()) == H1Class::trivial);
    CHECK(sl3_class(wit::diag_1mm()) == H1Class::trivial);
    CHECK_THROWS_AS(sl3_class(wit::mix12()), not_a_cocycle);

    // Twisting a cocycle by a coboundary preserves the class.
    Mat3 twisted = wit::mix12().inverse() * wit::diag_mm1() * tau_grp(wit::mix12());
    CHECK(is_cocycle(twisted));
    CHECK(sl3_class(twisted) == H1Class::nontrivial);
}

TEST_CASE("stabilizer family actions") {
    const std::vector<TorusFamily> fams = {
        wit::fam_u11(), wit::fam_u12(), wit::fam_u13(), wit::fam_u17(),
        wit::fam_v3(),  wit::fam_v4(),  wit::fam_u21(), wit::fam_u22(),
        wit::fam_u41()};
    for (const auto& f : fams) {
        auto samples = wit::family_samples(f.arity);
        REQUIRE(samples.size() == 5);
        CHECK(check_family_tau_action(f, samples));
        // Multiplicativity on five sample pairs (cyclically adjacent).
        for (size_t k = 0; k < samples.size(); ++k) {
            const auto& p = samples[k];
            const auto& q = samples[(k + 1) % samples.size()];
            std::vector<FieldElement> prod;
            for (int j = 0; j < f.arity; ++j)
                prod.push_back(p[static_cast<size_t>(j)] * q[static_cast<size_t>(j)]);
            CHECK(f.make(p) * f.make(q) == f.make(prod));
        }
        // The claimed parameter action is an involution.
        for (const auto& s : samples) CHECK(f.tau_param(f.tau_param(s)) == s);
    }

    // Negative control: the claimed action of one family applied to another
    // fails at the first sample.
    TorusFamily wrong = wit::fam_u12();
    wrong.tau_param = [](const std::vector<FieldElement>& p) {
        return std::vector<FieldElement>{p[0].conj().inverse()};
    };
    CHECK(!check_family_tau_action(wrong, {{FieldElement::from(2)}}));

    CHECK_THROWS_AS(
        check_family_tau_action(wit::fam_u12(), {{FieldElement::zero()}}),
        singular_sample);
}

TEST_CASE("stabilizer membership") {
    auto xa = make_subalgebra({Cv(cXa)}, Scalars::complex);
    Mat3 upper = Mat3::diag(FieldElement::from(2), FieldElement::one(),
                            FieldElement(rat(1, 2)));
    CHECK(check_stabilizer_membership(upper, xa));
    CHECK(!check_stabilizer_membership(wit::rot12(), xa));

    auto h0 = make_subalgebra({Cv(cHa)}, Scalars::complex);
    CHECK(check_stabilizer_membership(wit::swap12_neg3(), h0));

    // The coincidence S(-1) = the recorded cocycle for the u_1_3 case.
    CHECK(wit::fam_u13().make({-FieldElement::one()}) == wit::negswap12());
}
