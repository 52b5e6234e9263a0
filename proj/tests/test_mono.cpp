#include "cdx/hopf_zero.hpp"
#include "cdx/mono.hpp"
#include "cdx/sampling.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace cdx;

namespace {

Element unit_cert_alpha() {
    static const ZeroDivisorCert c = search_exhaustive(4, 2, 0).front();
    return make_scalar(1, 2) * make_double(c.pair().a, c.pair().b);
}

} // namespace

TEST_CASE("linear map plumbing") {
    std::vector<Element> cols = {Element::basis(3, 0), Element::basis(3, 1)};
    const LinearMap m(1, 3, cols);
    const Element x = ebq(1, {{0, "2"}, {1, "-1/3"}});
    CHECK(m.apply(x) == ebq(3, {{0, "2"}, {1, "-1/3"}}));

    const ordered_json j = m.to_json();
    const LinearMap back = LinearMap::from_json(j);
    CHECK(back.domain_level == 1);
    CHECK(back.codomain_level == 3);
    CHECK(back.cols[1] == cols[1]);

    CHECK_THROWS_AS(LinearMap(2, 3, cols), std::invalid_argument); // needs 4 columns
    CHECK_THROWS_AS(LinearMap(1, 2, cols), std::invalid_argument); // column level mismatch
    CHECK_THROWS_AS(m.apply(Element::basis(2, 0)), std::invalid_argument);
}

TEST_CASE("monomorphism check accepts embeddings and rejects non-maps") {
    // the first-half embedding A_3 -> A_4 is a subalgebra inclusion
    std::vector<Element> emb;
    for (int i = 0; i < 8; ++i) emb.push_back(embed(Element::basis(3, i), 4));
    CHECK(is_monomorphism(LinearMap(3, 4, emb)).passed());

    // e1 -> e1 + e2 is neither isometric nor multiplicative
    const Report bad =
        is_monomorphism(LinearMap(1, 3, {Element::basis(3, 0), eb(3, {{1, 1}, {2, 1}})}));
    CHECK(!bad.passed());
    bool mult_failed = false, ortho_failed = false;
    for (const CheckResult& c : bad.checks) {
        if (c.name == "multiplicative" && !c.passed) mult_failed = true;
        if (c.name == "orthonormal-columns" && !c.passed) ortho_failed = true;
    }
    CHECK(mult_failed);
    CHECK(ortho_failed);

    // a rank-deficient map loses injectivity
    const Report degen =
        is_monomorphism(LinearMap(1, 3, {Element::basis(3, 0), Element::basis(3, 0)}));
    bool inj_failed = false;
    for (const CheckResult& c : degen.checks)
        if (c.name == "injective" && !c.passed) inj_failed = true;
    CHECK(inj_failed);
}

TEST_CASE("one-generator embeddings") {
    CHECK(is_monomorphism(phi_w(Element::basis(3, 1))).passed());
    CHECK(is_monomorphism(phi_w(-Element::basis(1, 1))).passed());
    CHECK(is_monomorphism(phi_w(ebq(3, {{2, "3/5"}, {7, "4/5"}}))).passed());
    CHECK(is_monomorphism(phi_w(e0_tilde(4))).passed());

    CHECK_THROWS_AS(phi_w(eb(3, {{1, 1}, {2, 1}})), std::invalid_argument); // norm sqrt(2)
    CHECK_THROWS_AS(phi_w(Element::basis(3, 0)), std::invalid_argument);    // not pure
}

TEST_CASE("alternation flags by level") {
    Rng rng(50);
    for (int level = 1; level <= 3; ++level)
        for (int k = 0; k < 8; ++k) {
            const Element x = random_element(level, rng);
            const Element y = random_element(level, rng);
            const AlternationFlag f = alternation(x, y);
            CHECK(f.alternates);
            CHECK(f.strong);
        }

    // certificate halves never alternate: (a,a,b) = -||a||^2 b != 0
    const ZeroDivisorCert c = search_exhaustive(4, 2, 0).front();
    const AlternationFlag f = alternation(c.pair().a, c.pair().b);
    CHECK(!f.alternates);
    CHECK(associator(c.pair().a, c.pair().a, c.pair().b) ==
          -norm_sq(c.pair().a) * c.pair().b);

    // e0~ alternates strongly with everything, in both slots
    for (int k = 0; k < 8; ++k) {
        const Element x = random_element(4, rng);
        CHECK(alternation(e0_tilde(4), x).strong);
        CHECK(alternation(x, e0_tilde(4)).strong);
    }
}

TEST_CASE("quaternion embeddings from pairs") {
    const FramePair oct_pair(Element::basis(3, 1), Element::basis(3, 2));
    const LinearMap m = pair_to_quat_mono(oct_pair);
    CHECK(m.cols[3] == Element::basis(3, 3)); // e1 e2 = e3
    CHECK(is_monomorphism(m).passed());

    // embedded level-3 pairs still alternate strongly at level 4
    const FramePair lifted(embed(Element::basis(3, 1), 4), embed(Element::basis(3, 2), 4));
    CHECK(is_monomorphism(pair_to_quat_mono(lifted)).passed());

    // (a, e0~) works for any doubly pure unit a
    const Element a = ebq(4, {{1, "3/5"}, {2, "4/5"}});
    CHECK(is_monomorphism(pair_to_quat_mono(FramePair(a, e0_tilde(4)))).passed());

    // non-unit halves are not a frame
    CHECK_THROWS_AS(pair_to_quat_mono(FramePair(eb(4, {{1, 1}, {10, 1}}), Element::basis(4, 2))),
                    std::invalid_argument);
    // a unit frame that fails alternation is rejected
    const Element na = Element::basis(4, 1);
    const Element nb = ebq(4, {{2, "3/5"}, {12, "4/5"}});
    REQUIRE(in_V(FramePair(na, nb)));
    REQUIRE(!alternation(na, nb).strong);
    CHECK_THROWS_AS(pair_to_quat_mono(FramePair(na, nb)), std::invalid_argument);
}

TEST_CASE("octonion embedding from a unit zero divisor") {
    const Element alpha = unit_cert_alpha();
    const LinearMap m = oct_mono_from_alpha(alpha);
    CHECK(m.domain_level == 3);
    CHECK(m.codomain_level == 5);
    CHECK(m.cols[7] == alpha);
    CHECK(is_monomorphism(m).passed());

    CHECK_THROWS_AS(oct_mono_from_alpha(Scalar(2) * alpha), std::invalid_argument); // not unit
    // unit, in H_eps-perp, but not in E: the embedding cannot close
    const Element not_e = make_double(ebq(4, {{1, "3/5"}}), ebq(4, {{2, "4/5"}}));
    CHECK_THROWS_AS(oct_mono_from_alpha(not_e), std::invalid_argument);
}

TEST_CASE("octonion table audit") {
    const Report good = oct_table_audit(unit_cert_alpha());
    CHECK(good.passed());

    // on a non-zero-divisor the frame exists but the table cannot close
    const Element a = ebq(4, {{1, "3/5"}, {2, "4/5"}});
    const Element b = ebq(4, {{3, "3/5"}, {5, "4/5"}});
    const Report failing = oct_table_audit(make_double(a, b));
    CHECK(!failing.checks.front().passed);

    const auto cells = printed_table_known_mismatches();
    REQUIRE(cells.size() == 2);
    CHECK(cells[0] == std::pair<int, int>{4, 7});
    CHECK(cells[1] == std::pair<int, int>{7, 4});
}

TEST_CASE("five-condition audit is all-true on certificates, all-false off them") {
    const ZeroDivisorCert c = search_exhaustive(4, 2, 0).front();
    const EquivalenceAudit yes = theorem_audit(c.pair());
    CHECK(yes.all_true());
    CHECK(yes.halves_product_zero);
    CHECK(yes.assoc_eps_zero);
    CHECK(yes.quat_span_ok);
    CHECK(yes.oct_frame_ok);
    CHECK(yes.alpha_hat_zero);

    const EquivalenceAudit no =
        theorem_audit(FramePair(Element::basis(4, 1), Element::basis(4, 2)));
    CHECK(no.all_false());
    CHECK(no.consistent());

    // preconditions: equal norms, orthogonality, tilde-orthogonality
    CHECK_THROWS_AS(theorem_audit(FramePair(Element::basis(4, 1), eb(4, {{2, 2}}))),
                    std::invalid_argument);
    CHECK_THROWS_AS(theorem_audit(FramePair(Element::basis(4, 1), Element::basis(4, 1))),
                    std::invalid_argument);
    CHECK_THROWS_AS(theorem_audit(FramePair(Element::basis(4, 1), Element::basis(4, 9))),
                    std::invalid_argument);
}

TEST_CASE("product identities behind the equivalence") {
    Rng rng(51);
    const ZeroDivisorCert c = search_exhaustive(4, 2, 0).front();
    CHECK(bridge_identity_holds(c.pair()));
    for (int k = 0; k < 10; ++k) {
        auto [a, b] = w_compatible_pair(4, rng);
        CHECK(bridge_identity_holds(FramePair(a, b)));
        const Element alpha = make_double(random_in_subspace(4, Subspace::doubly_pure, rng),
                                          random_in_subspace(4, Subspace::doubly_pure, rng));
        CHECK(assoc_reduction_holds(alpha));
    }
}
