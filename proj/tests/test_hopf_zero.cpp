#include "cdx/hopf_zero.hpp"
#include "cdx/linalg.hpp"
#include "cdx/sampling.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace cdx;

namespace {

const std::vector<ZeroDivisorCert>& certs4() {
    static const std::vector<ZeroDivisorCert> cs = search_exhaustive(4, 2, 0);
    return cs;
}

} // namespace

TEST_CASE("hopf map values and norm identity") {
    const Element e1 = Element::basis(2, 1);
    const HopfValue v = hopf(e1, Element::zero(2));
    CHECK(v.first.is_zero());
    CHECK(v.second == -1);
    CHECK(hopf_norm_sq(v) == 1);

    Rng rng(30);
    for (int level = 0; level <= 3; ++level)
        for (int k = 0; k < 20; ++k) {
            const Element x = random_element(level, rng);
            const Element y = random_element(level, rng);
            const Scalar total = norm_sq(x) + norm_sq(y);
            CHECK(hopf_norm_sq(hopf(x, y)) == total * total);
        }
}

TEST_CASE("X membership, rescaling, normalization") {
    const FramePair not_zero_div(Element::basis(4, 1), Element::basis(4, 2));
    CHECK(!in_Xr(not_zero_div, Scalar(1)));

    const FramePair zd = certs4().front().pair();
    CHECK(in_Xr(zd, Scalar(2))); // support-2 halves have squared norm 2
    CHECK(!in_Xr(zd, Scalar(1)));

    const FramePair smaller = rescale_X(zd, make_scalar(1, 2));
    CHECK(in_Xr(smaller, make_scalar(1, 2)));
    CHECK(mul(smaller.a, smaller.b).is_zero());
    CHECK_THROWS_AS(rescale_X(zd, Scalar(0)), std::invalid_argument);

    // sqrt(2) is irrational, so the raw certificate cannot be normalized...
    CHECK_THROWS_AS(normalize_to_X(zd), std::invalid_argument);

    // ...but (a + a~, b + b~) is again a zero-divisor pair (all four mixed
    // products vanish) with squared norm 4 on each side, which normalizes.
    const Element a2 = zd.a + tilde(zd.a);
    const Element b2 = zd.b + tilde(zd.b);
    CHECK(mul(a2, b2).is_zero());
    CHECK(norm_sq(a2) == 4);
    const FramePair unit = normalize_to_X(FramePair(a2, b2));
    CHECK(in_Xr(unit, Scalar(1)));
    CHECK(norm_sq(unit.a) == 1);
    CHECK(norm_sq(unit.b) == 1);
}

TEST_CASE("exhaustive search results by level and support") {
    CHECK(search_exhaustive(3, 2, 0).empty());
    CHECK(search_exhaustive(3, 3, 0).empty());
    CHECK(search_exhaustive(2, 2, 0).empty());
    CHECK(search_exhaustive(4, 1, 0).empty()); // basis products never vanish
    CHECK(certs4().size() == 336);

    for (const ZeroDivisorCert& c : certs4()) {
        CHECK(c.residual().is_zero());
        CHECK(c.norm_sq_a() == 2);
        CHECK(c.norm_sq_b() == 2);
        CHECK(c.method() == "exhaustive");
        CHECK(c.support() == 2);
        CHECK(is_doubly_pure(c.pair().a));
        CHECK(is_doubly_pure(c.pair().b));
        // complexified products vanish too
        CHECK(mul(tilde(c.pair().a), c.pair().b).is_zero());
        CHECK(mul(c.pair().a, tilde(c.pair().b)).is_zero());
        CHECK(mul(tilde(c.pair().a), tilde(c.pair().b)).is_zero());
    }

    // no duplicate pairs
    for (std::size_t i = 0; i < 20; ++i)
        for (std::size_t j = i + 1; j < 20; ++j)
            CHECK(!(certs4()[i].pair().a == certs4()[j].pair().a &&
                    certs4()[i].pair().b == certs4()[j].pair().b));

    CHECK_THROWS_AS(search_exhaustive(4, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(search_exhaustive(4, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(search_exhaustive(0, 2, 0), std::invalid_argument);
}

TEST_CASE("certificate json round trip and tamper detection") {
    const ZeroDivisorCert& c = certs4().front();
    const ordered_json j = cert_to_json(c);
    CHECK(j["level"] == 4);
    CHECK(j["residual"] == "0");
    CHECK(j["method"] == "exhaustive");

    const ZeroDivisorCert back = cert_from_json(j);
    CHECK(back.pair().a == c.pair().a);
    CHECK(back.pair().b == c.pair().b);
    CHECK(back.seed() == c.seed());

    ordered_json bad = j;
    bad["b"][4] = "17/5"; // no longer a zero divisor
    CHECK_THROWS_AS(cert_from_json(bad), std::runtime_error);

    ordered_json not_pure = j;
    not_pure["a"][0] = "1";
    CHECK_THROWS_AS(cert_from_json(not_pure), std::runtime_error);
}

TEST_CASE("membership in P and E") {
    const FramePair zd = certs4().front().pair();
    const Element a = zd.a;

    // the complex line through a: P members, and P sits inside E
    const Element coll = Scalar(2) * a - Scalar(5) * tilde(a);
    CHECK(in_P(FramePair(a, coll)));
    CHECK(in_P(FramePair(a, Element::zero(4))));
    CHECK(in_P(FramePair(Element::zero(4), a)));
    CHECK(in_E(make_double(a, coll)));

    // certificates are in E but not in P
    CHECK(!in_P(zd));
    CHECK(in_E(make_double(zd.a, zd.b)));

    // flipping one partner sign leaves H_eps-perp but breaks the associator
    const Element bad_b = eb(4, {{4, 1}, {15, 1}}); // partner is e4 - e15, not e4 + e15
    CHECK(!in_E(make_double(a, bad_b)));

    CHECK_THROWS_AS(in_E(Element::basis(5, 0)), std::invalid_argument);
    CHECK_THROWS_AS(in_P(FramePair(Element::basis(4, 0), a)), std::invalid_argument);
}

TEST_CASE("associator obstruction") {
    const FramePair zd = certs4().front().pair();
    CHECK(w_map(zd.a, zd.b).is_zero());

    Rng rng(31);
    for (int k = 0; k < 10; ++k) {
        const Element a = unit_vector(4, Subspace::doubly_pure, rng);
        const Element b = random_in_subspace(4, Subspace::doubly_pure, rng);
        // on the H_a-perp part the obstruction is exactly -2 (a d)~
        const HSplit s = project_H(a, b);
        CHECK(w_map(a, s.d) == Scalar(-2) * tilde(mul(a, s.d)));
        // and the H_a part contributes nothing
        CHECK(w_map(a, s.c).is_zero());
        CHECK(w_map(a, b) == w_map(a, s.d));
    }
}

TEST_CASE("retraction recovers the zero-divisor pair") {
    const FramePair zd = certs4().front().pair();
    const Element a = zd.a;
    const Element d = zd.b;

    // generated member of E minus P: b = x1 a + x2 a~ + lambda d
    const Element b = Scalar(2) * a + Scalar(3) * tilde(a) + make_scalar(1, 2) * d;
    const FramePair r = retract(FramePair(a, b));
    CHECK(r.a == a);
    CHECK(r.b == make_scalar(1, 2) * d);
    CHECK(mul(r.a, r.b).is_zero());

    // the element overload agrees
    const FramePair r2 = retract(make_double(a, b));
    CHECK(r2.a == r.a);
    CHECK(r2.b == r.b);

    // zero-divisor pairs are fixed points, and the map is idempotent
    const FramePair fix = retract(zd);
    CHECK(fix.a == zd.a);
    CHECK(fix.b == zd.b);
    const FramePair again = retract(r);
    CHECK(again.a == r.a);
    CHECK(again.b == r.b);

    // rejections: complex-collinear input, nonvanishing obstruction
    CHECK_THROWS_AS(retract(FramePair(a, Scalar(2) * a - tilde(a))), std::invalid_argument);
    CHECK_THROWS_AS(retract(FramePair(a, eb(4, {{4, 1}, {15, 1}}))), std::invalid_argument);
    CHECK_THROWS_AS(retract(FramePair(Element::basis(4, 0), d)), std::invalid_argument);

    // complex-collinear pairs are never zero divisors (P and X are disjoint)
    Rng rng(32);
    for (int k = 0; k < 25; ++k) {
        const Element u = random_in_subspace(4, Subspace::doubly_pure, rng);
        Scalar x1 = make_scalar(rng.range(-5, 5), rng.range(1, 3));
        Scalar x2 = make_scalar(rng.range(-5, 5), rng.range(1, 3));
        if (x1 == 0 && x2 == 0) x1 = 1;
        const Element v = x1 * u + x2 * tilde(u);
        if (!v.is_zero()) CHECK(!mul(u, v).is_zero());
    }
}
