#include "cdx/element.hpp"
#include "cdx/json_io.hpp"
#include "cdx/sampling.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace cdx;

TEST_CASE("construction and basis vectors") {
    CHECK(Element::zero(3).is_zero());
    CHECK(Element::basis(2, 3)[3] == 1);
    CHECK(Element::basis(2, 3)[0] == 0);
    CHECK_THROWS_AS(Element(2, std::vector<Scalar>(3, Scalar(0))), std::invalid_argument);
    CHECK_THROWS_AS(Element::basis(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(Element::basis(-1, 0), std::invalid_argument);
}

TEST_CASE("complex and quaternion products") {
    // A_1 is C: e1^2 = -e0
    CHECK(mul(Element::basis(1, 1), Element::basis(1, 1)) == -Element::basis(1, 0));

    // A_2 orientation: e1 e2 = e3 and cyclic, anticommuting
    auto e = [](int i) { return Element::basis(2, i); };
    CHECK(mul(e(1), e(2)) == e(3));
    CHECK(mul(e(2), e(1)) == -e(3));
    CHECK(mul(e(2), e(3)) == e(1));
    CHECK(mul(e(3), e(1)) == e(2));
    for (int i = 1; i < 4; ++i) CHECK(mul(e(i), e(i)) == -e(0));
    for (int i = 0; i < 4; ++i) {
        CHECK(mul(e(0), e(i)) == e(i));
        CHECK(mul(e(i), e(0)) == e(i));
    }
}

TEST_CASE("conjugation, trace and inner product agree across routes") {
    Rng rng(5);
    for (int level = 0; level <= 4; ++level) {
        for (int k = 0; k < 10; ++k) {
            const Element x = random_element(level, rng);
            const Element y = random_element(level, rng);

            CHECK(conj(conj(x)) == x);
            CHECK(conj(mul(x, y)) == mul(conj(y), conj(x)));
            CHECK(trace(x) == 2 * x[0]);
            CHECK(x + conj(x) == (2 * x[0]) * Element::basis(level, 0));

            // <x,y> = t(x conj(y))/2 must equal the coordinate dot product
            Scalar dot(0);
            for (int i = 0; i < x.dim(); ++i) dot += x[i] * y[i];
            CHECK(inner(x, y) == dot);
            CHECK(norm_sq(x) == inner(x, x));
            CHECK(mul(x, conj(x)) == norm_sq(x) * Element::basis(level, 0));
        }
    }
}

TEST_CASE("tilde and hat involutions") {
    Rng rng(6);
    for (int level = 1; level <= 4; ++level) {
        const int h = 1 << (level - 1);
        const Element e0t = Element::basis(level, h);
        for (int k = 0; k < 8; ++k) {
            const Element x = random_element(level, rng);
            CHECK(tilde(x) == mul(x, e0t));
            CHECK(tilde(tilde(x)) == -x);
            CHECK(hat(hat(x)) == x);
            auto [x1, x2] = split(x);
            CHECK(tilde(x) == make_double(-x2, x1));
            CHECK(hat(x) == make_double(x2, x1));
        }
        // coordinates: e_k -> e_{k+h} for k < h, e_{k+h} -> -e_k
        for (int k = 0; k < h; ++k) {
            CHECK(tilde(Element::basis(level, k)) == Element::basis(level, k + h));
            CHECK(tilde(Element::basis(level, k + h)) == -Element::basis(level, k));
        }
    }
    CHECK_THROWS_AS(tilde(Element::zero(0)), std::invalid_argument);
}

TEST_CASE("doubling, splitting and embedding") {
    Rng rng(7);
    const Element a = random_element(3, rng);
    const Element b = random_element(3, rng);
    const Element d = make_double(a, b);
    CHECK(d.level() == 4);
    auto [x, y] = split(d);
    CHECK(x == a);
    CHECK(y == b);

    // doubling against the basis layout
    CHECK(make_double(Element::zero(3), Element::basis(3, 0)) == Element::basis(4, 8));
    for (int i = 0; i < 8; ++i)
        CHECK(make_double(Element::basis(3, i), Element::zero(3)) == Element::basis(4, i));

    CHECK(embed(a, 3) == a);
    const Element up = embed(a, 5);
    CHECK(up.level() == 5);
    for (int i = 0; i < 8; ++i) CHECK(up[i] == a[i]);
    for (int i = 8; i < 32; ++i) CHECK(up[i] == 0);
    CHECK_THROWS_AS(embed(d, 3), std::invalid_argument);
    CHECK_THROWS_AS(mul(a, d), std::invalid_argument);
    CHECK_THROWS_AS(add(a, d), std::invalid_argument);
    CHECK_THROWS_AS(inner(a, d), std::invalid_argument);
    CHECK_THROWS_AS(split(Element::zero(0)), std::invalid_argument);
}

TEST_CASE("associator behavior by level") {
    Rng rng(8);
    // levels <= 2 are associative
    for (int level = 0; level <= 2; ++level)
        for (int k = 0; k < 6; ++k) {
            const Element x = random_element(level, rng);
            const Element y = random_element(level, rng);
            const Element z = random_element(level, rng);
            CHECK(associator(x, y, z).is_zero());
        }
    // level 3 is alternative but not associative
    bool saw_nonzero = false;
    for (int k = 0; k < 10; ++k) {
        const Element x = random_element(3, rng);
        const Element y = random_element(3, rng);
        const Element z = random_element(3, rng);
        CHECK(associator(x, x, y).is_zero());
        CHECK(associator(x, y, y).is_zero());
        if (!associator(x, y, z).is_zero()) saw_nonzero = true;
    }
    CHECK(saw_nonzero);
    CHECK(!associator(Element::basis(3, 1), Element::basis(3, 2), Element::basis(3, 4)).is_zero());
    // level 4 keeps flexibility but loses alternativity
    bool saw_non_alt = false;
    for (int k = 0; k < 10; ++k) {
        const Element x = random_element(4, rng);
        const Element y = random_element(4, rng);
        CHECK(associator(x, y, x).is_zero());
        if (!associator(x, x, y).is_zero()) saw_non_alt = true;
    }
    CHECK(saw_non_alt);
}

TEST_CASE("element json round trip") {
    const Element x = ebq(3, {{0, "1/2"}, {3, "-7/3"}, {5, "4"}});
    const ordered_json j = element_to_json(x);
    CHECK(j["level"] == 3);
    CHECK(j["coeffs"][0] == "1/2");
    CHECK(j["coeffs"][3] == "-7/3");
    CHECK(j["coeffs"][5] == "4");
    CHECK(element_from_json(j) == x);

    CHECK(coeffs_from_json(coeffs_to_json(x)) == x.coeffs());

    ordered_json bad = j;
    bad["coeffs"][1] = "1/0";
    CHECK_THROWS_AS(element_from_json(bad), std::invalid_argument);
    ordered_json short_arr = j;
    short_arr["coeffs"].erase(7);
    CHECK_THROWS_AS(element_from_json(short_arr), std::invalid_argument);
}
