#include <doctest.h>

#include "paritylab/isogeny.hpp"

using namespace paritylab;

TEST_CASE("two-isogeny pair setup") {
    TwoIsogenyPair p = two_isogeny_pair(Rat(1), Rat(1));
    CHECK(p.delta == Rat(-3));
    CHECK(invariants(p.curve).disc == Rat(-48));
    CHECK(p.image.a2 == Rat(-2));
    CHECK(p.image.a4 == Rat(-3));
    // discriminants: 16 b^2 delta and 2^8 b delta^2
    CHECK(invariants(p.curve).disc == Rat(16) * p.b * p.b * p.delta);
    CHECK(invariants(p.image).disc == Rat(256) * p.b * p.delta * p.delta);

    CHECK_THROWS_AS(two_isogeny_pair(Rat(1), Rat(0)), DegenerateFamily);
    CHECK_THROWS_AS(two_isogeny_pair(Rat(0), Rat(1)), DegenerateFamily); // a = 0
    CHECK_THROWS_AS(two_isogeny_pair(Rat(2), Rat(1)), DegenerateFamily); // delta = 0
}

TEST_CASE("two-isogeny map lands on the image curve") {
    TwoIsogenyPair p = two_isogeny_pair(Rat(1), Rat(-1));
    REQUIRE(on_curve(p.curve, Rat(1), Rat(1)));
    auto [X, Y] = two_isogeny_map(p, Rat(1), Rat(1));
    CHECK(on_curve(p.image, X, Y));

    TwoIsogenyPair q = two_isogeny_pair(Rat(4), Rat(2));
    REQUIRE(on_curve(q.curve, Rat(-1), Rat(1)));
    auto [X2, Y2] = two_isogeny_map(q, Rat(-1), Rat(1));
    CHECK(on_curve(q.image, X2, Y2));
}

TEST_CASE("3-division polynomial of y^2 = x^3 + 1") {
    Model m{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)};
    CHECK(division_poly_3(m) == Poly({Rat(0), Rat(12), Rat(0), Rat(0), Rat(3)}));
}

TEST_CASE("three-isogeny data and the dual composition") {
    // y^2 + xy + y = x^3 has the 3-torsion point (0, 0)
    Model base{Rat(1), Rat(0), Rat(1), Rat(0), Rat(0)};
    Model cs = completed_square(base);
    ThreeIsogenyData iso = three_isogeny(cs, Rat(0));
    CHECK(iso.d == cs.a6);              // f(0) = a6 on y^2 = f(x)
    CHECK(iso.d_class == Int(1));       // 1/4 is a square
    CHECK(division_poly_3(cs).eval(Rat(0)) == 0);
    invariants(iso.image); // image is nonsingular

    auto u = dual_composition_scale(iso);
    REQUIRE(u.has_value());
    Rat u2 = *u * *u;
    CHECK((u2 == Rat(9) || u2 == Rat(1, 9)));

    CHECK_THROWS_AS(three_isogeny(cs, Rat(5)), NotAKernel);
}

TEST_CASE("three-isogeny respects quadratic twisting of the kernel field") {
    Model base{Rat(2), Rat(0), Rat(-1), Rat(0), Rat(0)};
    Model cs = completed_square(base);
    ThreeIsogenyData iso = three_isogeny(cs, Rat(0));
    Model tw = quadratic_twist(base, Int(-5));
    ThreeIsogenyData iso_tw = three_isogeny(tw, Rat(0));
    // d picks up the twist: same class times -5
    CHECK(iso_tw.d_class == squarefree_part(Rat(iso.d_class) * Rat(-5)));
}
