#include <doctest.h>

#include <random>

#include "paritylab/weierstrass.hpp"

using namespace paritylab;

TEST_CASE("invariants of y^2 = x^3 + x") {
    Model m{Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)};
    Invariants inv = invariants(m);
    CHECK(inv.disc == Rat(-64));
    CHECK(inv.c4 == Rat(-48));
    CHECK(j_invariant(m) == Rat(1728));
}

TEST_CASE("singular model is rejected") {
    Model cusp{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
    CHECK_THROWS_AS(invariants(cusp), SingularModel);
    CHECK_THROWS_AS(j_invariant(cusp), SingularModel);
}

TEST_CASE("transform round trips and composition") {
    Model m{Rat(1), Rat(-2), Rat(3), Rat(4, 5), Rat(-6)};
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> small(-5, 5);
    for (int trial = 0; trial < 25; ++trial) {
        int u1 = small(rng), u2 = small(rng);
        if (u1 == 0 || u2 == 0) continue;
        Transform f{Rat(u1), Rat(small(rng)), Rat(small(rng)) / 2, Rat(small(rng))};
        Transform g{Rat(u2) / 3, Rat(small(rng)), Rat(small(rng)), Rat(small(rng)) / 2};
        CHECK(apply(apply(m, f), g) == apply(m, compose(f, g)));
        CHECK(apply(apply(m, f), inverse_of(f)) == m);
        // discriminant scales by u^12
        Rat u12 = 1;
        for (int i = 0; i < 12; ++i) u12 *= f.u;
        CHECK(invariants(apply(m, f)).disc * u12 == invariants(m).disc);
        CHECK(j_invariant(apply(m, f)) == j_invariant(m));
    }
    CHECK_THROWS_AS(transform(m, Rat(0), Rat(0), Rat(0), Rat(0)), ZeroScaling);
}

TEST_CASE("points transport along transforms") {
    Model m{Rat(0), Rat(1), Rat(0), Rat(-1), Rat(0)}; // y^2 = x^3 + x^2 - x
    CHECK(on_curve(m, Rat(1), Rat(1)));
    CHECK_FALSE(on_curve(m, Rat(1), Rat(2)));
    // x = u^2 x' + r, y = u^3 y' + s u^2 x' + t with (x, y) = (1, 1)
    Transform f{Rat(2), Rat(3), Rat(1), Rat(-1)};
    Rat xp = (Rat(1) - f.r) / (f.u * f.u);
    Rat yp = (Rat(1) - f.s * f.u * f.u * xp - f.t) / (f.u * f.u * f.u);
    CHECK(on_curve(apply(m, f), xp, yp));
}

TEST_CASE("completed square and quadratic twist") {
    Model m{Rat(1), Rat(0), Rat(1), Rat(0), Rat(0)};
    Model cs = completed_square(m);
    CHECK(cs.a1 == 0);
    CHECK(cs.a3 == 0);
    CHECK(j_invariant(cs) == j_invariant(m));

    Model tw = quadratic_twist(m, Int(-6));
    CHECK(j_invariant(tw) == j_invariant(m));
    // twisting by a square of the twist gives a curve isomorphic over Q:
    Model tw2 = quadratic_twist(tw, Int(-6));
    Rat u(6);
    CHECK(apply(tw2, Transform{u, Rat(0), Rat(0), Rat(0)}) == completed_square(m));
    CHECK_THROWS_AS(quadratic_twist(m, Int(0)), ZeroTwist);
}
