#include <doctest.h>

#include <algorithm>

#include "paritylab/descent.hpp"
#include "paritylab/parity.hpp"

using namespace paritylab;

TEST_CASE("the trivial torsor is solvable everywhere") {
    TwoIsogenyPair p = two_isogeny_pair(Rat(1), Rat(1));
    for (Direction dir : {Direction::Phi, Direction::PhiHat}) {
        Torsor t = make_torsor(p, dir, Int(1));
        CHECK(local_solvable(t, Place::real(), 0));
        for (long l : {2L, 3L, 5L, 1009L}) CHECK(local_solvable(t, Place::at(l), 30));
    }
}

TEST_CASE("real insolvability by sign analysis") {
    TwoIsogenyPair p = two_isogeny_pair(Rat(1), Rat(1));
    // d = -1: w^2 = -u^4 + u^2 v^2 - v^4 < 0 away from 0
    Torsor t = make_torsor(p, Direction::Phi, Int(-1));
    CHECK_FALSE(local_solvable(t, Place::real(), 0));
}

TEST_CASE("torsor construction validates the divisor class") {
    TwoIsogenyPair p = two_isogeny_pair(Rat(1), Rat(-6));
    CHECK_THROWS_AS(make_torsor(p, Direction::Phi, Int(4)), Error);  // not squarefree
    CHECK_THROWS_AS(make_torsor(p, Direction::Phi, Int(5)), Error);  // does not divide b
    Torsor t = make_torsor(p, Direction::PhiHat, Int(5));            // delta = 25
    CHECK(t.A == Rat(-2));
    CHECK(t.B == Rat(5));
}

TEST_CASE("Selmer groups see the class of a rational point") {
    TwoIsogenyPair p = two_isogeny_pair(Rat(4), Rat(2));
    SelmerGroup sphi = selmer_group(p, Direction::Phi);
    // (-1, 1) is a rational point, so the class -1 survives
    REQUIRE(on_curve(p.curve, Rat(-1), Rat(1)));
    CHECK(std::binary_search(sphi.classes.begin(), sphi.classes.end(), Int(-1)));
    CHECK((size_t(1) << sphi.dimension) == sphi.classes.size());

    SelmerGroup sphihat = selmer_group(p, Direction::PhiHat);
    CHECK((size_t(1) << sphihat.dimension) == sphihat.classes.size());

    // descent parity equals the product of local sigma terms
    GlobalReport g = global_check(context_of(p), 5);
    CHECK(parity_oracle(p) == g.S);
}

TEST_CASE("Selmer groups contain the 2-torsion classes") {
    for (auto [a, b] : {std::pair<long, long>{1, -6}, {3, 2}, {-1, -1}, {6, 2}}) {
        TwoIsogenyPair p = two_isogeny_pair(Rat(a), Rat(b));
        SelmerGroup sphi = selmer_group(p, Direction::Phi);
        CHECK(std::binary_search(sphi.classes.begin(), sphi.classes.end(),
                                 squarefree_part(p.b)));
        SelmerGroup sphihat = selmer_group(p, Direction::PhiHat);
        CHECK(std::binary_search(sphihat.classes.begin(), sphihat.classes.end(),
                                 squarefree_part(p.delta)));
    }
}

TEST_CASE("point search finds the visible points") {
    Model m{Rat(0), Rat(0), Rat(0), Rat(-36), Rat(0)};
    auto xs = point_search_x(m, 50);
    CHECK(std::find(xs.begin(), xs.end(), Rat(-3)) != xs.end());
    CHECK(std::find(xs.begin(), xs.end(), Rat(0)) != xs.end());
    CHECK(std::find(xs.begin(), xs.end(), Rat(6)) != xs.end());
    CHECK(std::find(xs.begin(), xs.end(), Rat(25, 4)) != xs.end()); // (25/4, 35/8)
}
