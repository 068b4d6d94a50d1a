#include <doctest.h>

#include "paritylab/isogeny.hpp"
#include "paritylab/tate.hpp"

using namespace paritylab;

namespace {
Model family_model(long a, long b) {
    return Model{Rat(0), Rat(a), Rat(0), Rat(b), Rat(0)};
}
} // namespace

TEST_CASE("good reduction away from the discriminant") {
    LocalReduction r = tate_algorithm(family_model(1, 1), 5);
    CHECK(r.kodaira.str() == "I0");
    CHECK(r.tamagawa == 1);
    CHECK(is_good(r.kodaira));
    CHECK(r.v_delta_min == 0);
}

TEST_CASE("multiplicative reduction of (a,b) = (1,1) at 3") {
    LocalReduction r = tate_algorithm(family_model(1, 1), 3);
    CHECK(r.kodaira.str() == "I1");
    CHECK(r.tamagawa == 1);
    CHECK(is_multiplicative(r.kodaira));
    CHECK(r.v_delta_min == 1);
}

TEST_CASE("split versus nonsplit") {
    // y^2 = x^3 + x^2 at 5 is singular; use I_n curves with known node fields:
    // y^2 + xy = x^3 - x^2 - 3x + 3 has Delta = 1957 = 19*103; just check
    // the family examples instead.
    LocalReduction r5 = tate_algorithm(family_model(1, -5), 5);
    REQUIRE(is_multiplicative(r5.kodaira));
    // node: y^2 = x^2(x + 1): slopes +-1 rational -> split
    CHECK(r5.cls == ReductionClass::MultSplit);
    CHECK(r5.tamagawa == r5.v_delta_min);

    LocalReduction r3 = tate_algorithm(family_model(-1, 1), 3);
    REQUIRE(is_multiplicative(r3.kodaira));
    // node: y^2 = -x^2(1 - x): slopes sqrt(-1) not in F_3 -> nonsplit
    CHECK(r3.cls == ReductionClass::MultNonsplit);
    CHECK(r3.tamagawa == (r3.v_delta_min % 2 == 0 ? 2 : 1));
    CHECK_FALSE(is_split(r3));
    CHECK_THROWS_AS(is_split(tate_algorithm(family_model(1, 1), 5)), NotMultiplicative);
}

TEST_CASE("additive types III / I0* from the valuation pattern at 3") {
    // v(a) >= 1, v(b) = 1: type III
    LocalReduction r = tate_algorithm(family_model(3, 3), 3);
    CHECK(r.kodaira.str() == "III");
    CHECK(r.tamagawa == 2);
    // v(a) >= 1, v(b) = 2 = v(delta): type I0*
    LocalReduction r2 = tate_algorithm(family_model(3, 18), 3);
    CHECK(invariants(family_model(3, 18)).disc != 0);
    CHECK(r2.kodaira.str() == "I0*");
}

TEST_CASE("minimality idempotence") {
    for (Model m : {family_model(-2, -2), family_model(4, 12), family_model(1, 1),
                    Model{Rat(1), Rat(0), Rat(1), Rat(0), Rat(0)}}) {
        for (long l : {2L, 3L, 5L, 7L}) {
            LocalReduction r = tate_algorithm(m, l);
            LocalReduction r2 = tate_algorithm(r.minimal_model, l);
            CHECK(r2.scaling_u == Rat(1));
            CHECK(r2.kodaira.str() == r.kodaira.str());
            CHECK(r2.tamagawa == r.tamagawa);
            CHECK(r2.v_delta_min == r.v_delta_min);
            CHECK(r2.cls == r.cls);
        }
    }
}

TEST_CASE("isomorphism invariance") {
    Model m = family_model(-7, 16); // good ordinary at 2
    Model moved = transform(m, Rat(1, 6), Rat(3), Rat(2), Rat(-1, 2));
    for (long l : {2L, 3L, 5L}) {
        LocalReduction a = tate_algorithm(m, l), b = tate_algorithm(moved, l);
        CHECK(a.kodaira.str() == b.kodaira.str());
        CHECK(a.tamagawa == b.tamagawa);
        CHECK(a.v_delta_min == b.v_delta_min);
        CHECK(a.cls == b.cls);
    }
}

TEST_CASE("ordinary versus supersingular") {
    // (a,b) = (-7,16): j has v_2(j) = 0, ordinary at 2
    CHECK(tate_algorithm(family_model(-7, 16), 2).cls == ReductionClass::GoodOrdinary);
    // y^2 + y = x^3 is supersingular at 2 (a_2 = 0)
    Model ss{Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)};
    CHECK(tate_algorithm(ss, 2).cls == ReductionClass::GoodSupersingular);
    // y^2 = x^3 + 1 is supersingular at 5 (5 = 2 mod 3)
    Model ss5{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)};
    CHECK(tate_algorithm(ss5, 5).cls == ReductionClass::GoodSupersingular);
    CHECK(tate_algorithm(ss5, 7).cls == ReductionClass::GoodOrdinary);
}

TEST_CASE("larger Kodaira types") {
    // y^2 = x^3 + l^2: type IV at l >= 5 (v(Delta) = 4)
    Model m{Rat(0), Rat(0), Rat(0), Rat(0), Rat(25)};
    CHECK(tate_algorithm(m, 5).kodaira.str() == "IV");
    // y^2 = x^3 + l^4: type IV* (v(Delta) = 8)
    Model m2{Rat(0), Rat(0), Rat(0), Rat(0), Rat(625)};
    CHECK(tate_algorithm(m2, 5).kodaira.str() == "IV*");
    // y^2 = x^3 + l^3 x: type III* (v(Delta) = 9)
    Model m3{Rat(0), Rat(0), Rat(0), Rat(125), Rat(0)};
    CHECK(tate_algorithm(m3, 5).kodaira.str() == "III*");
    // y^2 = x^3 + l^5: type II* (v(Delta) = 10)
    Model m4{Rat(0), Rat(0), Rat(0), Rat(0), Rat(3125)};
    CHECK(tate_algorithm(m4, 5).kodaira.str() == "II*");
    // y^2 = x^3 + l: type II
    Model m5{Rat(0), Rat(0), Rat(0), Rat(0), Rat(5)};
    CHECK(tate_algorithm(m5, 5).kodaira.str() == "II");
    // y^2 = x^3 + l^6: not minimal, rescales to good reduction
    Model m6{Rat(0), Rat(0), Rat(0), Rat(0), Rat(15625)};
    LocalReduction r6 = tate_algorithm(m6, 5);
    CHECK(r6.kodaira.str() == "I0");
    CHECK(r6.scaling_u == Rat(5));
    // I_n*: (a,b) = (5, 50) has v(a)=1, v(b)=2, v(delta) = v(25 - 200) = 2;
    // swap: v(b)=2 < v(delta) needs delta = a^2-4b with v = 3+: a=5, b=25/2? use
    // a = 10, b = 25: delta = 0. Use a = 15, b = 50: delta = 25, v=2, v(b)=2:
    // that is I0*. a = 5, b = 125: delta = 25 - 500 = -475, v=2, v(b)=3: I_n*.
    LocalReduction rn = tate_algorithm(family_model(5, 125), 5);
    CHECK(rn.kodaira.family == Kodaira::Family::InStar);
    CHECK(rn.kodaira.n == rn.v_delta_min - 6);
}

TEST_CASE("scaling into integral models") {
    // non-integral model of (1,1) scaled by u = 1/6
    Model m = transform(family_model(1, 1), Rat(6), Rat(0), Rat(0), Rat(0));
    for (long l : {2L, 3L}) {
        LocalReduction a = tate_algorithm(m, l), b = tate_algorithm(family_model(1, 1), l);
        CHECK(a.kodaira.str() == b.kodaira.str());
        CHECK(a.cls == b.cls);
    }
}

TEST_CASE("tamagawa ratio valuation") {
    TwoIsogenyPair p = two_isogeny_pair(Rat(1), Rat(-5));
    LocalReduction base = tate_algorithm(p.curve, 5), image = tate_algorithm(p.image, 5);
    CHECK(tamagawa_ratio_ord(base, image, 2) ==
          valuation(Int(image.tamagawa), 2) - valuation(Int(base.tamagawa), 2));
}
