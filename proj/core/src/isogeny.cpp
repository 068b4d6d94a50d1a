#include "paritylab/isogeny.hpp"

namespace paritylab {

TwoIsogenyPair two_isogeny_pair(const Rat& a, const Rat& b) {
    if (a == 0) throw DegenerateFamily("a = 0: j = 1728, excluded from the family");
    if (b == 0) throw DegenerateFamily("b = 0: singular curve");
    Rat delta = a * a - 4 * b;
    if (delta == 0) throw DegenerateFamily("a^2 = 4b: singular curve");
    TwoIsogenyPair p;
    p.a = a;
    p.b = b;
    p.delta = delta;
    p.curve = Model{0, a, 0, b, 0};
    p.image = Model{0, -2 * a, 0, delta, 0};
    return p;
}

std::pair<Rat, Rat> two_isogeny_map(const TwoIsogenyPair& p, const Rat& x, const Rat& y) {
    if (x == 0) throw Error("two_isogeny_map: kernel point");
    return {x + p.a + p.b / x, y - p.b * y / (x * x)};
}

Poly division_poly_3(const Model& m) {
    Invariants i = invariants(m); // throws SingularModel
    return Poly({i.b8, 3 * i.b6, 3 * i.b4, i.b2, Rat(3)});
}

ThreeIsogenyData three_isogeny(const Model& m, const Rat& x0) {
    Poly psi3 = division_poly_3(m);
    if (psi3.eval(x0) != 0) throw NotAKernel();

    ThreeIsogenyData data;
    data.base = completed_square(m);
    data.kernel_x = x0;

    const Rat &A = data.base.a2, &B = data.base.a4, &C = data.base.a6;
    data.d = ((x0 + A) * x0 + B) * x0 + C; // f(x0)
    if (data.d == 0) throw NotAKernel();   // would be 2-torsion, not 3-torsion
    data.d_class = squarefree_part(data.d);

    // Velu for the subgroup {O, Q, -Q}, Q = (x0, sqrt(d)); both t and w are
    // rational even though Q itself need not be.
    Rat t = 6 * x0 * x0 + 4 * A * x0 + 2 * B;
    Rat u = 4 * data.d;
    Rat w = u + t * x0;
    data.image = Model{0, A, 0, B - 5 * t, C - 4 * A * t - 7 * w};
    if (invariants_of(data.image).disc == 0)
        throw InternalError("Velu image is singular");
    return data;
}

std::optional<Rat> dual_composition_scale(const ThreeIsogenyData& iso) {
    Poly psi3_img = division_poly_3(iso.image);
    Invariants base_inv = invariants(iso.base);
    for (const Rat& x0p : psi3_img.rational_roots()) {
        ThreeIsogenyData back;
        try {
            back = three_isogeny(iso.image, x0p);
        } catch (const NotAKernel&) {
            continue;
        }
        // Look for an isomorphism  base = apply(back.image, {u, r, 0, 0}).
        Invariants bi = invariants_of(back.image);
        if (bi.c4 == 0 || bi.c6 == 0 || base_inv.c4 == 0 || base_inv.c6 == 0)
            continue; // j in {0, 1728}; not needed for our corpora
        Rat u4 = bi.c4 / base_inv.c4;
        Rat u6 = bi.c6 / base_inv.c6;
        Rat u2 = u6 / u4;
        if (u2 * u2 != u4 || u2 * u2 * u2 != u6) continue;
        // u2 = u^2 must be a rational square
        Rat u2abs = u2;
        if (sgn(u2abs) < 0) continue;
        Int num = u2.get_num(), den = u2.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
            continue;
        Int rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        Rat u(rn, rd);
        Rat r = (iso.base.a2 * u2 - back.image.a2) / 3;
        for (const Rat& uu : {u, Rat(-u)}) {
            if (apply(back.image, Transform{uu, r, Rat(0), Rat(0)}) == iso.base) return uu;
        }
    }
    return std::nullopt;
}

} // namespace paritylab
