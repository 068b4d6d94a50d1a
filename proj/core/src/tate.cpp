#include "paritylab/tate.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace paritylab {

std::string to_string(ReductionClass c) {
    switch (c) {
        case ReductionClass::GoodOrdinary: return "good-ordinary";
        case ReductionClass::GoodSupersingular: return "good-supersingular";
        case ReductionClass::MultSplit: return "split-multiplicative";
        case ReductionClass::MultNonsplit: return "nonsplit-multiplicative";
        case ReductionClass::Additive: return "additive";
    }
    throw InternalError("unhandled ReductionClass");
}

std::string Kodaira::str() const {
    using F = Family;
    switch (family) {
        case F::In: return "I" + std::to_string(n);
        case F::InStar: return "I" + std::to_string(n) + "*";
        case F::II: return "II";
        case F::III: return "III";
        case F::IV: return "IV";
        case F::IVStar: return "IV*";
        case F::IIIStar: return "III*";
        case F::IIStar: return "II*";
    }
    throw InternalError("unhandled Kodaira family");
}

namespace {

// Valuation with v(0) = +infinity for coefficient tests.
constexpr long VINF = 1L << 40;
long vco(const Rat& x, long l) { return x == 0 ? VINF : valuation(x, l); }

long mod_inv(long a, long l) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), Int(a).get_mpz_t(), Int(l).get_mpz_t()))
        throw InternalError("non-invertible residue");
    return r.get_si();
}

int legendre_long(long a, long l) { return legendre(Int(a), l); }

// Move the singular point of the reduction mod l to (0,0), so that
// l | a3, a4, a6. Assumes l | disc.
void move_singular_point(Model& m, Transform& total, long l) {
    long A1 = residue(m.a1, l), A2 = residue(m.a2, l), A3 = residue(m.a3, l);
    long A4 = residue(m.a4, l), A6 = residue(m.a6, l);
    auto F = [&](long x, long y) {
        long x2 = x * x % l;
        return ((y * y + A1 * x % l * y + A3 * y) % l -
                (x2 * x % l + A2 * x2 % l + A4 * x + A6) % l % l + 2 * l * l) % l;
    };
    auto Fx = [&](long x, long y) {
        return ((A1 * y) % l - (3 * x % l * x + 2 * A2 * x + A4) % l + 2 * l * l) % l;
    };
    auto Fy = [&](long x, long y) { return (2 * y + A1 * x + A3) % l; };
    for (long x0 = 0; x0 < l; ++x0) {
        std::array<long, 2> ys;
        int ny = 0;
        if (l == 2) {
            ys = {0, 1};
            ny = 2;
        } else {
            ys[ny++] = (l - (A1 * x0 + A3) % l) % l * mod_inv(2, l) % l;
        }
        for (int i = 0; i < ny; ++i) {
            long y0 = ys[i];
            if (F(x0, y0) == 0 && Fx(x0, y0) == 0 && Fy(x0, y0) == 0) {
                Transform f{Rat(1), Rat(x0), Rat(0), Rat(y0)};
                m = apply(m, f);
                total = compose(total, f);
                return;
            }
        }
    }
    throw InternalError("no singular point found mod " + std::to_string(l));
}

// Trace of Frobenius of a good reduction mod l.
long trace_of_frobenius(const Model& m, long l) {
    if (l == 2) {
        long count = 1; // point at infinity
        long A1 = residue(m.a1, 2), A2 = residue(m.a2, 2), A3 = residue(m.a3, 2);
        long A4 = residue(m.a4, 2), A6 = residue(m.a6, 2);
        for (long x = 0; x < 2; ++x)
            for (long y = 0; y < 2; ++y)
                if ((y + A1 * x * y + A3 * y) % 2 == (x + A2 * x + A4 * x + A6) % 2)
                    ++count;
        return 3 - count;
    }
    Invariants inv = invariants_of(m);
    long r2 = residue(inv.b2 / 4, l), r4 = residue(inv.b4 / 2, l), r6 = residue(inv.b6 / 4, l);
    long sum = 0;
    for (long x = 0; x < l; ++x) {
        long fx = ((x * x % l * x + r2 * x % l * x + r4 * x + r6) % l + l) % l;
        if (fx != 0) sum += legendre_long(fx, l);
    }
    return -sum;
}

struct CubicRoots {
    enum Kind { Separable, DoubleRoot, TripleRoot } kind = Separable;
    long rho = 0;            // the repeated root, if any
    int rational_count = 0;  // simple rational roots (Separable case)
};

// Root structure of the monic cubic T^3 + c2 T^2 + c4 T + c6 over F_l.
// A repeated root of a cubic is always rational (it is Galois-stable), so
// enumeration sees every multiplicity.
CubicRoots analyse_cubic(long c2, long c4, long c6, long l) {
    CubicRoots out;
    for (long rho = 0; rho < l; ++rho) {
        long v = ((rho * rho % l * rho + c2 * rho % l * rho + c4 * rho + c6) % l + l) % l;
        if (v != 0) continue;
        // deflate by (T - rho) to measure multiplicity
        long q1 = (c2 + rho) % l;
        long q0 = (c4 + q1 * rho) % l;
        int mult = 1;
        if ((q0 + rho * (q1 + rho)) % l == 0) {
            mult = 2;
            if ((q1 + 2 * rho) % l == 0) mult = 3;
        }
        if (mult >= 2) {
            out.kind = mult == 3 ? CubicRoots::TripleRoot : CubicRoots::DoubleRoot;
            out.rho = rho;
            return out;
        }
        ++out.rational_count;
    }
    return out;
}

void shift(Model& m, Transform& total, const Rat& r, const Rat& s, const Rat& t) {
    Transform f{Rat(1), r, s, t};
    m = apply(m, f);
    total = compose(total, f);
}

} // namespace

LocalReduction tate_algorithm(const Model& m0, long l) {
    if (!is_prime(l)) throw Error("tate_algorithm: modulus is not prime");
    invariants(m0); // reject singular input

    Model m = m0;
    Transform total = Transform::identity();

    // Scale into Z_l: u = l^{-k} multiplies a_i by l^{ik}.
    long k = 0;
    const std::array<std::pair<const Rat*, int>, 5> ais{
        {{&m.a1, 1}, {&m.a2, 2}, {&m.a3, 3}, {&m.a4, 4}, {&m.a6, 6}}};
    for (auto [c, i] : ais) {
        if (*c == 0) continue;
        long v = valuation(*c, l);
        if (v < 0) k = std::max(k, (-v + i - 1) / i);
    }
    if (k > 0) {
        Rat u(1);
        for (long j = 0; j < k; ++j) u /= l;
        Transform f{u, Rat(0), Rat(0), Rat(0)};
        m = apply(m, f);
        total = compose(total, f);
    }

    LocalReduction out;
    out.l = l;

    while (true) {
        Invariants inv = invariants_of(m);
        long n = valuation(inv.disc, l);

        if (n == 0) {
            out.kodaira = {Kodaira::Family::In, 0};
            out.tamagawa = 1;
            long al = trace_of_frobenius(m, l);
            out.cls = (al % l != 0) ? ReductionClass::GoodOrdinary
                                    : ReductionClass::GoodSupersingular;
            break;
        }

        move_singular_point(m, total, l);
        inv = invariants_of(m);

        if (vco(inv.b2, l) == 0) {
            // multiplicative: I_n, split iff T^2 + a1 T - a2 has a root in F_l
            out.kodaira = {Kodaira::Family::In, static_cast<int>(n)};
            bool split = (l == 2) ? residue(m.a2, 2) == 0
                                  : legendre_long(residue(inv.b2, l), l) == 1;
            out.cls = split ? ReductionClass::MultSplit : ReductionClass::MultNonsplit;
            out.tamagawa = split ? n : (n % 2 == 0 ? 2 : 1);
            break;
        }

        out.cls = ReductionClass::Additive;

        if (vco(m.a6, l) < 2) {
            out.kodaira = {Kodaira::Family::II};
            out.tamagawa = 1;
            break;
        }
        if (vco(inv.b8, l) < 3) {
            out.kodaira = {Kodaira::Family::III};
            out.tamagawa = 2;
            break;
        }
        if (vco(inv.b6, l) < 3) {
            // IV: Y^2 + (a3/l) Y - (a6/l^2), discriminant b6/l^2 (a unit here)
            out.kodaira = {Kodaira::Family::IV};
            bool rational = (l == 2) ? residue(m.a6 / 4, 2) == 0
                                     : legendre_long(residue(inv.b6 / (l * l), l), l) == 1;
            out.tamagawa = rational ? 3 : 1;
            break;
        }

        // arrange v(a1) >= 1, v(a2) >= 1, v(a3) >= 2, v(a4) >= 2, v(a6) >= 3
        if (l == 2) {
            shift(m, total, 0, residue(m.a2, 2), 0);
            shift(m, total, 0, 0, 2 * residue(m.a6 / 4, 2));
        } else {
            shift(m, total, 0, -m.a1 / 2, -m.a3 / 2);
        }

        CubicRoots cr = analyse_cubic(residue(m.a2 / l, l), residue(m.a4 / (l * l), l),
                                      residue(m.a6 / Rat(Int(l) * l * l), l), l);

        if (cr.kind == CubicRoots::Separable) {
            out.kodaira = {Kodaira::Family::InStar, 0};
            out.tamagawa = 1 + cr.rational_count;
            break;
        }

        if (cr.kind == CubicRoots::DoubleRoot) {
            shift(m, total, l * cr.rho, 0, 0);
            // now v(a2) = 1, v(a3) >= 2, v(a4) >= 3, v(a6) >= 4
            Int mx = Int(l) * l, my = Int(l) * l;
            int idx = 1;
            while (true) {
                Rat xa3 = m.a3 / Rat(my), xa6 = m.a6 / Rat(mx * my);
                bool distinct = (l == 2) ? residue(xa3, 2) == 1
                                         : residue(xa3 * xa3 + 4 * xa6, l) != 0;
                if (distinct) {
                    bool rational =
                        (l == 2) ? residue(xa6, 2) == 0
                                 : legendre_long(residue(xa3 * xa3 + 4 * xa6, l), l) == 1;
                    out.tamagawa = rational ? 4 : 2;
                    break;
                }
                long rho_y = (l == 2) ? residue(xa6, 2)
                                      : (l - residue(xa3, l)) % l * mod_inv(2, l) % l;
                shift(m, total, 0, 0, Rat(my) * rho_y);
                my *= l;
                ++idx;

                Rat xa2 = m.a2 / l, xa4 = m.a4 / Rat(Int(l) * mx);
                xa6 = m.a6 / Rat(mx * my);
                distinct = (l == 2) ? residue(xa4, 2) == 1
                                    : residue(xa4 * xa4 - 4 * xa2 * xa6, l) != 0;
                if (distinct) {
                    bool rational =
                        (l == 2) ? residue(xa6, 2) == 0
                                 : legendre_long(residue(xa4 * xa4 - 4 * xa2 * xa6, l), l) == 1;
                    out.tamagawa = rational ? 4 : 2;
                    break;
                }
                long rho_x =
                    (l == 2) ? residue(xa6, 2)
                             : (l - residue(xa4, l)) % l * mod_inv(2 * residue(xa2, l) % l, l) % l;
                shift(m, total, Rat(mx) * rho_x, 0, 0);
                mx *= l;
                ++idx;
            }
            out.kodaira = {Kodaira::Family::InStar, idx};
            // v(Delta) = n + 6 for I_n* only without wild ramification
            if (l >= 5 && idx != n - 6)
                throw InternalError("I_n* index disagrees with the discriminant valuation");
            break;
        }

        // triple root
        shift(m, total, l * cr.rho, 0, 0);
        // now v(a2) >= 2, v(a3) >= 2, v(a4) >= 3, v(a6) >= 4
        {
            Int l2 = Int(l) * l, l4 = l2 * l2;
            Rat ya3 = m.a3 / Rat(l2), ya6 = m.a6 / Rat(l4);
            bool distinct = (l == 2) ? residue(ya3, 2) == 1
                                     : residue(ya3 * ya3 + 4 * ya6, l) != 0;
            if (distinct) {
                out.kodaira = {Kodaira::Family::IVStar};
                bool rational = (l == 2)
                                    ? residue(ya6, 2) == 0
                                    : legendre_long(residue(ya3 * ya3 + 4 * ya6, l), l) == 1;
                out.tamagawa = rational ? 3 : 1;
                break;
            }
            long rho_y = (l == 2) ? residue(ya6, 2)
                                  : (l - residue(ya3, l)) % l * mod_inv(2, l) % l;
            shift(m, total, 0, 0, Rat(l2) * rho_y);
        }
        if (vco(m.a4, l) < 4) {
            out.kodaira = {Kodaira::Family::IIIStar};
            out.tamagawa = 2;
            break;
        }
        if (vco(m.a6, l) < 6) {
            out.kodaira = {Kodaira::Family::IIStar};
            out.tamagawa = 1;
            break;
        }
        // non-minimal: divide each a_i by l^i and start over
        Transform f{Rat(l), Rat(0), Rat(0), Rat(0)};
        m = apply(m, f);
        total = compose(total, f);
    }

    out.minimal_model = m;
    out.to_minimal = total;
    out.scaling_u = total.u;
    out.v_delta_min = valuation(invariants_of(m).disc, l);
    return out;
}

bool is_split(const LocalReduction& r) {
    if (r.cls == ReductionClass::MultSplit) return true;
    if (r.cls == ReductionClass::MultNonsplit) return false;
    throw NotMultiplicative();
}

long tamagawa_ratio_ord(const LocalReduction& base, const LocalReduction& image, long p) {
    return valuation(Int(image.tamagawa), p) - valuation(Int(base.tamagawa), p);
}

} // namespace paritylab
