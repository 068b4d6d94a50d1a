#include "paritylab/parity.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace paritylab {

IsogenyContext context_of(const TwoIsogenyPair& p) {
    IsogenyContext c;
    c.p = 2;
    c.curve = p.curve;
    c.image = p.image;
    c.a = p.a;
    c.b = p.b;
    c.delta = p.delta;
    return c;
}

IsogenyContext context_of(const ThreeIsogenyData& t) {
    IsogenyContext c;
    c.p = 3;
    c.curve = t.base;
    c.image = t.image;
    c.d = t.d;
    return c;
}

namespace {

struct LocalData {
    LocalReduction base, image;
};

LocalData local_data(const IsogenyContext& ctx, long l) {
    return {tate_algorithm(ctx.curve, l), tate_algorithm(ctx.image, l)};
}

int artin_of(const IsogenyContext& ctx, const Place& v) {
    return ctx.p == 3 ? artin_quadratic(ctx.d, v) : 1;
}

int delta_of(const IsogenyContext& ctx, long l, const Kodaira& k) {
    if (ctx.p != 3) return 1;
    if (l % 3 == 1) return 1; // mu_3 in Q_l
    if (k.family == Kodaira::Family::IV || k.family == Kodaira::Family::IVStar) return -1;
    return 1;
}

int hilbert_pair_of(const IsogenyContext& ctx, const Place& v) {
    if (ctx.p != 2) return 1;
    return hilbert(ctx.a, -ctx.b, v) * hilbert(-2 * ctx.a, ctx.delta, v);
}

int additive_table_w(const IsogenyContext& ctx, long l, const LocalReduction& red) {
    Place v = Place::at(l);
    using F = Kodaira::Family;
    if (ctx.p == 2) {
        switch (red.kodaira.family) {
            case F::III:
            case F::IIIStar: return hilbert(Rat(-2), Rat(l), v);
            case F::InStar: return hilbert(Rat(-1), Rat(l), v);
            default:
                throw OutOfCases("Kodaira type " + red.kodaira.str() +
                                 " at " + std::to_string(l) +
                                 " outside the 2-torsion additive table");
        }
    }
    // 3-isogeny context, l >= 5
    if (red.kodaira.family == F::InStar && red.kodaira.n >= 1)
        return hilbert(Rat(-1), Rat(l), v); // potentially multiplicative: chi(-1)
    long e = 12 / std::gcd(12L, red.v_delta_min);
    switch (e) {
        case 2:
        case 6: return hilbert(Rat(-1), Rat(l), v);
        case 3: return hilbert(Rat(-3), Rat(l), v);
        case 4: return hilbert(Rat(-2), Rat(l), v);
        default:
            throw InternalError("additive model not minimal (e = " + std::to_string(e) + ")");
    }
}

} // namespace

long alpha_valuation(const IsogenyContext& ctx, long l) {
    LocalData ld = local_data(ctx, l);
    return valuation(ld.image.scaling_u, l) - valuation(ld.base.scaling_u, l);
}

RootNumber root_number(const IsogenyContext& ctx, const Place& v) {
    if (!v.finite) return {-1, "archimedean"};
    long l = v.l;
    LocalData ld = local_data(ctx, l);
    switch (ld.base.cls) {
        case ReductionClass::GoodOrdinary:
            return {1, "theorem"};
        case ReductionClass::GoodSupersingular:
            if (ctx.p == 2 && l == 2)
                throw HypothesisViolated("good supersingular reduction at 2");
            return {1, "theorem"};
        case ReductionClass::MultSplit:
            return {-1, "theorem"};
        case ReductionClass::MultNonsplit:
            return {1, "theorem"};
        case ReductionClass::Additive: break;
    }
    if (ctx.p == 2) {
        if (l == 2) throw HypothesisViolated("additive reduction at 2");
        return {additive_table_w(ctx, l, ld.base), "table"};
    }
    if (l == 3) throw HypothesisViolated("additive reduction at 3");
    int theorem_w = delta_of(ctx, l, ld.base.kodaira) * artin_of(ctx, v);
    if (l == 2) return {theorem_w, "theorem", true};
    int table_w = additive_table_w(ctx, l, ld.base);
    if (table_w != theorem_w)
        throw PathDisagreement("root number at " + std::to_string(l) + ": table " +
                               std::to_string(table_w) + " vs theorem " +
                               std::to_string(theorem_w));
    return {table_w, "table"};
}

int sigma_local(const IsogenyContext& ctx, const Place& v) {
    if (!v.finite) {
        if (ctx.p == 2) {
            if (sgn(ctx.b) < 0) return -1;     // E'(R) connected, phi onto, ker 2
            if (sgn(ctx.delta) < 0) return 1;  // E(R) connected, full 2-torsion on E'
            return sgn(ctx.a) > 0 ? -1 : 1;    // both disconnected: rightmost root
        }
        return sgn(ctx.d) > 0 ? -1 : 1; // kernel real iff d > 0, cokernel trivial
    }
    LocalData ld = local_data(ctx, v.l);
    long e = tamagawa_ratio_ord(ld.base, ld.image, ctx.p);
    if (v.l == ctx.p) e += alpha_valuation(ctx, v.l);
    return e % 2 ? -1 : 1;
}

int sigma_theorem(const Place& v, ReductionClass cls, int artin, int delta_factor, int p) {
    if (p < 3) throw OutOfCases("sigma case table requires p >= 3");
    if (!v.finite) return -artin;
    switch (cls) {
        case ReductionClass::GoodOrdinary:
        case ReductionClass::GoodSupersingular: return artin;
        case ReductionClass::MultSplit: return -artin;
        case ReductionClass::MultNonsplit: return artin;
        case ReductionClass::Additive:
            if (v.l == p) throw OutOfCases("additive reduction at p");
            return delta_factor;
    }
    throw InternalError("unhandled reduction class");
}

LocalParityReport check_identity(const IsogenyContext& ctx, const Place& v) {
    LocalParityReport r;
    r.place = v;
    r.artin = artin_of(ctx, v);
    r.hilbert_pair = hilbert_pair_of(ctx, v);
    r.single_path_sigma = (ctx.p == 2 && v.finite);

    ReductionClass cls = ReductionClass::GoodOrdinary;
    if (v.finite) {
        LocalData ld = local_data(ctx, v.l);
        cls = ld.base.cls;
        r.kodaira = ld.base.kodaira.str();
        r.cls = to_string(cls);
        r.c_ratio_ord = tamagawa_ratio_ord(ld.base, ld.image, ctx.p);
        if (v.l == ctx.p) r.alpha_val = alpha_valuation(ctx, v.l);
        r.delta_factor = delta_of(ctx, v.l, ld.base.kodaira);
    }

    r.sigma = sigma_local(ctx, v);

    if (ctx.p == 3 && !(v.finite && cls == ReductionClass::Additive && v.l == 3)) {
        int st = sigma_theorem(v, cls, r.artin, r.delta_factor, 3);
        if (st != r.sigma)
            throw PathDisagreement(
                "sigma at " + (v.finite ? std::to_string(v.l) : std::string("oo")) +
                ": formula " + std::to_string(r.sigma) + " vs table " + std::to_string(st));
    }

    try {
        RootNumber rn = root_number(ctx, v);
        r.w = rn.w;
        r.w_path = rn.path;
        r.formula_defined_w = rn.formula_defined;
    } catch (const HypothesisViolated&) {
        r.hypothesis_ok = false;
        r.w = 0;
        r.identity_holds = true; // vacuous: the theorem makes no claim here
        return r;
    }

    r.identity_holds = (ctx.p == 3) ? (r.w == r.artin * r.sigma)
                                    : (r.w == r.sigma * r.hilbert_pair);
    return r;
}

std::vector<long> support_primes(const IsogenyContext& ctx) {
    Rat d1 = invariants(ctx.curve).disc, d2 = invariants(ctx.image).disc;
    Int prod = Int(2) * ctx.p * d1.get_num() * d1.get_den() * d2.get_num() * d2.get_den();
    std::vector<long> ps = prime_factors(prod);
    std::sort(ps.begin(), ps.end());
    return ps;
}

GlobalReport global_check(const IsogenyContext& ctx, unsigned long seed, int spot_checks) {
    GlobalReport g;
    g.support = support_primes(ctx);

    g.places.push_back(check_identity(ctx, Place::real()));
    for (long l : g.support) g.places.push_back(check_identity(ctx, Place::at(l)));

    g.w_complete = true;
    int W = 1, S = 1, split_count = 0, additive_product = 1;
    for (const LocalParityReport& r : g.places) {
        S *= r.sigma;
        g.artin_product *= r.artin;
        g.hilbert_pair_product *= r.hilbert_pair;
        if (!r.hypothesis_ok)
            g.w_complete = false;
        else
            W *= r.w;
        if (r.cls == "split-multiplicative") ++split_count;
        if (r.cls == "additive") additive_product *= r.delta_factor * r.artin;
        if (!r.identity_holds) g.failures.push_back(r.place);
    }
    g.S = S;
    g.W = g.w_complete ? W : 0;
    if (ctx.p == 3)
        g.corollary = -1 * (split_count % 2 ? -1 : 1) * additive_product;

    // the support bound: everything is trivial at random primes outside it
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(5, 997);
    std::set<long> seen(g.support.begin(), g.support.end());
    while (static_cast<int>(g.spot_check.size()) < spot_checks) {
        long l = dist(rng) | 1;
        if (!is_prime(l) || seen.count(l)) continue;
        seen.insert(l);
        g.spot_check.push_back(l);
        LocalParityReport r = check_identity(ctx, Place::at(l));
        if (r.w != 1 || r.sigma != 1 || r.artin != 1 || r.hilbert_pair != 1 ||
            !r.identity_holds)
            throw IdentityViolation("nontrivial local factor at prime " +
                                    std::to_string(l) + " outside the support");
    }

    g.pass = g.failures.empty();
    if (g.w_complete && g.W != g.S) g.pass = false;
    if (ctx.p == 3 && g.w_complete && g.corollary != g.W) g.pass = false;
    if (ctx.p == 3 && g.artin_product != 1) g.pass = false;
    if (ctx.p == 2 && g.hilbert_pair_product != 1) g.pass = false;
    return g;
}

} // namespace paritylab
