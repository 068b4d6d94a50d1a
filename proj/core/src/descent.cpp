#include "paritylab/descent.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace paritylab {

namespace {

Int as_int(const Rat& x, const char* what) {
    if (x.get_den() != 1) throw Error(std::string(what) + " is not an integer");
    return x.get_num();
}

bool is_rational_square(const Rat& x) {
    if (sgn(x) < 0) return false;
    Int n = x.get_num(), d = x.get_den();
    return mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t());
}

// Does c0 + c2 t^2 + c4 t^4 take a square value for some t in t0 + l^k Z_l?
// The quartic has simple roots, so every undecided branch eventually hits
// either a stable square class or the Hensel-root criterion.
bool branch_solvable(const std::array<Int, 3>& c, long l, const Int& t0, long k,
                     long prec) {
    Int t2 = t0 * t0;
    Int g = c[0] + t2 * (c[1] + t2 * c[2]);
    if (g == 0) return true;
    long e = valuation(g, l);
    long stable = (l == 2) ? k - 3 : k - 1;
    if (e <= stable) return is_lsquare(Rat(g), l);
    Int gp = t0 * (2 * c[1] + 4 * t2 * c[2]);
    if (gp != 0 && e > 2 * valuation(gp, l)) return true; // Hensel root: g hits 0
    if (k >= prec)
        throw PrecisionExhausted("quartic solvability undecided at depth " +
                                 std::to_string(k));
    Int step(1);
    for (long i = 0; i < k; ++i) step *= l;
    for (long s = 0; s < l; ++s)
        if (branch_solvable(c, l, t0 + s * step, k + 1, prec)) return true;
    return false;
}

} // namespace

Torsor make_torsor(const TwoIsogenyPair& pair, Direction dir, const Int& d) {
    if (d == 0 || squarefree_part(Rat(d)) != d) throw Error("torsor class must be squarefree");
    Torsor t;
    t.d = d;
    if (dir == Direction::Phi) {
        if (!mpz_divisible_p(as_int(pair.b, "b").get_mpz_t(), d.get_mpz_t()))
            throw Error("torsor class does not divide b");
        t.A = pair.a;
        t.B = pair.b / Rat(d);
    } else {
        if (!mpz_divisible_p(as_int(pair.delta, "delta").get_mpz_t(), d.get_mpz_t()))
            throw Error("torsor class does not divide delta");
        t.A = -2 * pair.a;
        t.B = pair.delta / Rat(d);
    }
    return t;
}

bool local_solvable(const Torsor& t, const Place& v, long precision) {
    Rat dr(t.d);
    if (!v.finite) {
        if (sgn(dr) > 0 || sgn(t.B) > 0) return true;
        return sgn(t.A) > 0 && sgn(t.A * t.A - 4 * dr * t.B) > 0;
    }
    long l = v.l;
    Int A = as_int(t.A, "A"), B = as_int(t.B, "B");
    // chart v = 1: d t^4 + A t^2 + B over Z_l; chart u = 1: the reciprocal
    // quartic over l Z_l
    if (branch_solvable({B, A, t.d}, l, Int(0), 0, precision)) return true;
    return branch_solvable({t.d, A, B}, l, Int(0), 1, precision);
}

std::vector<Rat> point_search_x(const Model& m, long height_bound) {
    std::vector<Rat> xs;
    for (long e = 1; e * e <= height_bound; ++e) {
        if (e > 6) break;
        for (long num = -height_bound; num <= height_bound; ++num) {
            if (std::gcd(std::abs(num), e) != 1) continue;
            Rat x(num, e * e);
            x.canonicalize();
            Rat val = ((x + m.a2) * x + m.a4) * x + m.a6;
            if (m.a1 != 0 || m.a3 != 0) throw Error("point search expects a1 = a3 = 0");
            if (is_rational_square(val)) xs.push_back(x);
        }
    }
    return xs;
}

SelmerGroup selmer_group(const TwoIsogenyPair& pair, Direction dir) {
    Int target = as_int(dir == Direction::Phi ? pair.b : pair.delta, "coefficient");
    Int bd = as_int(pair.b, "b") * as_int(pair.delta, "delta");

    std::vector<long> primes = prime_factors(target);
    std::vector<long> support = prime_factors(2 * bd);
    std::sort(support.begin(), support.end());
    long guard = 1009;
    while (!is_prime(guard) ||
           std::find(support.begin(), support.end(), guard) != support.end())
        ++guard;

    std::vector<Int> classes;
    size_t nd = size_t(1) << primes.size();
    for (int sign = 1; sign >= -1; sign -= 2) {
        for (size_t mask = 0; mask < nd; ++mask) {
            Int d(sign);
            for (size_t i = 0; i < primes.size(); ++i)
                if (mask & (size_t(1) << i)) d *= primes[i];
            Torsor t = make_torsor(pair, dir, d);
            if (!local_solvable(t, Place::real(), 0)) continue;
            bool ok = true;
            std::vector<long> places = support;
            places.push_back(guard);
            for (long l : places) {
                long prec = std::max<long>(2 * valuation(Rat(16 * bd), l) + 3, 3);
                bool solv = false;
                for (int attempt = 0;; ++attempt) {
                    try {
                        solv = local_solvable(t, Place::at(l), prec);
                        break;
                    } catch (const PrecisionExhausted&) {
                        if (attempt >= 3) throw;
                        prec *= 2;
                    }
                }
                if (!solv) {
                    ok = false;
                    break;
                }
            }
            if (ok) classes.push_back(d);
        }
    }

    SelmerGroup g;
    g.direction = dir;
    std::sort(classes.begin(), classes.end());
    g.classes = classes;

    // must be a subgroup of Q*/squares
    auto has = [&](const Int& d) {
        return std::binary_search(classes.begin(), classes.end(), d);
    };
    if (!has(Int(1))) throw InternalError("Selmer set misses the identity class");
    for (const Int& d1 : classes)
        for (const Int& d2 : classes)
            if (!has(squarefree_part(Rat(d1 * d2))))
                throw InternalError("Selmer set is not closed under multiplication");
    if (!has(squarefree_part(Rat(target))))
        throw InternalError("Selmer set misses the 2-torsion class");

    // soundness against rational points on the corresponding curve
    const Model& src = (dir == Direction::Phi) ? pair.curve : pair.image;
    for (const Rat& x : point_search_x(src, 1000))
        if (x != 0 && !has(squarefree_part(x)))
            throw InternalError("rational point class outside the Selmer set");

    size_t n = classes.size();
    int dim = 0;
    while ((size_t(1) << dim) < n) ++dim;
    if ((size_t(1) << dim) != n) throw InternalError("Selmer set size is not a 2-power");
    g.dimension = dim;
    return g;
}

int parity_oracle(const TwoIsogenyPair& pair) {
    int dphi = selmer_group(pair, Direction::Phi).dimension;
    int dphihat = selmer_group(pair, Direction::PhiHat).dimension;
    return (dphihat - dphi) % 2 ? -1 : 1;
}

} // namespace paritylab
