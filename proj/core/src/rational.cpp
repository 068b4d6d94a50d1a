#include "paritylab/rational.hpp"

#include <cstdlib>

namespace paritylab {

long valuation(const Int& x, long l) {
    if (x == 0) throw Error("valuation of zero");
    Int q, r, cur = abs(x);
    long v = 0;
    while (true) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), cur.get_mpz_t(), static_cast<unsigned long>(l));
        if (r != 0) break;
        cur = q;
        ++v;
    }
    return v;
}

long valuation(const Rat& x, long l) {
    return valuation(x.get_num(), l) - valuation(x.get_den(), l);
}

Rat unit_part(const Rat& x, long l) {
    long v = valuation(x, l);
    Rat p(l);
    Rat scale(1);
    for (long i = 0; i < std::labs(v); ++i) scale *= p;
    Rat out = v >= 0 ? Rat(x / scale) : Rat(x * scale);
    return out;
}

Int residue_mod(const Rat& x, const Int& m) {
    Int num = x.get_num() % m;
    if (num < 0) num += m;
    Int den = x.get_den() % m;
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("residue_mod: denominator not invertible");
    return (num * inv) % m;
}

long residue(const Rat& x, long l) {
    return residue_mod(x, Int(l)).get_si();
}

int legendre(const Int& a, long l) {
    Int p(l);
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

bool is_lsquare(const Rat& x, long l) {
    if (x == 0) throw ZeroArgument();
    long v = valuation(x, l);
    if (v % 2 != 0) return false;
    Rat u = unit_part(x, l);
    if (l == 2) return residue_mod(u, Int(8)) == 1;
    return legendre(residue_mod(u, Int(l)), l) == 1;
}

bool is_real_square(const Rat& x) { return sgn(x) > 0; }

Int squarefree_part(const Rat& x) {
    if (x == 0) throw ZeroArgument();
    // square class of num/den equals that of num*den
    Int n = x.get_num() * x.get_den();
    int sign = sgn(n) < 0 ? -1 : 1;
    n = abs(n);
    Int out = 1;
    for (Int d = 2; d * d <= n; ++d) {
        long e = 0;
        while (n % d == 0) { n /= d; ++e; }
        if (e % 2 != 0) out *= d;
    }
    out *= n; // leftover prime
    return sign * out;
}

std::vector<long> prime_factors(Int x) {
    std::vector<long> out;
    x = abs(x);
    if (x <= 1) return out;
    for (Int d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            out.push_back(d.get_si());
            while (x % d == 0) x /= d;
        }
    }
    if (x > 1) out.push_back(x.get_si());
    return out;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

} // namespace paritylab
