#include "paritylab/symbols.hpp"

namespace paritylab {

namespace {

// (u - 1)/2 mod 2 and (u^2 - 1)/8 mod 2 for a 2-adic unit u, from u mod 8.
int eps2(long u8) { return ((u8 - 1) / 2) % 2; }
int omega2(long u8) { return (u8 * u8 - 1) / 8 % 2; }

} // namespace

int hilbert(const Rat& x, const Rat& y, const Place& v) {
    if (x == 0 || y == 0) throw ZeroArgument();
    if (!v.finite) return (sgn(x) < 0 && sgn(y) < 0) ? -1 : 1;
    long l = v.l;
    if (!is_prime(l)) throw Error("hilbert: place is not prime");
    long a = valuation(x, l), b = valuation(y, l);
    Rat ux = unit_part(x, l), uy = unit_part(y, l);
    if (l == 2) {
        long u8x = residue_mod(ux, 8).get_si();
        long u8y = residue_mod(uy, 8).get_si();
        int e = eps2(u8x) * eps2(u8y) + a % 2 * omega2(u8y) + b % 2 * omega2(u8x);
        return e % 2 ? -1 : 1;
    }
    int sign = 1;
    if ((a % 2) && (b % 2) && ((l - 1) / 2) % 2) sign = -sign;
    if (b % 2) sign *= legendre(Int(residue(ux, l)), l);
    if (a % 2) sign *= legendre(Int(residue(uy, l)), l);
    return sign;
}

int artin_quadratic(const Rat& d, const Place& v) { return hilbert(d, Rat(-1), v); }

int cyclic_norm_minus_one(const LocalFieldDatum& dat) {
    if (dat.p < 2 || !is_prime(dat.p)) throw InconsistentDatum("p is not prime");
    if (dat.e_ram < 1 || dat.degree < 1 || dat.f_residue < 1)
        throw InconsistentDatum("degrees must be positive");
    if (dat.degree % dat.e_ram != 0)
        throw InconsistentDatum("ramification index does not divide the degree");
    if ((dat.p - 1) % dat.degree != 0)
        throw InconsistentDatum("degree does not divide p - 1");
    if (dat.f_residue % 2 == 0) return 1;
    return ((dat.p - 1) / dat.e_ram) % 2 == 0 ? 1 : -1;
}

} // namespace paritylab
