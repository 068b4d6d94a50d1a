#pragma once

#include "paritylab/rational.hpp"

namespace paritylab {

/// A place of Q: the real place or a finite prime l.
struct Place {
    bool finite = true;
    long l = 0;
    static Place real() { return {false, 0}; }
    static Place at(long l) { return {true, l}; }
    friend bool operator==(const Place&, const Place&) = default;
};

/// Hilbert symbol (x, y) at the place, values +-1. Throws ZeroArgument.
int hilbert(const Rat& x, const Rat& y, const Place& v);

/// Local Artin symbol of -1 in the quadratic extension Q_v(sqrt(d))/Q_v:
/// +1 iff -1 is a local norm from Q_v(sqrt(d)), i.e. (d, -1)_v.
int artin_quadratic(const Rat& d, const Place& v);

/// A degree-e subextension F' of the unramified-times-tame picture over a
/// local field F of residue characteristic p: F has residue field of size
/// p^f_residue, and F'/F is cyclic of degree `degree` with ramification
/// index e_ram.
struct LocalFieldDatum {
    long p = 0;
    long f_residue = 1; // [k_F : F_p]
    long e_ram = 1;     // e(F'/F)
    long degree = 1;    // [F' : F]
};

/// Whether -1 is a norm from the cyclic extension described by the datum:
/// +1 iff the residue degree f_residue is even or (p-1)/e_ram is even.
/// Throws InconsistentDatum unless e_ram | degree | p - 1.
int cyclic_norm_minus_one(const LocalFieldDatum&);

} // namespace paritylab
