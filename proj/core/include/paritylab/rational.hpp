#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "paritylab/errors.hpp"

namespace paritylab {

using Int = mpz_class;
using Rat = mpq_class;

/// l-adic valuation of a nonzero integer / rational.
long valuation(const Int& x, long l);
long valuation(const Rat& x, long l);

/// x / l^v(x); numerator and denominator prime to l.
Rat unit_part(const Rat& x, long l);

/// Residue in [0, l) of an l-integral rational (denominator prime to l).
long residue(const Rat& x, long l);

/// Residue of an l-integral rational modulo an arbitrary modulus m > 0.
Int residue_mod(const Rat& x, const Int& m);

/// Legendre symbol (a | l), l an odd prime.
int legendre(const Int& a, long l);

/// Is x a square in Q_l? (x nonzero)
bool is_lsquare(const Rat& x, long l);

/// Is x a square in R? (i.e. x > 0; zero excluded)
bool is_real_square(const Rat& x);

/// Signed squarefree integer representing the square class of x in Q*.
Int squarefree_part(const Rat& x);

/// Distinct prime factors of |x| (trial division; x any size our corpora produce).
std::vector<long> prime_factors(Int x);

bool is_prime(long n);

/// Parse "num/den" or "num"; throws Error on garbage.
Rat rat_from_string(const std::string& s);

/// Canonical "num/den" encoding (denominator always present).
std::string rat_to_string(const Rat& x);

inline long sign_of(const Rat& x) { return sgn(x); }

} // namespace paritylab
