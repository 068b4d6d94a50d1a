#pragma once

#include <vector>

#include "paritylab/isogeny.hpp"
#include "paritylab/symbols.hpp"

namespace paritylab {

/// Quartic torsor C_d: w^2 = d u^4 + A u^2 v^2 + B v^4 attached to a
/// squarefree signed divisor class d. For the phi direction on the pair
/// (a, b), (A, B) = (a, b/d); for the phihat direction, (A, B) = (-2a, delta/d).
struct Torsor {
    Int d;
    Rat A, B;
};

enum class Direction { Phi, PhiHat };

Torsor make_torsor(const TwoIsogenyPair&, Direction, const Int& d);

/// Is C_d solvable over the completion at `place`? Finite places search
/// residues to the given precision (throws PrecisionExhausted when the
/// branch structure is still undecided there); the real place is a sign
/// analysis.
bool local_solvable(const Torsor&, const Place&, long precision);

struct SelmerGroup {
    Direction direction;
    std::vector<Int> classes; // squarefree representatives, 1 first
    int dimension = 0;        // log2 of the size
};

/// d runs over signed squarefree divisors of b (phi) or delta (phihat);
/// keeps the everywhere-locally-solvable ones. Verifies group closure and
/// that x-coordinates of small rational points land in the group.
SelmerGroup selmer_group(const TwoIsogenyPair&, Direction);

/// Points (x, y) on y^2 = x^3 + a x^2 + b x with x = m/e^2 of small height.
std::vector<Rat> point_search_x(const Model&, long height_bound);

/// (-1)^(dim S^phihat - dim S^phi): the global Selmer parity that must equal
/// the product of the local terms sigma_phi over all places.
int parity_oracle(const TwoIsogenyPair&);

} // namespace paritylab
