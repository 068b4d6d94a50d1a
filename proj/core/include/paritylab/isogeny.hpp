#pragma once

#include <optional>

#include "paritylab/poly.hpp"
#include "paritylab/weierstrass.hpp"

namespace paritylab {

/// The two-parameter family E: y^2 = x^3 + a x^2 + b x with its 2-isogenous
/// curve E': y^2 = x^3 - 2a x^2 + (a^2 - 4b) x and the degree-2 map between
/// them, kernel {O, (0,0)}.
struct TwoIsogenyPair {
    Rat a, b, delta; // delta = a^2 - 4b
    Model curve;     // E
    Model image;     // E'
};

TwoIsogenyPair two_isogeny_pair(const Rat& a, const Rat& b); // throws DegenerateFamily

/// The isogeny applied to a point of E with x != 0.
std::pair<Rat, Rat> two_isogeny_map(const TwoIsogenyPair&, const Rat& x, const Rat& y);

/// A rational 3-isogeny with kernel x-coordinate x0 on the completed-square
/// form y^2 = f(x) of the base model. d = f(x0) generates the kernel field.
struct ThreeIsogenyData {
    Model base;   // completed-square model of the input
    Rat kernel_x; // x0
    Rat d;        // f(x0)
    Int d_class;  // signed squarefree representative of d
    Model image;  // Velu image, isogeny normalized to pull back dx/y to dx/y
};

/// psi_3 = 3x^4 + b2 x^3 + 3 b4 x^2 + 3 b6 x + b8.
Poly division_poly_3(const Model&); // throws SingularModel

ThreeIsogenyData three_isogeny(const Model&, const Rat& x0); // throws NotAKernel

/// Scale factor u of the isomorphism identifying the Velu image of the dual
/// kernel on `image` with `base` again; |u| = 3^{\pm 1} when the composite of
/// the isogeny with its dual is multiplication by 3. Returns nullopt when no
/// rational dual kernel closes the loop (should not happen).
std::optional<Rat> dual_composition_scale(const ThreeIsogenyData&);

} // namespace paritylab
