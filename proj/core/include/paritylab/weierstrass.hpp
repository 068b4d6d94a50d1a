#pragma once

#include "paritylab/rational.hpp"

namespace paritylab {

/// Long Weierstrass equation y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
/// over a commutative ring R (exact rationals, or truncated q-series).
template <typename R>
struct ModelT {
    R a1, a2, a3, a4, a6;
    friend bool operator==(const ModelT&, const ModelT&) = default;
};

template <typename R>
struct InvariantsT {
    R b2, b4, b6, b8, c4, c6, disc;
};

template <typename R>
InvariantsT<R> invariants_of(const ModelT<R>& m) {
    InvariantsT<R> i;
    i.b2 = m.a1 * m.a1 + R(4) * m.a2;
    i.b4 = R(2) * m.a4 + m.a1 * m.a3;
    i.b6 = m.a3 * m.a3 + R(4) * m.a6;
    i.b8 = m.a1 * m.a1 * m.a6 + R(4) * m.a2 * m.a6 - m.a1 * m.a3 * m.a4 +
           m.a2 * m.a3 * m.a3 - m.a4 * m.a4;
    i.c4 = i.b2 * i.b2 - R(24) * i.b4;
    i.c6 = R(-1) * i.b2 * i.b2 * i.b2 + R(36) * i.b2 * i.b4 - R(216) * i.b6;
    i.disc = R(-1) * i.b2 * i.b2 * i.b8 - R(8) * i.b4 * i.b4 * i.b4 -
             R(27) * i.b6 * i.b6 + R(9) * i.b2 * i.b4 * i.b6;
    return i;
}

/// Coordinate change x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
template <typename R>
struct TransformT {
    R u, r, s, t;
    static TransformT identity() { return {R(1), R(0), R(0), R(0)}; }
    friend bool operator==(const TransformT&, const TransformT&) = default;
};

/// Model of the curve in the primed coordinates. R must support exact
/// division by powers of the (invertible) scale u.
template <typename R>
ModelT<R> apply(const ModelT<R>& m, const TransformT<R>& f) {
    const R &u = f.u, &r = f.r, &s = f.s, &t = f.t;
    R u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    ModelT<R> n;
    n.a1 = (m.a1 + R(2) * s) / u;
    n.a2 = (m.a2 - s * m.a1 + R(3) * r - s * s) / u2;
    n.a3 = (m.a3 + r * m.a1 + R(2) * t) / u3;
    n.a4 = (m.a4 - s * m.a3 + R(2) * r * m.a2 - (t + r * s) * m.a1 + R(3) * r * r -
            R(2) * s * t) / u4;
    n.a6 = (m.a6 + r * m.a4 + r * r * m.a2 + r * r * r - t * m.a3 - t * t -
            r * t * m.a1) / u6;
    return n;
}

/// apply(m, compose(f, g)) == apply(apply(m, f), g)
template <typename R>
TransformT<R> compose(const TransformT<R>& f, const TransformT<R>& g) {
    TransformT<R> h;
    h.u = f.u * g.u;
    h.r = f.r + f.u * f.u * g.r;
    h.s = f.s + f.u * g.s;
    h.t = f.t + f.u * f.u * f.s * g.r + f.u * f.u * f.u * g.t;
    return h;
}

template <typename R>
TransformT<R> inverse_of(const TransformT<R>& f) {
    TransformT<R> g;
    R u2 = f.u * f.u;
    g.u = R(1) / f.u;
    g.r = R(-1) * f.r / u2;
    g.s = R(-1) * f.s / f.u;
    g.t = (f.r * f.s - f.t) / (u2 * f.u);
    return g;
}

using Model = ModelT<Rat>;
using Invariants = InvariantsT<Rat>;
using Transform = TransformT<Rat>;

/// Invariants with the nonsingularity check.
Invariants invariants(const Model& m); // throws SingularModel

Rat j_invariant(const Model& m); // throws SingularModel

/// Coordinate change with the u != 0 check.
Model transform(const Model& m, const Rat& u, const Rat& r, const Rat& s, const Rat& t);

/// (x, y) satisfies the curve equation.
bool on_curve(const Model& m, const Rat& x, const Rat& y);

/// Model with a1 = a3 = 0 (same x coordinate): y^2 = x^3 + b2/4 x^2 + b4/2 x + b6/4.
Model completed_square(const Model& m);

/// Quadratic twist by a nonzero squarefree integer d0; returns a completed-square
/// model with (A, B, C) -> (d0 A, d0^2 B, d0^3 C).
Model quadratic_twist(const Model& m, const Int& d0); // throws ZeroTwist

} // namespace paritylab
