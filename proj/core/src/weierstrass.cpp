#include "paritylab/weierstrass.hpp"

namespace paritylab {

Invariants invariants(const Model& m) {
    Invariants i = invariants_of(m);
    if (i.disc == 0) throw SingularModel();
    return i;
}

Rat j_invariant(const Model& m) {
    Invariants i = invariants(m);
    return i.c4 * i.c4 * i.c4 / i.disc;
}

Model transform(const Model& m, const Rat& u, const Rat& r, const Rat& s, const Rat& t) {
    if (u == 0) throw ZeroScaling();
    return apply(m, Transform{u, r, s, t});
}

bool on_curve(const Model& m, const Rat& x, const Rat& y) {
    Rat lhs = y * y + m.a1 * x * y + m.a3 * y;
    Rat rhs = x * x * x + m.a2 * x * x + m.a4 * x + m.a6;
    return lhs == rhs;
}

Model completed_square(const Model& m) {
    return transform(m, 1, 0, -m.a1 / 2, -m.a3 / 2);
}

Model quadratic_twist(const Model& m, const Int& d0) {
    if (d0 == 0) throw ZeroTwist();
    Model cs = completed_square(m);
    Rat d(d0);
    return Model{0, d * cs.a2, 0, d * d * cs.a4, d * d * d * cs.a6};
}

} // namespace paritylab
