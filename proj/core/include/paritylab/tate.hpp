#pragma once

#include <string>

#include "paritylab/weierstrass.hpp"

namespace paritylab {

enum class ReductionClass {
    GoodOrdinary,
    GoodSupersingular,
    MultSplit,
    MultNonsplit,
    Additive,
};

std::string to_string(ReductionClass);

struct Kodaira {
    enum class Family { In, InStar, II, III, IV, IVStar, IIIStar, IIStar };
    Family family = Family::In;
    int n = 0; // only meaningful for In / In*
    std::string str() const;
    friend bool operator==(const Kodaira&, const Kodaira&) = default;
};

inline bool is_good(const Kodaira& k) {
    return k.family == Kodaira::Family::In && k.n == 0;
}
inline bool is_multiplicative(const Kodaira& k) {
    return k.family == Kodaira::Family::In && k.n >= 1;
}

struct LocalReduction {
    long l = 0;
    Model minimal_model;
    Transform to_minimal; // apply(input, to_minimal) == minimal_model
    Rat scaling_u;        // the u of to_minimal (a power of l up to sign)
    Kodaira kodaira;
    long tamagawa = 1;
    long v_delta_min = 0;
    ReductionClass cls = ReductionClass::GoodOrdinary;
};

/// Tate's algorithm over Q at the prime l, run directly on valuations and
/// residues (no completion).
LocalReduction tate_algorithm(const Model& m, long l);

/// Split/nonsplit for a multiplicative LocalReduction; throws NotMultiplicative.
bool is_split(const LocalReduction&);

/// ord_p of c(image)/c(base).
long tamagawa_ratio_ord(const LocalReduction& base, const LocalReduction& image, long p);

} // namespace paritylab
