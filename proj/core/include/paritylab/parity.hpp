#pragma once

#include <string>
#include <vector>

#include "paritylab/isogeny.hpp"
#include "paritylab/symbols.hpp"
#include "paritylab/tate.hpp"

namespace paritylab {

/// A degree-p isogeny pinned down far enough to run every local computation:
/// the two models carry the normalized isogeny (pullback of dx/y is dx/y).
struct IsogenyContext {
    int p = 2;          // isogeny degree, 2 or 3
    Model curve, image; // E and E'
    // p = 2: the family invariants of E: y^2 = x^3 + a x^2 + b x
    Rat a, b, delta;
    // p = 3: d = f(x0), so the kernel field is Q(sqrt(d))
    Rat d;
};

IsogenyContext context_of(const TwoIsogenyPair&);
IsogenyContext context_of(const ThreeIsogenyData&);

struct LocalParityReport {
    Place place;
    int w = 0;
    std::string w_path;       // "theorem" | "table" | "archimedean"
    int sigma = 0;
    long c_ratio_ord = 0;     // ord_p c(E')/c(E)
    long alpha_val = 0;       // v_l(alpha); 0 away from p and at the real place
    int artin = 1;            // (-1, Q_{v,phi}/Q_v)
    int delta_factor = 1;
    int hilbert_pair = 1;     // (a,-b)_v (-2a,delta)_v; p = 2 contexts only
    bool identity_holds = false;
    bool formula_defined_w = false;
    bool single_path_sigma = false;
    bool hypothesis_ok = true; // p = 2 at l = 2: good-ordinary or multiplicative
    std::string kodaira;       // finite places
    std::string cls;           // finite places
};

/// Scalings u, w (powers of l) take E', E to their l-minimal models;
/// returns v_l(u/w). Away from p this is 0 (checked by tests, not assumed).
long alpha_valuation(const IsogenyContext&, long l);

/// w(E/Q_v) with the path that produced it. For additive places the value
/// comes from reduction-type tables; in the p = 3 context at l >= 5 both
/// available paths are compared (PathDisagreement on mismatch). Throws
/// HypothesisViolated where no path defines w (additive/supersingular at 2
/// for p = 2, additive at 3 for p = 3).
struct RootNumber {
    int w;
    std::string path;
    bool formula_defined = false;
};
RootNumber root_number(const IsogenyContext&, const Place&);

/// sigma_phi(E/Q_v) from the Tamagawa-ratio / alpha formula at finite places
/// and the connected-component analysis at the real place.
int sigma_local(const IsogenyContext&, const Place&);

/// sigma_phi from the p >= 3 case table. Additive at l = p is out of cases.
int sigma_theorem(const Place&, ReductionClass, int artin, int delta_factor, int p);

/// Full per-place report; identity_holds is w == artin*sigma (p = 3) or
/// w == sigma * hilbert_pair (p = 2). For p = 2 at l = 2 outside the
/// good-ordinary/multiplicative hypothesis, no w is defined: the report has
/// hypothesis_ok = false, w = 0 and identity_holds = true vacuously.
LocalParityReport check_identity(const IsogenyContext&, const Place&);

struct GlobalReport {
    std::vector<LocalParityReport> places; // real place first, then support primes
    std::vector<long> support;
    std::vector<long> spot_check; // random primes outside the support
    bool w_complete = false;      // w was defined at every support place
    int W = 0;                    // product of w where complete, else 0
    int S = 1;                    // product of sigma
    int corollary = 0;            // p = 3 closed-form prediction for W
    int artin_product = 1;
    int hilbert_pair_product = 1;
    bool pass = false;
    std::vector<Place> failures;
};

/// Runs check_identity at the real place and every prime dividing
/// 2 p Delta(E) Delta(E'), verifies W = S (where W is defined), the p = 3
/// closed formula, the symbol product formulas, and triviality of all
/// factors at `spot_checks` random primes outside the support.
GlobalReport global_check(const IsogenyContext&, unsigned long seed, int spot_checks = 5);

std::vector<long> support_primes(const IsogenyContext&);

} // namespace paritylab
