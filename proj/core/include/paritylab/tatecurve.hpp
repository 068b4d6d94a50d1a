#pragma once

#include <utility>

#include "paritylab/qseries.hpp"
#include "paritylab/weierstrass.hpp"

namespace paritylab {

/// Which 2-torsion point of the uniformized curve: u = -1 on E_q, or
/// u = +-sqrt(q), handled by working with u = q on the base curve E_{q^2}.
enum class TorsionCase { uMinusOne, uSqrtQ };

/// s_k(q) = sum_{n>=1} n^k q^n / (1 - q^n); coefficient of q^n is sigma_k(n).
QSeries sigma_power_series(int k, int order);

/// a4(q) = -5 s_3(q).
QSeries a4_series(int order);

/// a6(q) = -(5 s_3(q) + 7 s_5(q)) / 12; the division must be exact, else
/// NonIntegralCoefficient.
QSeries a6_series(int order);

/// Uniformized split multiplicative curve y^2 + xy = x^3 + a4(q) x + a6(q).
ModelT<QSeries> tate_model(int order);

/// Coordinates (X, Y) of the chosen 2-torsion point; on this model a
/// 2-torsion point satisfies 2Y + X = 0, so Y = -X/2.
std::pair<QSeries, QSeries> two_torsion_series(TorsionCase, int order);

/// The model y^2 = x^3 + a x^2 + b x with the 2-torsion point moved to the
/// origin, and delta = a^2 - 4b.
struct TateFamilyData {
    QSeries X; // 2-torsion x-coordinate on the uniformized model
    QSeries a, b, delta;
};

TateFamilyData tate_family_model(TorsionCase, int order);

/// End-to-end series identity for the u = -1 case: move 2-torsion to the
/// origin, pass to the 2-isogenous curve y^2 = x^3 - 2a x^2 + delta x, and
/// substitute x -> 4x + 2X + 1/2, y -> 8y + 4x. The result must again be
/// uniformized: y^2 + xy = x^3 + (-5q^2 + O(q^4)) x + (-q^2 + O(q^4)) with
/// integral coefficients. Throws MismatchAtDegree on the first failure.
struct TateIsogenyCheck {
    ModelT<QSeries> dagger;
    QSeries a4_dagger, a6_dagger;
};

TateIsogenyCheck isogenous_tate_check(int order);

} // namespace paritylab
