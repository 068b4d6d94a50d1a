#include "paritylab/tatecurve.hpp"

#include <vector>

namespace paritylab {

QSeries sigma_power_series(int k, int order) {
    std::vector<Rat> c(order, Rat(0));
    for (int n = 1; n < order; ++n) {
        Int nk(1);
        for (int i = 0; i < k; ++i) nk *= n;
        for (int m = n; m < order; m += n) c[m] += Rat(nk);
    }
    return QSeries(order, std::move(c));
}

QSeries a4_series(int order) { return QSeries(-5) * sigma_power_series(3, order); }

QSeries a6_series(int order) {
    QSeries num = QSeries(-5) * sigma_power_series(3, order) -
                  QSeries(7) * sigma_power_series(5, order);
    for (int n = 0; n < order; ++n) {
        Rat c = num.coeff(n) / 12;
        if (c.get_den() != 1)
            throw NonIntegralCoefficient("a6 coefficient of q^" + std::to_string(n) +
                                         " is not integral");
    }
    return num / QSeries(12);
}

ModelT<QSeries> tate_model(int order) {
    return {QSeries(1), QSeries(0), QSeries(0), a4_series(order), a6_series(order)};
}

std::pair<QSeries, QSeries> two_torsion_series(TorsionCase tc, int order) {
    std::vector<Rat> c(order, Rat(0));
    if (tc == TorsionCase::uMinusOne) {
        // -1/4 + sum_{n>=1} ( 2 sum_m m(-1)^m q^{nm} - 2 sum_m m q^{nm} )
        c[0] = Rat(-1, 4);
        for (int n = 1; n < order; ++n)
            for (int m = 1; n * m < order; ++m)
                if (m % 2) c[n * m] += Rat(-4) * m;
    } else {
        // X(q, q^2) as a series in q: the principal term and the n-sum pair
        // up into 2 sum_{k odd} m q^{km} - 2 sum_{k even} m q^{km}
        for (int k = 1; k < order; ++k)
            for (int m = 1; k * m < order; ++m)
                c[k * m] += Rat(k % 2 ? 2 : -2) * m;
    }
    QSeries X(order, std::move(c));
    return {X, QSeries(Rat(-1, 2)) * X};
}

TateFamilyData tate_family_model(TorsionCase tc, int order) {
    // E_{q^2} underlies the uSqrtQ case; its coefficient series in q are the
    // E_q series with q -> q^2, i.e. odd coefficients vanish.
    int base_order = (tc == TorsionCase::uSqrtQ) ? (order + 1) / 2 : order;
    QSeries a4 = a4_series(base_order), a6 = a6_series(base_order);
    if (tc == TorsionCase::uSqrtQ) {
        std::vector<Rat> c4(order, Rat(0)), c6(order, Rat(0));
        for (int n = 0; 2 * n < order; ++n) {
            c4[2 * n] = a4.coeff(n);
            c6[2 * n] = a6.coeff(n);
        }
        a4 = QSeries(order, std::move(c4));
        a6 = QSeries(order, std::move(c6));
    }
    ModelT<QSeries> eq{QSeries(1), QSeries(0), QSeries(0), a4, a6};

    TateFamilyData out;
    out.X = two_torsion_series(tc, order).first;

    // complete the square and move the 2-torsion point to the origin
    TransformT<QSeries> f{QSeries(1), out.X, QSeries(Rat(-1, 2)),
                          QSeries(Rat(-1, 2)) * out.X};
    ModelT<QSeries> fam = apply(eq, f);
    if (!(fam.a1 == QSeries(0)) || !(fam.a3 == QSeries(0)))
        throw InternalError("square completion left a cross term");
    if (!(fam.a6 == QSeries(0)))
        throw InternalError("2-torsion series is not a root of the cubic");
    out.a = fam.a2;
    out.b = fam.a4;
    out.delta = out.a * out.a - QSeries(4) * out.b;
    return out;
}

TateIsogenyCheck isogenous_tate_check(int order) {
    TateFamilyData fam = tate_family_model(TorsionCase::uMinusOne, order);
    ModelT<QSeries> eprime{QSeries(0), QSeries(-2) * fam.a, QSeries(0), fam.delta,
                           QSeries(0)};
    TransformT<QSeries> sub{QSeries(2),
                            QSeries(Rat(1, 2)) + QSeries(2) * fam.X,
                            QSeries(1), QSeries(0)};
    TateIsogenyCheck out;
    out.dagger = apply(eprime, sub);
    out.a4_dagger = out.dagger.a4;
    out.a6_dagger = out.dagger.a6;

    if (!(out.dagger.a1 == QSeries(1)))
        throw MismatchAtDegree(0, "image a1 is not 1");
    if (!(out.dagger.a2 == QSeries(0)) || !(out.dagger.a3 == QSeries(0)))
        throw MismatchAtDegree(0, "image keeps a2 or a3 terms");

    auto expect = [&](const QSeries& s, int deg, const Rat& want, const char* which) {
        if (deg < order && s.coeff(deg) != want)
            throw MismatchAtDegree(deg, std::string(which) + " coefficient of q^" +
                                            std::to_string(deg) + " is " +
                                            s.coeff(deg).get_str() + ", expected " +
                                            want.get_str());
    };
    expect(out.a4_dagger, 0, Rat(0), "a4");
    expect(out.a4_dagger, 1, Rat(0), "a4");
    expect(out.a4_dagger, 2, Rat(-5), "a4");
    expect(out.a4_dagger, 3, Rat(0), "a4");
    expect(out.a6_dagger, 0, Rat(0), "a6");
    expect(out.a6_dagger, 1, Rat(0), "a6");
    expect(out.a6_dagger, 2, Rat(-1), "a6");
    expect(out.a6_dagger, 3, Rat(0), "a6");
    for (int n = 0; n < order; ++n) {
        if (out.a4_dagger.coeff(n).get_den() != 1)
            throw MismatchAtDegree(n, "a4 coefficient of q^" + std::to_string(n) +
                                          " is not integral");
        if (out.a6_dagger.coeff(n).get_den() != 1)
            throw MismatchAtDegree(n, "a6 coefficient of q^" + std::to_string(n) +
                                          " is not integral");
    }
    return out;
}

} // namespace paritylab
