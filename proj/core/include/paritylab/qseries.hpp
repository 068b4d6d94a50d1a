#pragma once

#include <string>
#include <vector>

#include "paritylab/rational.hpp"

namespace paritylab {

/// Truncated power series in q over Q. A series carries a truncation order:
/// coefficients of q^0 .. q^{order-1} are known. Constants and polynomials
/// built from int/Rat literals are "exact" (order = EXACT), so they combine
/// with any truncated series without losing precision; binary operations
/// truncate to the smaller order.
class QSeries {
  public:
    static constexpr int EXACT = 1 << 20;

    QSeries() : ord_(EXACT) {}
    QSeries(int constant) : ord_(EXACT), c_{Rat(constant)} {}
    QSeries(const Rat& constant) : ord_(EXACT), c_{constant} {}
    QSeries(int order, std::vector<Rat> coeffs) : ord_(order), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) > ord_) c_.resize(ord_);
    }

    static QSeries zero(int order) { return QSeries(order, {}); }

    int order() const { return ord_; }
    bool exact() const { return ord_ == EXACT; }

    /// Coefficient of q^n; throws Error past the truncation order.
    Rat coeff(int n) const;

    /// Same series with the truncation order lowered (or, for exact series,
    /// set) to `order`.
    QSeries truncated(int order) const;

    friend QSeries operator+(const QSeries&, const QSeries&);
    friend QSeries operator-(const QSeries&, const QSeries&);
    friend QSeries operator*(const QSeries&, const QSeries&);
    /// a * b.inverse(); see inverse() for the restrictions.
    friend QSeries operator/(const QSeries&, const QSeries&);

    /// Equal as truncated series: same coefficients up to the smaller order.
    friend bool operator==(const QSeries&, const QSeries&);

    QSeries operator-() const;

    /// Multiplicative inverse. The constant term must be nonzero; an exact
    /// series must be a plain constant (anything longer has no exact inverse).
    QSeries inverse() const;

    /// Square root with constant term chosen rational (Newton iteration);
    /// throws Error if the constant term is not a nonzero rational square.
    QSeries sqrt() const;

    /// All known coefficients integral?
    bool is_integral() const;

    std::string str() const;

  private:
    int ord_;
    std::vector<Rat> c_; // dense; indices >= c_.size() (but < ord_) are zero
};

QSeries qpow(const QSeries&, int k);

/// The exact monomial q^k.
QSeries qmonomial(int k);

} // namespace paritylab
