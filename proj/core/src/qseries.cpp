#include "paritylab/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace paritylab {

Rat QSeries::coeff(int n) const {
    if (n < 0 || n >= ord_) throw Error("coefficient past truncation order");
    if (n >= static_cast<int>(c_.size())) return Rat(0);
    return c_[n];
}

QSeries QSeries::truncated(int order) const {
    QSeries r = *this;
    r.ord_ = std::min(ord_, order);
    if (static_cast<int>(r.c_.size()) > r.ord_) r.c_.resize(r.ord_);
    return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r;
    r.ord_ = std::min(a.ord_, b.ord_);
    size_t n = std::min<size_t>(std::max(a.c_.size(), b.c_.size()), r.ord_);
    r.c_.resize(n, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        if (i < a.c_.size()) r.c_[i] += a.c_[i];
        if (i < b.c_.size()) r.c_[i] += b.c_[i];
    }
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries QSeries::operator-() const {
    QSeries r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries r;
    r.ord_ = std::min(a.ord_, b.ord_);
    if (a.c_.empty() || b.c_.empty()) return r;
    size_t n = std::min<size_t>(a.c_.size() + b.c_.size() - 1, r.ord_);
    r.c_.assign(n, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size() && i + j < n; ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }

bool operator==(const QSeries& a, const QSeries& b) {
    int n = std::min(a.ord_, b.ord_);
    if (n == QSeries::EXACT) n = static_cast<int>(std::max(a.c_.size(), b.c_.size()));
    for (int i = 0; i < n; ++i)
        if (a.coeff(i) != b.coeff(i)) return false;
    return true;
}

QSeries QSeries::inverse() const {
    if (coeff(0) == 0) throw Error("inverse of a series with zero constant term");
    if (exact()) {
        if (c_.size() > 1) throw Error("exact non-constant series has no exact inverse");
        return QSeries(Rat(1) / c_[0]);
    }
    QSeries r;
    r.ord_ = ord_;
    r.c_.assign(ord_, Rat(0));
    r.c_[0] = Rat(1) / coeff(0);
    for (int n = 1; n < ord_; ++n) {
        Rat s(0);
        for (int k = 1; k <= n; ++k) s += coeff(k) * r.c_[n - k];
        r.c_[n] = -s / coeff(0);
    }
    return r;
}

QSeries QSeries::sqrt() const {
    Rat c0 = coeff(0);
    if (c0 == 0) throw Error("sqrt of a series with zero constant term");
    Int num = c0.get_num(), den = c0.get_den();
    if (sgn(c0) < 0 || !mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
        throw Error("constant term is not a rational square");
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    if (exact() && c_.size() > 1) throw Error("sqrt of an exact non-constant series");
    QSeries r(Rat(rn, rd));
    if (exact()) return r;
    r = r.truncated(ord_);
    QSeries half(Rat(1, 2));
    QSeries x = truncated(ord_);
    // Newton: r <- (r + x / r) / 2, doubling precision each step
    for (int it = 0; it < ord_ + 2; ++it) {
        QSeries next = half * (r + x / r);
        if (next == r) return r;
        r = next;
    }
    return r;
}

bool QSeries::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x.get_den() == 1; });
}

std::string QSeries::str() const {
    std::ostringstream os;
    bool first = true;
    size_t n = std::min<size_t>(c_.size(), ord_);
    for (size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i].get_str() << "*q^" << i;
        first = false;
    }
    if (first) os << "0";
    if (!exact()) os << " + O(q^" << ord_ << ")";
    return os.str();
}

QSeries qpow(const QSeries& a, int k) {
    QSeries r(1);
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
}

QSeries qmonomial(int k) {
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = 1;
    return QSeries(QSeries::EXACT, std::move(c));
}

} // namespace paritylab
