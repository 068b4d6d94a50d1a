#include "paritylab/poly.hpp"

#include <algorithm>

namespace paritylab {

namespace {
const Rat kZero(0);

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> out;
    Int a = abs(n);
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
        }
    }
    return out;
}
} // namespace

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    std::vector<Rat> d;
    for (int i = 1; i < static_cast<int>(c_.size()); ++i) d.push_back(Rat(i) * c_[i]);
    return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

Poly operator*(const Rat& s, const Poly& p) {
    std::vector<Rat> c = p.c_;
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
}

bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

std::vector<Rat> Poly::rational_roots() const {
    std::vector<Rat> out;
    if (is_zero()) return out;
    // clear denominators
    Int lcm = 1;
    for (const auto& c : c_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> ic;
    for (const auto& c : c_) ic.push_back(Int(c * Rat(lcm)));
    int lo = 0;
    while (lo < static_cast<int>(ic.size()) && ic[lo] == 0) ++lo;
    if (lo > 0) out.push_back(Rat(0));
    Int lead = ic.back(), tail = ic[lo];
    for (const Int& p : divisors(tail)) {
        for (const Int& q : divisors(lead)) {
            for (int s : {1, -1}) {
                Rat cand(s * p, q);
                cand.canonicalize();
                if (eval(cand) == 0 &&
                    std::find(out.begin(), out.end(), cand) == out.end())
                    out.push_back(cand);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace paritylab
