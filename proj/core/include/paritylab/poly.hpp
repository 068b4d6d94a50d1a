#pragma once

#include <vector>

#include "paritylab/rational.hpp"

namespace paritylab {

/// Dense univariate polynomial over Q, coefficient i is the x^i coefficient.
/// Just enough arithmetic for division polynomials, torsor analysis and the
/// symbolic isogeny identities in the tests.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rat& a) { return Poly({a}); }
    static Poly x() { return Poly({Rat(0), Rat(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const;
    Poly derivative() const;

    friend Poly operator+(const Poly&, const Poly&);
    friend Poly operator-(const Poly&, const Poly&);
    friend Poly operator*(const Poly&, const Poly&);
    friend Poly operator*(const Rat&, const Poly&);
    friend bool operator==(const Poly&, const Poly&);

    /// All rational roots (with multiplicity collapsed), via the rational
    /// root theorem on the cleared-denominator form.
    std::vector<Rat> rational_roots() const;

  private:
    void trim();
    std::vector<Rat> c_;
};

} // namespace paritylab
