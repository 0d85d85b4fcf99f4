#pragma once

#include <vector>

#include "fusion/mpoly.hpp"
#include "fusion/rational.hpp"

namespace fusion {

/// Dense univariate polynomial over Q, coefficient index = degree.
/// The top coefficient is nonzero unless the polynomial is zero.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);

    static UPoly zero() { return UPoly(); }
    static UPoly constant(const Rational& c) { return UPoly({c}); }
    static UPoly monomial(int degree, const Rational& c);
    /// Expansion of (-t)^e.
    static UPoly neg_t_power(int e) { return monomial(e, Rational(e % 2 == 0 ? 1 : -1)); }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly scaled(const Rational& c) const;
    UPoly derivative() const;
    /// Multiply by t.
    UPoly shift_up() const;

    Rational evaluate(const Rational& x) const;
    /// Horner substitution of a multivariate argument for t.
    MPoly evaluate(const MPoly& arg) const;

    /// The polynomial G with G(0) = 0 and G'(t) = (f(t) - f(0))/t,
    /// i.e. G = sum_{i>=1} f_i t^i / i.
    UPoly antiderivative_shifted() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace fusion
