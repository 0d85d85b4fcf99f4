#include "fusion/upoly.hpp"

namespace fusion {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

UPoly UPoly::monomial(int degree, const Rational& c) {
    if (c.is_zero()) return UPoly();
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[i];
}

UPoly UPoly::operator-() const {
    std::vector<Rational> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(-c);
    return UPoly(std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    return a + (-b);
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UPoly(std::move(v));
}

UPoly UPoly::scaled(const Rational& c) const {
    std::vector<Rational> v;
    v.reserve(coeffs_.size());
    for (const auto& k : coeffs_) v.push_back(k * c);
    return UPoly(std::move(v));
}

UPoly UPoly::derivative() const {
    if (coeffs_.size() <= 1) return UPoly();
    std::vector<Rational> v(coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return UPoly(std::move(v));
}

UPoly UPoly::shift_up() const {
    if (is_zero()) return UPoly();
    std::vector<Rational> v(coeffs_.size() + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + 1] = coeffs_[i];
    return UPoly(std::move(v));
}

Rational UPoly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

MPoly UPoly::evaluate(const MPoly& arg) const {
    MPoly acc = MPoly::zero(arg.nvars());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * arg + MPoly::constant(arg.nvars(), *it);
    return acc;
}

UPoly UPoly::antiderivative_shifted() const {
    std::vector<Rational> v(coeffs_.size(), Rational(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v[i] = coeffs_[i] / Rational(static_cast<long>(i));
    return UPoly(std::move(v));
}

}  // namespace fusion
