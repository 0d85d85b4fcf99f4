#include "fusion/rational.hpp"

#include <functional>
#include <ostream>

namespace fusion {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const std::string& s) {
    if (v_.set_str(s, 10) != 0) throw std::invalid_argument("Rational: bad literal '" + s + "'");
    if (sgn(v_.get_den()) == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    mpq_class base = v_;
    if (e < 0) {
        if (is_zero()) throw std::domain_error("Rational: negative power of zero");
        base = mpq_class(1) / base;
        e = -e;
    }
    mpq_class acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return Rational(acc);
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::str_short() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return str();
}

std::size_t Rational::hash() const {
    std::hash<std::string> h;
    return h(str());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str_short();
}

}  // namespace fusion
