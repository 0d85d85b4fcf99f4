#include "fusion/mpoly.hpp"

#include <algorithm>

namespace fusion {

bool grevlex_less(const ExpVec& a, const ExpVec& b) {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

MPoly MPoly::constant(int nvars, const Rational& c) {
    MPoly p(nvars);
    p.add_term(ExpVec(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(int nvars, int index, int exponent) {
    if (index < 0 || index >= nvars) throw StructuralError("MPoly: variable index out of range");
    MPoly p(nvars);
    ExpVec e(nvars, 0);
    e[index] = exponent;
    p.add_term(e, Rational(1));
    return p;
}

MPoly MPoly::monomial(const ExpVec& e, const Rational& c) {
    MPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0 &&
           *std::min_element(terms_.begin()->first.begin(), terms_.begin()->first.end()) == 0 &&
           *std::max_element(terms_.begin()->first.begin(), terms_.begin()->first.end()) == 0;
}

const std::pair<const ExpVec, Rational>& MPoly::leading() const {
    if (terms_.empty()) throw DomainError("MPoly: leading term of zero");
    return *terms_.begin();
}

long MPoly::degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

Rational MPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MPoly::constant_coeff() const {
    return coeff(ExpVec(nvars_, 0));
}

void MPoly::check_same_ring(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw StructuralError("MPoly: variable-count mismatch");
}

void MPoly::add_term(const ExpVec& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw StructuralError("MPoly: exponent length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_same_ring(b);
    MPoly r(a.nvars_);
    ExpVec e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::scaled(const Rational& c) const {
    MPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

MPoly MPoly::mul_monomial(const ExpVec& m, const Rational& c) const {
    if (static_cast<int>(m.size()) != nvars_) throw StructuralError("MPoly: exponent length mismatch");
    MPoly r(nvars_);
    if (c.is_zero()) return r;
    ExpVec e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + m[i];
        r.terms_.emplace(e, ca * c);
    }
    return r;
}

MPoly MPoly::pow(long k) const {
    if (k < 0) throw DomainError("MPoly: negative power");
    MPoly acc = constant(nvars_, Rational(1));
    MPoly base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        if (k >>= 1) base = base * base;
    }
    return acc;
}

MPoly MPoly::exact_div(const MPoly& b) const {
    check_same_ring(b);
    if (b.is_zero()) throw DomainError("MPoly: division by zero polynomial");
    MPoly q(nvars_);
    MPoly r = *this;
    const auto& [lb, cb] = b.leading();
    while (!r.is_zero()) {
        const auto& [lr, cr] = r.leading();
        ExpVec e(nvars_);
        bool divides = true;
        for (int i = 0; i < nvars_; ++i) {
            e[i] = lr[i] - lb[i];
            if (e[i] < 0) { divides = false; break; }
        }
        if (!divides) throw NotDivisible("MPoly: remainder nonzero, leading " + std::to_string(r.term_count()) + " terms");
        Rational c = cr / cb;
        q.add_term(e, c);
        r -= b.mul_monomial(e, c);
    }
    return q;
}

MPoly MPoly::substitute(const std::vector<MPoly>& args) const {
    if (static_cast<int>(args.size()) != nvars_) throw StructuralError("MPoly: substitution arity mismatch");
    int out_vars = args.empty() ? 0 : args[0].nvars();
    for (const auto& a : args)
        if (a.nvars() != out_vars) throw StructuralError("MPoly: substitution rings differ");
    MPoly r(out_vars);
    for (const auto& [e, c] : terms_) {
        MPoly term = MPoly::constant(out_vars, c);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] < 0) throw DomainError("MPoly: negative exponent in substitution");
            if (e[i] > 0) term = term * args[i].pow(e[i]);
        }
        r += term;
    }
    return r;
}

Rational MPoly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw StructuralError("MPoly: evaluation arity mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) t *= point[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

MPoly MPoly::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw StructuralError("MPoly: derivative index out of range");
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec f = e;
        f[var] -= 1;
        r.add_term(f, c * Rational(e[var]));
    }
    return r;
}

MPoly MPoly::permute_variables(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != nvars_) throw StructuralError("MPoly: permutation size mismatch");
    MPoly r(nvars_);
    ExpVec f(nvars_);
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < nvars_; ++i) f[perm[i]] = e[i];
        r.add_term(f, c);
    }
    return r;
}

MPoly MPoly::primitive_part() const {
    if (is_zero()) return *this;
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    }
    Rational content(mpq_class(num_gcd, den_lcm));
    if (leading().second.sign() < 0) content = -content;
    return scaled(content.inverse());
}

MPoly MPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().second.inverse());
}

}  // namespace fusion
