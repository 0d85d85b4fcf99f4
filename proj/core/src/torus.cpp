#include "fusion/torus.hpp"

#include <algorithm>
#include <limits>

namespace fusion {

MPoly torus_canonical_poly(const MPoly& p, int rank) {
    if (p.nvars() != rank) throw StructuralError("TorusElem: variable count != rank");
    MPoly r(rank);
    ExpVec f(rank);
    for (const auto& [e, c] : p.terms()) {
        int m = *std::min_element(e.begin(), e.end());
        for (int i = 0; i < rank; ++i) f[i] = e[i] - m;
        r.add_term(f, c);
    }
    return r;
}

TorusElem::TorusElem(int rank, const MPoly& p) : rank_(rank), poly_(torus_canonical_poly(p, rank)) {}

TorusElem operator+(const TorusElem& a, const TorusElem& b) {
    if (a.rank_ != b.rank_) throw StructuralError("TorusElem: rank mismatch");
    return TorusElem(a.rank_, a.poly_ + b.poly_);
}

TorusElem operator-(const TorusElem& a, const TorusElem& b) {
    if (a.rank_ != b.rank_) throw StructuralError("TorusElem: rank mismatch");
    return TorusElem(a.rank_, a.poly_ - b.poly_);
}

TorusElem operator*(const TorusElem& a, const TorusElem& b) {
    if (a.rank_ != b.rank_) throw StructuralError("TorusElem: rank mismatch");
    return TorusElem(a.rank_, a.poly_ * b.poly_);
}

TorusElem TorusElem::pow(long k) const {
    if (k < 0) throw DomainError("TorusElem: negative power (use monomial inverses instead)");
    return TorusElem(rank_, poly_.pow(k));
}

namespace {

// Eliminate t_n via t_n = (t_1...t_{n-1})^{-1} and shift to a genuine
// polynomial in n-1 variables. Monomial factors are units in the Laurent
// ring; the applied shift is returned so callers can restore it.
std::pair<MPoly, ExpVec> laurent_reduce(const MPoly& p, int rank) {
    int m = rank - 1;
    std::vector<std::pair<ExpVec, Rational>> terms;
    ExpVec mins(m, std::numeric_limits<int>::max());
    for (const auto& [e, c] : p.terms()) {
        ExpVec f(m);
        for (int i = 0; i < m; ++i) {
            f[i] = e[i] - e[m];
            mins[i] = std::min(mins[i], f[i]);
        }
        terms.emplace_back(std::move(f), c);
    }
    MPoly r(m);
    for (auto& [f, c] : terms) {
        for (int i = 0; i < m; ++i) f[i] -= mins[i];
        r.add_term(f, c);
    }
    return {r, mins};
}

}  // namespace

TorusElem TorusElem::exact_div(const TorusElem& b) const {
    if (rank_ != b.rank_) throw StructuralError("TorusElem: rank mismatch");
    if (b.is_zero()) throw DomainError("TorusElem: division by zero");
    if (is_zero()) return zero(rank_);
    if (rank_ == 1) return one(1).scaled(poly_.constant_coeff() / b.poly_.constant_coeff());
    auto [ahat, amins] = laurent_reduce(poly_, rank_);
    auto [bhat, bmins] = laurent_reduce(b.poly_, rank_);
    MPoly qhat = ahat.exact_div(bhat);  // throws NotDivisible
    // Restore the monomial unit s^{amins - bmins}; negative entries are
    // absorbed by torus canonicalization via t_1...t_n = 1.
    MPoly q(rank_);
    for (const auto& [e, c] : qhat.terms()) {
        ExpVec f(rank_, 0);
        for (int i = 0; i < rank_ - 1; ++i) f[i] = e[i] + amins[i] - bmins[i];
        q.add_term(f, c);
    }
    TorusElem candidate(rank_, q);
    if (candidate * b != *this) throw NotDivisible("TorusElem: quotient check failed");
    return candidate;
}

bool TorusElem::divisible_by(const TorusElem& b) const {
    try {
        exact_div(b);
        return true;
    } catch (const NotDivisible&) {
        return false;
    }
}

SignedAction::SignedAction(std::vector<int> perm, bool signed_action)
    : perm_(std::move(perm)), signed_(signed_action), sign_(permutation_sign(perm_)) {}

SignedAction SignedAction::transposition(int n, int i, int j, bool signed_action) {
    std::vector<int> p(n);
    for (int k = 0; k < n; ++k) p[k] = k;
    std::swap(p[i], p[j]);
    return SignedAction(std::move(p), signed_action);
}

SignedAction SignedAction::identity(int n, bool signed_action) {
    std::vector<int> p(n);
    for (int k = 0; k < n; ++k) p[k] = k;
    return SignedAction(std::move(p), signed_action);
}

SignedAction SignedAction::compose(const SignedAction& other) const {
    std::vector<int> p(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) p[i] = perm_[other.perm_[i]];
    return SignedAction(std::move(p), signed_);
}

SignedAction SignedAction::inverse() const {
    std::vector<int> p(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) p[perm_[i]] = static_cast<int>(i);
    return SignedAction(std::move(p), signed_);
}

MPoly SignedAction::operator()(const MPoly& p) const {
    MPoly q = p.permute_variables(perm_);
    if (signed_ && sign_ < 0) q = -q;
    return q;
}

TorusElem SignedAction::operator()(const TorusElem& x) const {
    return TorusElem(x.rank(), (*this)(x.poly()));
}

int permutation_sign(const std::vector<int>& perm) {
    int sign = 1;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool is_invariant(const TorusElem& x, bool signed_action) {
    int n = x.rank();
    for (int i = 0; i + 1 < n; ++i) {
        if (SignedAction::transposition(n, i, i + 1, signed_action)(x) != x) return false;
    }
    return true;
}

bool is_symmetric(const MPoly& p) {
    int n = p.nvars();
    for (int i = 0; i + 1 < n; ++i) {
        if (SignedAction::transposition(n, i, i + 1, false)(p) != p) return false;
    }
    return true;
}

bool is_antisymmetric(const MPoly& p) {
    int n = p.nvars();
    for (int i = 0; i + 1 < n; ++i) {
        if (SignedAction::transposition(n, i, i + 1, false)(p) != -p) return false;
    }
    return true;
}

TorusElem LocalizedElem::f_product(int rank, const UPoly& f) {
    MPoly prod = MPoly::constant(rank, Rational(1));
    for (int i = 0; i < rank; ++i) prod = prod * f.evaluate(MPoly::variable(rank, i));
    return TorusElem(rank, prod);
}

LocalizedElem::LocalizedElem(int rank, UPoly f, TorusElem numerator, long f_power)
    : rank_(rank), f_(std::move(f)), num_(std::move(numerator)), power_(f_power) {
    if (power_ < 0) throw StructuralError("LocalizedElem: negative denominator power");
    reduce();
}

void LocalizedElem::reduce() {
    if (num_.is_zero()) {
        power_ = 0;
        return;
    }
    TorusElem p = f_product(rank_, f_);
    while (power_ > 0 && num_.divisible_by(p)) {
        num_ = num_.exact_div(p);
        --power_;
    }
}

void LocalizedElem::check_compatible(const LocalizedElem& o) const {
    if (rank_ != o.rank_ || f_ != o.f_) throw StructuralError("LocalizedElem: mismatched rank or F");
}

LocalizedElem operator+(const LocalizedElem& a, const LocalizedElem& b) {
    a.check_compatible(b);
    TorusElem p = LocalizedElem::f_product(a.rank_, a.f_);
    long m = std::max(a.power_, b.power_);
    TorusElem na = a.num_ * p.pow(m - a.power_);
    TorusElem nb = b.num_ * p.pow(m - b.power_);
    return LocalizedElem(a.rank_, a.f_, na + nb, m);
}

LocalizedElem operator-(const LocalizedElem& a, const LocalizedElem& b) {
    return a + (-b);
}

LocalizedElem operator*(const LocalizedElem& a, const LocalizedElem& b) {
    a.check_compatible(b);
    return LocalizedElem(a.rank_, a.f_, a.num_ * b.num_, a.power_ + b.power_);
}

bool operator==(const LocalizedElem& a, const LocalizedElem& b) {
    if (a.rank_ != b.rank_ || a.f_ != b.f_) return false;
    TorusElem p = LocalizedElem::f_product(a.rank_, a.f_);
    return a.num_ * p.pow(b.power_) == b.num_ * p.pow(a.power_);
}

LocalizedElem LocalizedElem::lattice_unit(int rank, const UPoly& f, const std::vector<int>& k) {
    if (static_cast<int>(k.size()) != rank) throw StructuralError("LocalizedElem: lattice vector size != rank");
    MPoly num = MPoly::constant(rank, Rational(1));
    long power = 0;
    for (int i = 0; i < rank; ++i) {
        MPoly fi = f.evaluate(MPoly::variable(rank, i));
        if (k[i] > 0) {
            num = num * fi.pow(k[i]);
        } else if (k[i] < 0) {
            // 1/F(t_i) = prod_{j != i} F(t_j) / P
            MPoly rest = MPoly::constant(rank, Rational(1));
            for (int j = 0; j < rank; ++j)
                if (j != i) rest = rest * f.evaluate(MPoly::variable(rank, j));
            num = num * rest.pow(-k[i]);
            power += -k[i];
        }
    }
    return LocalizedElem(rank, f, TorusElem(rank, num), power);
}

}  // namespace fusion
