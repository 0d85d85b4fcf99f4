#pragma once

#include <vector>

#include "fusion/mpoly.hpp"
#include "fusion/upoly.hpp"

namespace fusion {

/// Element of R(T) (x) Q = Q[t_1..t_n]/(t_1...t_n - 1) in canonical form:
/// every exponent vector is shifted by a multiple of (1,..,1) so its
/// minimum entry is 0, then equal monomials are merged. Two elements are
/// equal iff their canonical forms are identical.
class TorusElem {
public:
    TorusElem() : rank_(0) {}
    /// Canonicalizes; p may carry negative exponents.
    TorusElem(int rank, const MPoly& p);

    static TorusElem zero(int rank) { return TorusElem(rank, MPoly::zero(rank)); }
    static TorusElem one(int rank) { return TorusElem(rank, MPoly::constant(rank, Rational(1))); }
    static TorusElem variable(int rank, int index) { return TorusElem(rank, MPoly::variable(rank, index)); }

    int rank() const { return rank_; }
    const MPoly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    TorusElem operator-() const { return TorusElem(rank_, -poly_); }
    friend TorusElem operator+(const TorusElem& a, const TorusElem& b);
    friend TorusElem operator-(const TorusElem& a, const TorusElem& b);
    friend TorusElem operator*(const TorusElem& a, const TorusElem& b);
    friend bool operator==(const TorusElem& a, const TorusElem& b) {
        return a.rank_ == b.rank_ && a.poly_ == b.poly_;
    }
    friend bool operator!=(const TorusElem& a, const TorusElem& b) { return !(a == b); }

    TorusElem scaled(const Rational& c) const { return TorusElem(rank_, poly_.scaled(c)); }
    TorusElem pow(long k) const;

    /// Exact quotient in R(T); monomials are units here, so divisibility is
    /// tested in the Laurent ring Q[t_1^, .., t_{n-1}^] after eliminating t_n.
    /// Throws NotDivisible when b does not divide a.
    TorusElem exact_div(const TorusElem& b) const;
    bool divisible_by(const TorusElem& b) const;

private:
    int rank_;
    MPoly poly_;
};

/// Canonical representative of p modulo (t_1...t_n - 1).
MPoly torus_canonical_poly(const MPoly& p, int rank);

/// A permutation of S_n acting on the torus variables, optionally with the
/// sign character.
class SignedAction {
public:
    SignedAction(std::vector<int> perm, bool signed_action);

    static SignedAction transposition(int n, int i, int j, bool signed_action);
    static SignedAction identity(int n, bool signed_action);

    int n() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    bool is_signed() const { return signed_; }
    int sign() const { return sign_; }

    SignedAction compose(const SignedAction& other) const;  // this after other
    SignedAction inverse() const;

    TorusElem operator()(const TorusElem& x) const;
    MPoly operator()(const MPoly& p) const;

private:
    std::vector<int> perm_;
    bool signed_;
    int sign_;
};

int permutation_sign(const std::vector<int>& perm);
std::vector<std::vector<int>> all_permutations(int n);

/// True iff x is fixed by every (signed) permutation; adjacent
/// transpositions suffice.
bool is_invariant(const TorusElem& x, bool signed_action);
bool is_symmetric(const MPoly& p);
bool is_antisymmetric(const MPoly& p);

/// Element of the localized ring R_{F,Q}: numerator / (F(t_1)...F(t_n))^m.
/// Reduced form: the power m is decremented while the product divides the
/// numerator exactly.
class LocalizedElem {
public:
    LocalizedElem(int rank, UPoly f, TorusElem numerator, long f_power);

    static LocalizedElem from_torus(int rank, const UPoly& f, const TorusElem& x) {
        return LocalizedElem(rank, f, x, 0);
    }

    int rank() const { return rank_; }
    const UPoly& f() const { return f_; }
    const TorusElem& numerator() const { return num_; }
    long f_power() const { return power_; }

    /// The inverted element P = F(t_1)...F(t_n).
    static TorusElem f_product(int rank, const UPoly& f);

    LocalizedElem operator-() const { return LocalizedElem(rank_, f_, -num_, power_); }
    friend LocalizedElem operator+(const LocalizedElem& a, const LocalizedElem& b);
    friend LocalizedElem operator-(const LocalizedElem& a, const LocalizedElem& b);
    friend LocalizedElem operator*(const LocalizedElem& a, const LocalizedElem& b);
    /// Equality by cross-multiplication.
    friend bool operator==(const LocalizedElem& a, const LocalizedElem& b);
    friend bool operator!=(const LocalizedElem& a, const LocalizedElem& b) { return !(a == b); }

    /// The unit psi(k) = prod F(t_i)^{k_i} for a lattice vector k.
    static LocalizedElem lattice_unit(int rank, const UPoly& f, const std::vector<int>& k);

private:
    void check_compatible(const LocalizedElem& o) const;
    void reduce();

    int rank_;
    UPoly f_;
    TorusElem num_;
    long power_;
};

}  // namespace fusion
