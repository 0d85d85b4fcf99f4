#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "fusion/rational.hpp"

namespace fusion {

/// Exponent vector of a monomial. Length equals the ring's variable count.
/// Entries may be negative only while torus-ring canonicalization is in
/// flight; everywhere else they are >= 0.
using ExpVec = std::vector<int>;

inline long total_degree(const ExpVec& e) {
    return std::accumulate(e.begin(), e.end(), 0L);
}

/// Graded reverse lexicographic order. Returns true when a < b.
/// Ties in total degree break by the last differing coordinate:
/// the monomial with the *smaller* entry there is the larger one.
bool grevlex_less(const ExpVec& a, const ExpVec& b);

/// Comparator putting the grevlex-largest monomial first in a map.
struct GrevlexDescending {
    bool operator()(const ExpVec& a, const ExpVec& b) const { return grevlex_less(b, a); }
};

struct StructuralError : std::logic_error {
    using std::logic_error::logic_error;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

class MPoly;

/// Thrown by exact division when the remainder is nonzero.
struct NotDivisible : std::runtime_error {
    explicit NotDivisible(std::string what) : std::runtime_error(std::move(what)) {}
};

/// Sparse multivariate polynomial over Q. Immutable value semantics;
/// no zero coefficients are stored; terms iterate in descending grevlex.
class MPoly {
public:
    using TermMap = std::map<ExpVec, Rational, GrevlexDescending>;

    MPoly() : nvars_(0) {}
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly zero(int nvars) { return MPoly(nvars); }
    static MPoly constant(int nvars, const Rational& c);
    static MPoly variable(int nvars, int index, int exponent = 1);
    static MPoly monomial(const ExpVec& e, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Leading term in grevlex; polynomial must be nonzero.
    const std::pair<const ExpVec, Rational>& leading() const;
    long degree() const;  // max total degree, -1 for zero

    Rational coeff(const ExpVec& e) const;
    Rational constant_coeff() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);

    MPoly scaled(const Rational& c) const;
    MPoly mul_monomial(const ExpVec& e, const Rational& c) const;
    MPoly pow(long k) const;

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    /// Exact quotient; throws NotDivisible when the remainder is nonzero.
    MPoly exact_div(const MPoly& b) const;

    /// Substitute args[i] for variable i. All args share a variable count.
    MPoly substitute(const std::vector<MPoly>& args) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    MPoly derivative(int var) const;

    /// Apply a permutation of the variables: variable i goes to perm[i].
    MPoly permute_variables(const std::vector<int>& perm) const;

    /// Divide out the rational content so that coefficients become coprime
    /// integers with positive leading sign. Returns zero unchanged.
    MPoly primitive_part() const;
    MPoly monic() const;

    /// Insert (merging, dropping zeros). Construction helper.
    void add_term(const ExpVec& e, const Rational& c);

private:
    void check_same_ring(const MPoly& o) const;

    int nvars_;
    TermMap terms_;
};

}  // namespace fusion
