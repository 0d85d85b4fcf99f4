#pragma once

#include <vector>

#include "fusion/groebner.hpp"
#include "fusion/matrix.hpp"

namespace fusion {

struct DimensionError : std::runtime_error {
    explicit DimensionError(std::string what, int witness_var)
        : std::runtime_error(std::move(what)), witness(witness_var) {}
    int witness;  // a variable with no pure-power leading term
};

/// Finite-dimensional commutative algebra Q[x_1..x_s]/I presented by a
/// Groebner basis: standard monomial basis plus one multiplication matrix
/// per variable.
class QuotientAlgebra {
public:
    static QuotientAlgebra build(const GroebnerBasis& gb);

    int dimension() const { return static_cast<int>(basis_.size()); }
    int nvars() const { return gb_.nvars; }
    const GroebnerBasis& groebner() const { return gb_; }
    const std::vector<ExpVec>& basis_monomials() const { return basis_; }
    const RatMatrix& mul_matrix(int var) const { return mul_[var]; }

    /// Coordinates of the coset of p in the standard monomial basis.
    std::vector<Rational> coords(const MPoly& p) const;
    /// Multiplication matrix of an arbitrary element.
    RatMatrix mul_matrix_of(const MPoly& p) const;
    /// Product of two cosets, in coordinates.
    std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
    MPoly from_coords(const std::vector<Rational>& v) const;

private:
    GroebnerBasis gb_{};
    std::vector<ExpVec> basis_;
    std::vector<RatMatrix> mul_;
};

/// Localization of an Artinian algebra at one element u: the quotient by
/// the generalized 0-eigenspace of multiplication by u. u acts invertibly
/// on the result.
struct LocalizedQuotient {
    RatMatrix kernel_ideal;        // columns span ker(M_u^dim), an ideal
    std::vector<RatMatrix> mul;    // induced multiplication matrices per variable
    RatMatrix mul_u;               // induced action of u (invertible)
    int dimension = 0;
};

LocalizedQuotient localize_artinian(const QuotientAlgebra& algebra, const MPoly& u);

}  // namespace fusion
