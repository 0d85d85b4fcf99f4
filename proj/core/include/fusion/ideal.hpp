#pragma once

#include <string>
#include <vector>

#include "fusion/symmetric.hpp"
#include "fusion/torus.hpp"
#include "fusion/upoly.hpp"

namespace fusion {

/// Rank plus the character polynomial F(t) of an exponential functor.
/// deg F > 0; graded signs live in the coefficients (the classical twist
/// at level k uses F(t) = (-t)^{n+k} expanded).
struct FunctorSpec {
    int rank = 0;
    UPoly f;
    std::string label;

    FunctorSpec(int n, UPoly poly, std::string lbl = "");

    static FunctorSpec classical(int n, int level);

    long functor_degree() const { return f.degree(); }
};

/// The n-1 generators of the higher fusion ideal in three forms:
/// antisymmetric determinants q_i, their symmetric quotients
/// c_{F,i} = q_i / Delta, and the latter in elementary coordinates
/// with c_n set to 1.
struct IdealPresentation {
    int rank = 0;
    std::vector<MPoly> antisym;          // q_0 .. q_{n-2}
    std::vector<MPoly> sym;              // c_{F,0} .. c_{F,n-2}
    std::vector<ElemBasisPoly> elem;     // in c_1..c_n
    std::vector<MPoly> elem_cn1;         // in c_1..c_{n-1}, after c_n = 1
};

/// q_i = det with first row F(t_j) t_j^i over the truncated Vandermonde rows.
std::vector<MPoly> generators_antisym(const FunctorSpec& spec);

/// c_{F,j} = sum_{i=1}^d mu_i h_{i+j-(n-1)}; cross-validated against
/// divide_by_vandermonde(q_j).
std::vector<MPoly> generators_sym(const FunctorSpec& spec);

IdealPresentation ideal_presentation(const FunctorSpec& spec);

/// chi_F = (F(t) - F(t^{-1})) / (t - t^{-1}) as an element of the rank-2
/// torus ring (t = t_1, t^{-1} = t_2).
LocalizedElem su2_character(const FunctorSpec& spec);

/// V = sum_i G(t_i) with G(0) = 0 and G'(t) = (F(t) - F(0))/t.
struct Potential {
    int rank = 0;
    UPoly g;
    MPoly v;                 // in t variables
    ElemBasisPoly v_elem;    // in c_1..c_n
};

Potential potential(const FunctorSpec& spec);

/// Per-generator verdicts of c_{F,j} = (-1)^{n-j} dV/dc_{n-(j+1)}.
struct DerivativeCheck {
    struct Entry {
        int j;
        bool pass;
        MPoly residual;  // lhs - rhs in t variables
    };
    std::vector<Entry> entries;
    bool all_pass() const;
};

DerivativeCheck potential_derivative_check(const FunctorSpec& spec);

/// Building block dV_m/dc_j = (-1)^{j-1} c_{m-j} with V_m = p_m / m.
bool vm_derivative_identity(int m, int j, int n);

}  // namespace fusion
