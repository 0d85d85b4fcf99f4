#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusion/ideal.hpp"
#include "fusion/quotient.hpp"

namespace fusion {

/// Per-step verdicts of the ideal-quotient regularity criterion:
/// (I_k : x_{k+1}) = I_k for every prefix.
struct RegularityReport {
    std::string sequence;
    struct Step {
        int index;
        bool pass;
        std::string note;
    };
    std::vector<Step> steps;
    bool overall = true;
    bool proper = true;  // the full ideal is proper
};

/// Regularity of (t_2^m - t_1^m, ..., t_{n-1}^m - t_{n-2}^m,
/// -t_1^m...t_{n-2}^m t_{n-1}^{2m}) in Q[t_1..t_{n-1}].
RegularityReport regseq1_check(int n, int m);

/// Regularity of (F(t_2) - F(t_1), ..., F(t_n) - F(t_{n-1})) in R_{F,Q},
/// tested in Q[t_1..t_{n-1}] after eliminating t_n and clearing
/// denominators; each prefix ideal is saturated by t_1...t_{n-1}.
RegularityReport regseq2_check(const FunctorSpec& spec);

struct BoundaryWarning : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Degree-truncated cohomology of the Koszul complex on (R_{F,Q})^{n-1}
/// for the sequence x_F, computed through the unit-rescaled polynomial
/// representatives y_i = F(t_i) - F(t_{i+1}); classes killed by a power of
/// P = F(t_1)...F(t_n) vanish after localization.
struct KoszulReport {
    int rank = 0;
    int ell = 0;             // n - 1, the expected concentration degree
    int degree_cap = 0;      // ambient truncation D
    int kernel_cap = 0;      // degrees from which kernel classes are drawn
    bool d_squared_zero = false;

    struct Cohomology {
        int k;
        int raw_classes;        // dim of window classes before localization
        int localized_classes;  // dim after P-torsion removal
        bool resolved;          // torsion iteration stabilized inside the window
        std::vector<std::pair<int, int>> degree_profile;  // (degree, count) of surviving classes
    };
    std::vector<Cohomology> groups;
    bool stable = false;  // set by stable_koszul_cohomology on convergence
};

/// window = [0, d_hi]; throws BoundaryWarning when d_hi leaves no interior
/// degrees after the reliability margin.
KoszulReport truncated_koszul_cohomology(const FunctorSpec& spec, int d_hi, int max_torsion_power = 2);

/// Grows the window until two consecutive runs agree on every group's
/// (raw, localized) dimensions, up to d_max (0 = a degree-based default).
/// The returned report carries stable = false when the cap was hit first.
KoszulReport stable_koszul_cohomology(const FunctorSpec& spec, int d_max = 0, int max_torsion_power = 2);

/// Groebner-side reference for dim H^ell: dimension of the localization of
/// Q[t_1..t_{n-1}]/(cleared sequence, saturated at t_1...t_{n-1}) at the
/// image of P. Empty when the saturated quotient is not finite-dimensional.
std::optional<int> koszul_hilbert_reference(const FunctorSpec& spec);

}  // namespace fusion
