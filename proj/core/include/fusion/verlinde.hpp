#pragma once

#include <map>
#include <string>
#include <vector>

#include "fusion/ideal.hpp"
#include "fusion/quotient.hpp"
#include "fusion/symmetric.hpp"

namespace fusion {

/// All partitions in the (n-1) x k box, i.e. integrable weights of SU(n)
/// at level k. Count = C(n+k-1, n-1). Deterministic order.
std::vector<Partition> integrable_weights(int n, int k);

/// Littlewood-Richardson coefficient c_{lambda,mu}^{nu} by LR-tableau
/// enumeration.
long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Kac-Walton fusion product: LR decomposition followed by affine Weyl
/// reflection with signs into the level-k alcove.
std::map<Partition, long> kac_walton_fusion(int n, int k, const Partition& lambda, const Partition& mu);

/// Full table of structure constants N_{lambda mu}^{nu}.
struct FusionTable {
    int rank = 0;
    int level = 0;
    std::vector<Partition> basis;
    std::map<std::tuple<Partition, Partition, Partition>, long> coefficients;
};

FusionTable fusion_table(int n, int k);

/// Two-route check: quotient-algebra structure constants in the
/// Schur-image basis against the Kac-Walton oracle.
struct QuotientComparison {
    bool match = false;
    int dimension_expected = 0;
    int dimension_actual = 0;
    bool schur_images_form_basis = false;
    std::vector<std::string> mismatches;
    FusionTable oracle;
};

QuotientComparison compare_with_quotient(int n, int k);

}  // namespace fusion
