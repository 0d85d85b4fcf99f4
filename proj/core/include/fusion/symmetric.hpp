#pragma once

#include <vector>

#include "fusion/mpoly.hpp"
#include "fusion/torus.hpp"
#include "fusion/upoly.hpp"

namespace fusion {

/// Weakly decreasing list of nonnegative integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition empty() { return Partition(); }

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return i < static_cast<int>(parts_.size()) ? parts_[i] : 0; }
    int length() const { return static_cast<int>(parts_.size()); }
    long weight() const;

    Partition padded(int n) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    std::string str() const;

private:
    std::vector<int> parts_;  // trailing zeros stripped
};

/// All partitions of weight w with at most max_rows rows and parts <= max_part.
std::vector<Partition> partitions_in_box(long weight, int max_rows, int max_part);

// Classical bases. k < 0 yields 0, k = 0 yields 1.
MPoly elementary(int k, int n);
MPoly complete(int k, int n);
MPoly power_sum(int m, int n);

/// det(t_i^{n-j}) = prod_{i<j} (t_i - t_j).
MPoly vandermonde(int n);

enum class SchurMethod { Bialternant, JacobiTrudi };

/// Schur polynomial in n variables. Partitions with a nonzero part beyond
/// row n give 0.
MPoly schur(const Partition& lambda, int n, SchurMethod method = SchurMethod::Bialternant);

/// Determinant with first row p(t_j) and rows t_j^{tail_i + n - i} below,
/// i = 2..n; the extended bialternant numerator.
MPoly extended_a(const UPoly& p, const Partition& tail, int n);

/// Signed averaging over S_n; `normalized` divides by n!.
MPoly antisymmetrize(const MPoly& p, bool normalized);

/// Exact quotient p / Delta for antisymmetric p (checked).
MPoly divide_by_vandermonde(const MPoly& p);

/// Symmetric polynomial rewritten in the elementary symmetric coordinates
/// c_1..c_n; substituting c_k -> elementary(k, n) recovers the input.
class ElemBasisPoly {
public:
    ElemBasisPoly() = default;
    ElemBasisPoly(int n, MPoly poly) : n_(n), poly_(std::move(poly)) {}

    int source_vars() const { return n_; }
    const MPoly& poly() const { return poly_; }

    /// Evaluate back to a symmetric polynomial in t_1..t_n.
    MPoly to_t_vars() const;
    /// Impose c_n = 1 and drop that variable; result lives in c_1..c_{n-1}.
    MPoly with_cn_set_to_one() const;

    friend bool operator==(const ElemBasisPoly& a, const ElemBasisPoly& b) {
        return a.n_ == b.n_ && a.poly_ == b.poly_;
    }
    friend bool operator!=(const ElemBasisPoly& a, const ElemBasisPoly& b) { return !(a == b); }

private:
    int n_ = 0;
    MPoly poly_;  // in n variables c_1..c_n
};

/// Rewrite a symmetric polynomial in the elementary basis (checked).
ElemBasisPoly to_elem_basis(const MPoly& p, int n);

/// Verifies a_{(p,1,0..)} = a_{(p,0..)} e_1 - a_{(pt,0..)}.
bool pieri_check(const UPoly& p, int n);

}  // namespace fusion
