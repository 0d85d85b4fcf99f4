#include "fusion/symmetric.hpp"

#include <algorithm>
#include <sstream>

namespace fusion {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1]) throw DomainError("Partition: parts must be weakly decreasing");
    if (!parts_.empty() && parts_.back() < 0) throw DomainError("Partition: negative part");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

long Partition::weight() const {
    long w = 0;
    for (int p : parts_) w += p;
    return w;
}

Partition Partition::padded(int n) const {
    std::vector<int> v(parts_);
    v.resize(n, 0);
    return Partition(std::move(v));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

namespace {

void enum_partitions(long weight, int max_rows, int max_part, std::vector<int>& acc,
                     std::vector<Partition>& out) {
    if (weight == 0) {
        out.emplace_back(acc);
        return;
    }
    if (max_rows == 0) return;
    int hi = std::min<long>(max_part, weight);
    for (int p = hi; p >= 1; --p) {
        acc.push_back(p);
        enum_partitions(weight - p, max_rows - 1, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in_box(long weight, int max_rows, int max_part) {
    std::vector<Partition> out;
    std::vector<int> acc;
    if (weight >= 0) enum_partitions(weight, max_rows, max_part, acc, out);
    return out;
}

MPoly elementary(int k, int n) {
    if (k < 0 || k > n) return MPoly::zero(n);
    if (k == 0) return MPoly::constant(n, Rational(1));
    MPoly r(n);
    std::vector<int> idx(k);
    // iterate k-subsets of {0..n-1}
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        ExpVec e(n, 0);
        for (int i : idx) e[i] = 1;
        r.add_term(e, Rational(1));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return r;
}

MPoly complete(int k, int n) {
    if (k < 0) return MPoly::zero(n);
    if (k == 0) return MPoly::constant(n, Rational(1));
    MPoly r(n);
    // weakly increasing k-tuples from {0..n-1}
    std::vector<int> idx(k, 0);
    while (true) {
        ExpVec e(n, 0);
        for (int i : idx) e[i] += 1;
        r.add_term(e, Rational(1));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - 1) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[i];
    }
    return r;
}

MPoly power_sum(int m, int n) {
    if (m < 0) return MPoly::zero(n);
    if (m == 0) return MPoly::constant(n, Rational(n));
    MPoly r(n);
    for (int i = 0; i < n; ++i) {
        ExpVec e(n, 0);
        e[i] = m;
        r.add_term(e, Rational(1));
    }
    return r;
}

MPoly vandermonde(int n) {
    if (n < 2) throw DomainError("vandermonde: n >= 2 required");
    MPoly r = MPoly::constant(n, Rational(1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            r = r * (MPoly::variable(n, i) - MPoly::variable(n, j));
    return r;
}

MPoly antisymmetrize(const MPoly& p, bool normalized) {
    int n = p.nvars();
    MPoly r(n);
    for (const auto& perm : all_permutations(n)) {
        MPoly q = p.permute_variables(perm);
        r += permutation_sign(perm) > 0 ? q : -q;
    }
    if (normalized) {
        long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        r = r.scaled(Rational(1, fact));
    }
    return r;
}

namespace {

MPoly mpoly_det(const std::vector<std::vector<MPoly>>& m, std::vector<int> cols, int row) {
    int n = static_cast<int>(m.size());
    int nv = m[0][0].nvars();
    if (row == n) return MPoly::constant(nv, Rational(1));
    MPoly acc(nv);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        int c = cols[k];
        if (m[row][c].is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        MPoly sub = mpoly_det(m, std::move(rest), row + 1);
        MPoly term = m[row][c] * sub;
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
}

MPoly mpoly_det(const std::vector<std::vector<MPoly>>& m) {
    std::vector<int> cols(m.size());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = static_cast<int>(i);
    return mpoly_det(m, std::move(cols), 0);
}

}  // namespace

MPoly schur(const Partition& lambda, int n, SchurMethod method) {
    for (int i = n; i < lambda.length(); ++i)
        if (lambda.part(i) != 0) return MPoly::zero(n);
    if (method == SchurMethod::Bialternant) {
        ExpVec e(n);
        for (int i = 0; i < n; ++i) e[i] = lambda.part(i) + n - 1 - i;
        MPoly numer = antisymmetrize(MPoly::monomial(e, Rational(1)), false);
        if (numer.is_zero()) return MPoly::zero(n);
        return numer.exact_div(vandermonde(n));
    }
    // Jacobi-Trudi: det(h_{lambda_i - i + j})_{1<=i,j<=r}
    int r = std::max(lambda.length(), 1);
    std::vector<std::vector<MPoly>> m(r, std::vector<MPoly>(r, MPoly::zero(n)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            m[i][j] = complete(lambda.part(i) - i + j, n);
    return mpoly_det(m);
}

MPoly extended_a(const UPoly& p, const Partition& tail, int n) {
    // Linear in p: a_{(p,tail)} = sum_m p_m * antisym(t_1^m t_2^{tail_1+n-2} ... t_n^{tail_{n-1}}).
    MPoly acc(n);
    ExpVec e(n, 0);
    for (int i = 1; i < n; ++i) e[i] = tail.part(i - 1) + n - 1 - i;
    for (int m = 0; m <= p.degree(); ++m) {
        if (p.coeff(m).is_zero()) continue;
        e[0] = m;
        acc += antisymmetrize(MPoly::monomial(e, Rational(1)), false).scaled(p.coeff(m));
    }
    return acc;
}

MPoly divide_by_vandermonde(const MPoly& p) {
    if (!is_antisymmetric(p)) throw DomainError("divide_by_vandermonde: input not antisymmetric");
    if (p.is_zero()) return p;
    try {
        return p.exact_div(vandermonde(p.nvars()));
    } catch (const NotDivisible&) {
        throw std::logic_error("divide_by_vandermonde: antisymmetric input not divisible by Delta");
    }
}

namespace {

bool lex_less(const ExpVec& a, const ExpVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

ElemBasisPoly to_elem_basis(const MPoly& p, int n) {
    if (p.nvars() != n) throw StructuralError("to_elem_basis: variable count mismatch");
    if (!is_symmetric(p)) throw DomainError("to_elem_basis: input not symmetric");
    std::vector<MPoly> elem(n + 1);
    for (int k = 0; k <= n; ++k) elem[k] = elementary(k, n);
    MPoly rest = p;
    MPoly out(n);
    while (!rest.is_zero()) {
        // lex-leading exponent of a symmetric polynomial is weakly decreasing
        auto it = std::max_element(
            rest.terms().begin(), rest.terms().end(),
            [](const auto& x, const auto& y) { return lex_less(x.first, y.first); });
        const ExpVec& a = it->first;
        Rational c = it->second;
        ExpVec ce(n, 0);
        MPoly prod = MPoly::constant(n, Rational(1));
        for (int i = 0; i < n; ++i) {
            int d = a[i] - (i + 1 < n ? a[i + 1] : 0);
            if (d < 0) throw std::logic_error("to_elem_basis: non-dominant leading exponent");
            ce[i] = d;
            if (d > 0) prod = prod * elem[i + 1].pow(d);
        }
        out.add_term(ce, c);
        rest -= prod.scaled(c);
    }
    return ElemBasisPoly(n, out);
}

MPoly ElemBasisPoly::to_t_vars() const {
    std::vector<MPoly> args;
    args.reserve(n_);
    for (int k = 1; k <= n_; ++k) args.push_back(elementary(k, n_));
    return poly_.substitute(args);
}

MPoly ElemBasisPoly::with_cn_set_to_one() const {
    MPoly r(n_ - 1);
    for (const auto& [e, c] : poly_.terms()) {
        ExpVec f(e.begin(), e.end() - 1);
        r.add_term(f, c);
    }
    return r;
}

bool pieri_check(const UPoly& p, int n) {
    UPoly q = p.shift_up();
    MPoly lhs = extended_a(p, Partition({1}), n);
    MPoly rhs = extended_a(p, Partition::empty(), n) * elementary(1, n) -
                extended_a(q, Partition::empty(), n);
    return lhs == rhs;
}

}  // namespace fusion
