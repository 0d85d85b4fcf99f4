#include "fusion/verlinde.hpp"

#include <algorithm>
#include <sstream>

#include "fusion/groebner.hpp"

namespace fusion {

std::vector<Partition> integrable_weights(int n, int k) {
    if (n < 2 || k < 0) throw DomainError("integrable_weights: need n >= 2, k >= 0");
    std::vector<Partition> out;
    for (long w = 0; w <= static_cast<long>(k) * (n - 1); ++w) {
        auto ps = partitions_in_box(w, n - 1, k);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool contains_shape(const Partition& nu, const Partition& lambda) {
    for (int i = 0; i < lambda.length(); ++i)
        if (lambda.part(i) > nu.part(i)) return false;
    return true;
}

struct LRState {
    const Partition& lambda;
    const Partition& mu;
    const Partition& nu;
    std::vector<std::vector<int>> fill;  // fill[r][c] for lambda.part(r) <= c < nu.part(r)
    std::vector<int> content;            // how many of each value placed
    long count = 0;
};

// Cells are visited right-to-left within each row, rows top-down: the
// reverse reading word order, so the lattice condition can be enforced
// incrementally.
void lr_search(LRState& st, int row, int col) {
    int rows = st.nu.length();
    if (row == rows) {
        for (int v = 0; v < static_cast<int>(st.content.size()); ++v)
            if (st.content[v] != st.mu.part(v)) return;
        ++st.count;
        return;
    }
    if (col < st.lambda.part(row)) {
        lr_search(st, row + 1, st.nu.part(row + 1) - 1);
        return;
    }
    for (int v = 0; v < static_cast<int>(st.content.size()); ++v) {
        // lattice: after placing v, #v <= #(v-1)
        if (v > 0 && st.content[v] + 1 > st.content[v - 1]) continue;
        if (st.content[v] + 1 > st.mu.part(v)) continue;
        // row weakly increasing: cell to the right (already filled) >= v
        if (col + 1 < st.nu.part(row) && st.fill[row][col + 1] < v) continue;
        // column strictly increasing: cell above (already filled) < v
        if (row > 0 && col < st.nu.part(row - 1) && col >= st.lambda.part(row - 1) &&
            st.fill[row - 1][col] >= v)
            continue;
        st.fill[row][col] = v;
        st.content[v] += 1;
        if (col > st.lambda.part(row))
            lr_search(st, row, col - 1);
        else
            lr_search(st, row + 1, row + 1 < rows ? st.nu.part(row + 1) - 1 : -1);
        st.content[v] -= 1;
    }
}

}  // namespace

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.weight() + mu.weight() != nu.weight()) return 0;
    if (!contains_shape(nu, lambda)) return 0;
    if (mu.length() == 0) return lambda == nu ? 1 : 0;
    LRState st{lambda, mu, nu, {}, std::vector<int>(mu.length(), 0), 0};
    st.fill.resize(nu.length());
    for (int r = 0; r < nu.length(); ++r) st.fill[r].assign(nu.part(r), -1);
    lr_search(st, 0, nu.part(0) - 1);
    return st.count;
}

namespace {

// Reflect nu + rho into the level-k alcove; returns false when the
// shifted weight lies on a wall.
bool alcove_reduce(std::vector<long>& a, long modulus, int& sign) {
    const int n = static_cast<int>(a.size());
    for (int iter = 0; iter < 100000; ++iter) {
        // sort descending, tracking parity
        for (int i = 1; i < n; ++i)
            for (int j = i; j > 0 && a[j] > a[j - 1]; --j) {
                std::swap(a[j], a[j - 1]);
                sign = -sign;
            }
        for (int i = 0; i + 1 < n; ++i)
            if (a[i] == a[i + 1]) return false;
        long spread = a[0] - a[n - 1];
        if (spread < modulus) return true;
        if (spread == modulus) return false;  // fixed by the affine reflection
        long hi = a[0], lo = a[n - 1];
        a[0] = lo + modulus;
        a[n - 1] = hi - modulus;
        sign = -sign;
    }
    throw std::logic_error("alcove_reduce: failed to terminate");
}

}  // namespace

std::map<Partition, long> kac_walton_fusion(int n, int k, const Partition& lambda, const Partition& mu) {
    if (lambda.length() > n - 1 || lambda.part(0) > k || mu.length() > n - 1 || mu.part(0) > k)
        throw DomainError("kac_walton_fusion: weights not integrable at this level");
    std::map<Partition, long> out;
    long w = lambda.weight() + mu.weight();
    long modulus = n + k;
    for (const Partition& nu : partitions_in_box(w, n, static_cast<int>(std::max(w, 1L)))) {
        long c = lr_coefficient(lambda, mu, nu);
        if (c == 0) continue;
        std::vector<long> a(n);
        for (int i = 0; i < n; ++i) a[i] = nu.part(i) + (n - 1 - i);
        int sign = 1;
        if (!alcove_reduce(a, modulus, sign)) continue;
        std::vector<int> parts(n);
        for (int i = 0; i < n; ++i) parts[i] = static_cast<int>(a[i] - (n - 1 - i));
        int last = parts[n - 1];
        for (int& p : parts) p -= last;  // central identification: drop full columns
        Partition res(parts);
        if (res.part(0) > k) throw std::logic_error("kac_walton_fusion: alcove reduction escaped the level");
        out[res] += sign * c;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

FusionTable fusion_table(int n, int k) {
    FusionTable t;
    t.rank = n;
    t.level = k;
    t.basis = integrable_weights(n, k);
    for (const auto& la : t.basis)
        for (const auto& mu : t.basis) {
            if (mu < la) continue;  // fill symmetric half, mirror below
            auto prod = kac_walton_fusion(n, k, la, mu);
            for (const auto& [nu, c] : prod) {
                t.coefficients[{la, mu, nu}] = c;
                if (la != mu) t.coefficients[{mu, la, nu}] = c;
            }
        }
    return t;
}

QuotientComparison compare_with_quotient(int n, int k) {
    QuotientComparison rep;
    rep.oracle = fusion_table(n, k);

    FunctorSpec spec = FunctorSpec::classical(n, k);
    IdealPresentation pres = ideal_presentation(spec);
    GroebnerBasis gb = buchberger(pres.elem_cn1, n - 1);
    QuotientAlgebra algebra = QuotientAlgebra::build(gb);

    const auto& weights = rep.oracle.basis;
    rep.dimension_expected = static_cast<int>(weights.size());
    rep.dimension_actual = algebra.dimension();
    if (rep.dimension_actual != rep.dimension_expected) {
        rep.mismatches.push_back("dimension mismatch: quotient " + std::to_string(rep.dimension_actual) +
                                 " vs weight count " + std::to_string(rep.dimension_expected));
    }

    // Schur images in the quotient, as columns
    std::vector<MPoly> images;
    std::vector<std::vector<Rational>> cols;
    for (const auto& la : weights) {
        MPoly s = schur(la, n);
        MPoly in_c = to_elem_basis(s, n).with_cn_set_to_one();
        images.push_back(in_c);
        cols.push_back(algebra.coords(in_c));
    }
    RatMatrix s_mat = RatMatrix::from_columns(cols, algebra.dimension());
    rep.schur_images_form_basis =
        s_mat.rows() == s_mat.cols() && !s_mat.det().is_zero();
    if (!rep.schur_images_form_basis) {
        rep.mismatches.push_back("Schur images do not form a vector-space basis");
        rep.match = false;
        return rep;
    }
    RatMatrix s_inv = s_mat.inverse();

    for (std::size_t i = 0; i < weights.size(); ++i) {
        for (std::size_t j = i; j < weights.size(); ++j) {
            std::vector<Rational> prod = algebra.coords(images[i] * images[j]);
            std::vector<Rational> in_schur = s_inv.apply(prod);
            auto oracle = kac_walton_fusion(n, k, weights[i], weights[j]);
            for (std::size_t m = 0; m < weights.size(); ++m) {
                long expected = 0;
                if (auto it = oracle.find(weights[m]); it != oracle.end()) expected = it->second;
                if (in_schur[m] != Rational(expected)) {
                    std::ostringstream os;
                    os << "N(" << weights[i].str() << "," << weights[j].str() << ")^" << weights[m].str()
                       << ": quotient " << in_schur[m] << " vs oracle " << expected;
                    rep.mismatches.push_back(os.str());
                }
            }
        }
    }
    rep.match = rep.mismatches.empty();
    return rep;
}

}  // namespace fusion
