#include "fusion/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fusion {

QuotientAlgebra QuotientAlgebra::build(const GroebnerBasis& gb) {
    QuotientAlgebra a;
    a.gb_ = gb;
    int n = gb.nvars;

    if (gb.is_unit_ideal()) {
        a.mul_.assign(n, RatMatrix(0, 0));
        return a;
    }

    std::vector<ExpVec> lts;
    for (const auto& g : gb.gens) lts.push_back(leading_term(g, gb.order).first);

    // finite dimension iff every variable has a pure-power leading term
    for (int v = 0; v < n; ++v) {
        bool found = false;
        for (const auto& e : lts) {
            bool pure = e[v] > 0;
            for (int i = 0; i < n && pure; ++i)
                if (i != v && e[i] != 0) pure = false;
            if (pure) { found = true; break; }
        }
        if (!found)
            throw DimensionError("quotient_algebra: infinite-dimensional quotient, witness variable x" +
                                     std::to_string(v + 1),
                                 v);
    }

    auto divisible = [&](const ExpVec& e) {
        for (const auto& l : lts) {
            bool d = true;
            for (int i = 0; i < n; ++i)
                if (l[i] > e[i]) { d = false; break; }
            if (d) return true;
        }
        return false;
    };

    // enumerate standard monomials breadth-first from 1
    std::set<ExpVec> seen;
    std::vector<ExpVec> queue{ExpVec(n, 0)};
    seen.insert(queue[0]);
    for (std::size_t h = 0; h < queue.size(); ++h) {
        ExpVec e = queue[h];
        for (int v = 0; v < n; ++v) {
            ExpVec f = e;
            f[v] += 1;
            if (divisible(f) || seen.count(f)) continue;
            seen.insert(f);
            queue.push_back(f);
        }
    }
    a.basis_.assign(seen.begin(), seen.end());
    std::sort(a.basis_.begin(), a.basis_.end(), grevlex_less);

    std::map<ExpVec, int> index;
    for (int i = 0; i < static_cast<int>(a.basis_.size()); ++i) index[a.basis_[i]] = i;
    int dim = static_cast<int>(a.basis_.size());

    for (int v = 0; v < n; ++v) {
        RatMatrix m(dim, dim);
        for (int j = 0; j < dim; ++j) {
            ExpVec f = a.basis_[j];
            f[v] += 1;
            MPoly nf = normal_form(MPoly::monomial(f, Rational(1)), gb);
            for (const auto& [e, c] : nf.terms()) m.at(index.at(e), j) = c;
        }
        a.mul_.push_back(std::move(m));
    }
    return a;
}

std::vector<Rational> QuotientAlgebra::coords(const MPoly& p) const {
    std::vector<Rational> v(dimension(), Rational(0));
    MPoly nf = normal_form(p, gb_);
    std::map<ExpVec, int> index;
    for (int i = 0; i < dimension(); ++i) index[basis_[i]] = i;
    for (const auto& [e, c] : nf.terms()) v[index.at(e)] = c;
    return v;
}

RatMatrix QuotientAlgebra::mul_matrix_of(const MPoly& p) const {
    int dim = dimension();
    RatMatrix m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        MPoly prod = normal_form(p * MPoly::monomial(basis_[j], Rational(1)), gb_);
        std::vector<Rational> col = coords(prod);
        for (int i = 0; i < dim; ++i) m.at(i, j) = col[i];
    }
    return m;
}

std::vector<Rational> QuotientAlgebra::multiply(const std::vector<Rational>& a,
                                                const std::vector<Rational>& b) const {
    MPoly pa = from_coords(a), pb = from_coords(b);
    return coords(pa * pb);
}

MPoly QuotientAlgebra::from_coords(const std::vector<Rational>& v) const {
    MPoly p(nvars());
    for (int i = 0; i < dimension(); ++i) p.add_term(basis_[i], v[i]);
    return p;
}

LocalizedQuotient localize_artinian(const QuotientAlgebra& algebra, const MPoly& u) {
    int dim = algebra.dimension();
    LocalizedQuotient out;
    if (dim == 0) {
        out.kernel_ideal = RatMatrix(0, 0);
        out.mul.assign(algebra.nvars(), RatMatrix(0, 0));
        out.mul_u = RatMatrix(0, 0);
        return out;
    }
    RatMatrix mu = algebra.mul_matrix_of(u);
    RatMatrix k = mu.pow(dim).kernel();  // columns in coefficient space of M_u^dim
    // k columns live in R^dim (kernel of the dim x dim matrix)
    int r = k.cols();
    out.kernel_ideal = k;

    // complete the kernel basis to a full basis with unit vectors
    RatMatrix t(dim, dim);
    for (int c = 0; c < r; ++c)
        for (int i = 0; i < dim; ++i) t.at(i, c) = k.at(i, c);
    int filled = r;
    for (int e = 0; e < dim && filled < dim; ++e) {
        RatMatrix probe(dim, filled + 1);
        for (int c = 0; c < filled; ++c)
            for (int i = 0; i < dim; ++i) probe.at(i, c) = t.at(i, c);
        probe.at(e, filled) = Rational(1);
        if (probe.rank() == filled + 1) {
            t.at(e, filled) = Rational(1);
            ++filled;
        }
    }
    RatMatrix tinv = t.inverse();
    int q = dim - r;
    out.dimension = q;

    auto project = [&](const RatMatrix& m) {
        RatMatrix conj = tinv * m * t;
        RatMatrix block(q, q);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) block.at(i, j) = conj.at(r + i, r + j);
        return block;
    };
    for (int v = 0; v < algebra.nvars(); ++v) out.mul.push_back(project(algebra.mul_matrix(v)));
    out.mul_u = project(mu);
    return out;
}

}  // namespace fusion
