#include "fusion/koszul.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fusion/groebner.hpp"

namespace fusion {

namespace {

std::string poly_brief(const MPoly& p) {
    std::ostringstream os;
    os << p.term_count() << " terms, degree " << p.degree();
    return os.str();
}

// One regularity step: x must be a nonzerodivisor modulo `ideal`.
RegularityReport::Step quotient_step(int index, const GroebnerBasis& ideal, const MPoly& x) {
    if (x.is_zero()) return {index, false, "zero sequence entry"};
    if (ideal.is_zero_ideal())
        return {index, true, "nonzero element of a domain"};
    if (ideal.is_unit_ideal())
        return {index, true, "unit prefix ideal (vacuous)"};
    GroebnerBasis q = ideal_quotient(ideal, x);
    bool pass = q == ideal;
    return {index, pass, pass ? "(I : x) = I" : "(I : x) strictly larger"};
}

}  // namespace

RegularityReport regseq1_check(int n, int m) {
    if (n < 2 || m < 1) throw DomainError("regseq1_check: need n >= 2, m >= 1");
    int nv = n - 1;
    std::vector<MPoly> seq;
    for (int i = 0; i + 1 < nv; ++i) {
        seq.push_back(MPoly::variable(nv, i + 1, m) - MPoly::variable(nv, i, m));
    }
    ExpVec e(nv, m);
    e[nv - 1] = 2 * m;
    seq.push_back(MPoly::monomial(e, Rational(-1)));

    RegularityReport rep;
    {
        std::ostringstream os;
        os << "regseq1 n=" << n << " m=" << m;
        rep.sequence = os.str();
    }
    std::vector<MPoly> prefix;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        GroebnerBasis gb = buchberger(prefix, nv);
        rep.steps.push_back(quotient_step(static_cast<int>(k), gb, seq[k]));
        prefix.push_back(seq[k]);
    }
    GroebnerBasis full = buchberger(prefix, nv);
    rep.proper = !full.is_unit_ideal();
    rep.overall = rep.proper;
    for (const auto& s : rep.steps) rep.overall = rep.overall && s.pass;
    return rep;
}

namespace {

// The sequence (F(t_2)-F(t_1), ..., F(t_n)-F(t_{n-1})) with t_n
// eliminated via t_n = (t_1...t_{n-1})^{-1} and denominators cleared by
// (t_1...t_{n-1})^{deg F}.
std::vector<MPoly> cleared_sequence(const FunctorSpec& spec) {
    int n = spec.rank;
    int nv = n - 1;
    int d = static_cast<int>(spec.f.degree());
    std::vector<MPoly> seq;
    for (int i = 0; i + 1 < nv; ++i)
        seq.push_back(spec.f.evaluate(MPoly::variable(nv, i + 1)) -
                      spec.f.evaluate(MPoly::variable(nv, i)));
    MPoly u = MPoly::constant(nv, Rational(1));
    for (int i = 0; i < nv; ++i) u = u * MPoly::variable(nv, i);
    MPoly last(nv);
    for (int j = 0; j <= d; ++j) {
        if (spec.f.coeff(j).is_zero()) continue;
        last += u.pow(d - j).scaled(spec.f.coeff(j));
    }
    last -= u.pow(d) * spec.f.evaluate(MPoly::variable(nv, nv - 1));
    seq.push_back(last);
    return seq;
}

MPoly var_product(int nv) {
    MPoly u = MPoly::constant(nv, Rational(1));
    for (int i = 0; i < nv; ++i) u = u * MPoly::variable(nv, i);
    return u;
}

}  // namespace

RegularityReport regseq2_check(const FunctorSpec& spec) {
    int nv = spec.rank - 1;
    std::vector<MPoly> seq = cleared_sequence(spec);
    MPoly u = var_product(nv);

    RegularityReport rep;
    rep.sequence = "regseq2 n=" + std::to_string(spec.rank) + " F deg " + std::to_string(spec.f.degree());
    std::vector<MPoly> prefix;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        GroebnerBasis sat = saturation(buchberger(prefix, nv), u);
        rep.steps.push_back(quotient_step(static_cast<int>(k), sat, seq[k]));
        prefix.push_back(seq[k]);
    }
    GroebnerBasis full = saturation(buchberger(prefix, nv), u);
    rep.proper = !full.is_unit_ideal();
    rep.overall = true;  // regularity is a per-step statement; properness reported separately
    for (const auto& s : rep.steps) rep.overall = rep.overall && s.pass;
    return rep;
}

namespace {

// Incremental sparse Gaussian elimination over Q; columns are absorbed
// one at a time.
class SparseEliminator {
public:
    // Returns true when v was independent of the absorbed columns.
    bool absorb(std::map<int, Rational> v) {
        reduce(v);
        if (v.empty()) return false;
        int lead = v.begin()->first;
        Rational inv = v.begin()->second.inverse();
        for (auto& [i, c] : v) c *= inv;
        pivots_[lead] = std::move(v);
        return true;
    }

    bool member(std::map<int, Rational> v) const {
        reduce(v);
        return v.empty();
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    void reduce(std::map<int, Rational>& v) const {
        while (!v.empty()) {
            auto it = pivots_.find(v.begin()->first);
            if (it == pivots_.end()) {
                // try deeper entries too: full reduction
                bool hit = false;
                for (auto vit = v.begin(); vit != v.end(); ++vit) {
                    auto p = pivots_.find(vit->first);
                    if (p != pivots_.end()) {
                        axpy(v, -vit->second, p->second);
                        hit = true;
                        break;
                    }
                }
                if (!hit) return;
            } else {
                axpy(v, -v.begin()->second, it->second);
            }
        }
    }

    static void axpy(std::map<int, Rational>& v, const Rational& c, const std::map<int, Rational>& w) {
        for (const auto& [i, x] : w) {
            auto [it, inserted] = v.emplace(i, c * x);
            if (!inserted) {
                it->second += c * x;
                if (it->second.is_zero()) v.erase(it);
            }
        }
    }

    std::map<int, std::map<int, Rational>> pivots_;
};

std::vector<std::vector<int>> subsets_of_size(int ell, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(k);
    if (k == 0) {
        out.push_back({});
        return out;
    }
    if (k > ell) return out;
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == ell - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

struct KoszulCtx {
    int n, ell, cap;
    std::vector<TorusElem> y;       // unit-rescaled sequence entries
    TorusElem p;                    // F(t_1)...F(t_n)
    std::vector<ExpVec> mons;       // canonical monomials, deg <= cap
    std::map<ExpVec, int> mon_idx;
    std::vector<std::vector<std::vector<int>>> subsets;  // per k

    int index(int k, int subset, int mon) const {
        (void)k;
        return subset * static_cast<int>(mons.size()) + mon;
    }
};

void enum_canonical(int n, int cap, ExpVec& acc, int pos, bool has_zero, long sum,
                    std::vector<ExpVec>& out) {
    if (pos == n) {
        if (has_zero) out.push_back(acc);
        return;
    }
    for (int v = 0; sum + v <= cap; ++v) {
        acc[pos] = v;
        enum_canonical(n, cap, acc, pos + 1, has_zero || v == 0, sum + v, out);
    }
    acc[pos] = 0;
}

KoszulCtx make_ctx(const FunctorSpec& spec, int cap) {
    KoszulCtx ctx;
    ctx.n = spec.rank;
    ctx.ell = spec.rank - 1;
    ctx.cap = cap;
    for (int i = 0; i + 1 < ctx.n; ++i) {
        ctx.y.emplace_back(ctx.n, spec.f.evaluate(MPoly::variable(ctx.n, i)) -
                                      spec.f.evaluate(MPoly::variable(ctx.n, i + 1)));
    }
    ctx.p = LocalizedElem::f_product(ctx.n, spec.f);
    ExpVec acc(ctx.n, 0);
    enum_canonical(ctx.n, cap, acc, 0, false, 0, ctx.mons);
    std::sort(ctx.mons.begin(), ctx.mons.end(), grevlex_less);
    for (int i = 0; i < static_cast<int>(ctx.mons.size()); ++i) ctx.mon_idx[ctx.mons[i]] = i;
    for (int k = 0; k <= ctx.ell + 1; ++k) ctx.subsets.push_back(subsets_of_size(ctx.ell, k));
    return ctx;
}

using SparseVec = std::map<int, Rational>;

// Multiply a cochain component by a torus element, expanding into the
// ambient monomial basis. Throws BoundaryWarning on window overflow.
void add_scaled_product(const KoszulCtx& ctx, SparseVec& out, int subset_idx, const ExpVec& mon,
                        const TorusElem& factor, const Rational& coeff) {
    TorusElem prod = factor * TorusElem(ctx.n, MPoly::monomial(mon, Rational(1)));
    for (const auto& [e, c] : prod.poly().terms()) {
        auto it = ctx.mon_idx.find(e);
        if (it == ctx.mon_idx.end()) throw BoundaryWarning("koszul: product escaped the degree window");
        int id = ctx.index(0, subset_idx, it->second);
        auto [vit, inserted] = out.emplace(id, c * coeff);
        if (!inserted) {
            vit->second += c * coeff;
            if (vit->second.is_zero()) out.erase(vit);
        }
    }
}

// d(e_S (x) m) = sum_{i not in S} sign * y_i m (x) e_{S u {i}}.
SparseVec apply_d(const KoszulCtx& ctx, int k, int subset_idx, int mon_idx) {
    const auto& s = ctx.subsets[k][subset_idx];
    const auto& target_subsets = ctx.subsets[k + 1];
    SparseVec out;
    for (int i = 0; i < ctx.ell; ++i) {
        if (std::find(s.begin(), s.end(), i) != s.end()) continue;
        std::vector<int> t = s;
        t.insert(std::upper_bound(t.begin(), t.end(), i), i);
        int pos = static_cast<int>(std::lower_bound(t.begin(), t.end(), i) - t.begin());
        int tgt = static_cast<int>(std::lower_bound(target_subsets.begin(), target_subsets.end(), t) -
                                   target_subsets.begin());
        Rational sign(pos % 2 == 0 ? 1 : -1);
        add_scaled_product(ctx, out, tgt, ctx.mons[mon_idx], ctx.y[i], sign);
    }
    return out;
}

SparseVec apply_d_vec(const KoszulCtx& ctx, int k, const SparseVec& v) {
    SparseVec out;
    int nmon = static_cast<int>(ctx.mons.size());
    for (const auto& [id, c] : v) {
        SparseVec dv = apply_d(ctx, k, id / nmon, id % nmon);
        for (const auto& [j, x] : dv) {
            auto [it, inserted] = out.emplace(j, c * x);
            if (!inserted) {
                it->second += c * x;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

SparseVec mul_p(const KoszulCtx& ctx, const SparseVec& v) {
    SparseVec out;
    int nmon = static_cast<int>(ctx.mons.size());
    for (const auto& [id, c] : v)
        add_scaled_product(ctx, out, id / nmon, ctx.mons[id % nmon], ctx.p, c);
    return out;
}

}  // namespace

KoszulReport truncated_koszul_cohomology(const FunctorSpec& spec, int d_hi, int max_torsion_power) {
    KoszulReport rep;
    rep.rank = spec.rank;
    rep.ell = spec.rank - 1;
    rep.degree_cap = d_hi;

    KoszulCtx ctx = make_ctx(spec, d_hi);

    long dfy = 0;
    for (const auto& yi : ctx.y) dfy = std::max(dfy, yi.poly().degree());
    long degp = std::max<long>(ctx.p.poly().degree(), 0);
    long margin = std::max(dfy, degp * max_torsion_power);
    int dz = static_cast<int>(d_hi - margin - dfy);  // kernel domain; images of it still fit
    if (dz < 1) throw BoundaryWarning("koszul: window [0," + std::to_string(d_hi) +
                                      "] leaves no interior degrees (margin " + std::to_string(margin + dfy) + ")");
    rep.kernel_cap = dz;
    int nmon = static_cast<int>(ctx.mons.size());

    std::vector<int> mons_le_dz, mons_le_img;
    int dimg = static_cast<int>(d_hi - dfy);
    for (int i = 0; i < nmon; ++i) {
        long d = total_degree(ctx.mons[i]);
        if (d <= dz) mons_le_dz.push_back(i);
        if (d <= dimg) mons_le_img.push_back(i);
    }

    // d o d = 0 on the restricted domain
    rep.d_squared_zero = true;
    for (int k = 0; k + 2 <= ctx.ell && rep.d_squared_zero; ++k) {
        for (std::size_t s = 0; s < ctx.subsets[k].size() && rep.d_squared_zero; ++s) {
            for (int mi : mons_le_dz) {
                SparseVec dd = apply_d_vec(ctx, k + 1, apply_d(ctx, k, static_cast<int>(s), mi));
                if (!dd.empty()) {
                    rep.d_squared_zero = false;
                    break;
                }
            }
        }
    }
    if (ctx.ell == 1) rep.d_squared_zero = true;  // nothing to compose

    for (int k = 0; k <= ctx.ell; ++k) {
        KoszulReport::Cohomology coh;
        coh.k = k;

        // kernel of d on C^k restricted to degrees <= dz
        std::vector<SparseVec> kernel_vecs;
        if (k == ctx.ell) {
            for (std::size_t s = 0; s < ctx.subsets[k].size(); ++s)
                for (int mi : mons_le_dz) kernel_vecs.push_back({{ctx.index(k, static_cast<int>(s), mi), Rational(1)}});
        } else {
            // dense kernel on the touched rows
            std::vector<SparseVec> cols;
            std::vector<int> col_deg;
            for (std::size_t s = 0; s < ctx.subsets[k].size(); ++s)
                for (int mi : mons_le_dz) {
                    cols.push_back(apply_d(ctx, k, static_cast<int>(s), mi));
                    col_deg.push_back(static_cast<int>(total_degree(ctx.mons[mi])));
                }
            std::map<int, int> row_of;
            for (const auto& c : cols)
                for (const auto& [r, x] : c)
                    row_of.emplace(r, static_cast<int>(row_of.size()));
            RatMatrix m(static_cast<int>(row_of.size()), static_cast<int>(cols.size()));
            for (int j = 0; j < static_cast<int>(cols.size()); ++j)
                for (const auto& [r, x] : cols[j]) m.at(row_of.at(r), j) = x;
            RatMatrix ker = m.kernel();
            int domain = static_cast<int>(cols.size());
            std::vector<std::pair<int, int>> domain_ids;  // (subset, mon)
            {
                int j = 0;
                for (std::size_t s = 0; s < ctx.subsets[k].size(); ++s)
                    for (int mi : mons_le_dz) {
                        domain_ids.push_back({static_cast<int>(s), mi});
                        ++j;
                    }
            }
            for (int c = 0; c < ker.cols(); ++c) {
                SparseVec v;
                for (int r = 0; r < domain; ++r) {
                    if (ker.at(r, c).is_zero()) continue;
                    v[ctx.index(k, domain_ids[r].first, domain_ids[r].second)] = ker.at(r, c);
                }
                kernel_vecs.push_back(std::move(v));
            }
        }

        // image of d from C^{k-1} restricted to degrees <= dimg
        SparseEliminator image;
        if (k > 0) {
            for (std::size_t s = 0; s < ctx.subsets[k - 1].size(); ++s)
                for (int mi : mons_le_img) image.absorb(apply_d(ctx, k - 1, static_cast<int>(s), mi));
        }

        // sort kernel classes by degree for the profile
        std::stable_sort(kernel_vecs.begin(), kernel_vecs.end(), [&](const SparseVec& a, const SparseVec& b) {
            auto deg = [&](const SparseVec& v) {
                long d = 0;
                for (const auto& [id, c] : v) d = std::max(d, total_degree(ctx.mons[id % nmon]));
                return d;
            };
            return deg(a) < deg(b);
        });

        int raw = 0;
        {
            SparseEliminator e = image;
            for (const auto& v : kernel_vecs)
                if (e.absorb(v)) ++raw;
        }
        coh.raw_classes = raw;

        int localized = raw;
        bool resolved = true;
        if (raw > 0 && degp > 0) {
            int prev = raw;
            std::vector<SparseVec> pv = kernel_vecs;
            resolved = false;
            for (int s = 1; s <= max_torsion_power; ++s) {
                for (auto& v : pv) v = mul_p(ctx, v);
                SparseEliminator e = image;
                int cur = 0;
                for (const auto& v : pv)
                    if (e.absorb(v)) ++cur;
                if (cur == prev || cur == 0) {
                    localized = cur;
                    resolved = true;
                    break;
                }
                prev = cur;
                localized = cur;
            }
        } else if (raw > 0 && degp == 0) {
            // P is a nonzero constant: already a unit, localization is a no-op
            localized = raw;
        }
        coh.localized_classes = localized;
        coh.resolved = resolved;

        // degree profile of surviving raw classes
        {
            SparseEliminator e = image;
            std::map<int, int> prof;
            for (const auto& v : kernel_vecs) {
                long d = 0;
                for (const auto& [id, c] : v) d = std::max(d, total_degree(ctx.mons[id % nmon]));
                if (e.absorb(v)) prof[static_cast<int>(d)] += 1;
            }
            coh.degree_profile.assign(prof.begin(), prof.end());
        }

        rep.groups.push_back(std::move(coh));
    }
    return rep;
}

KoszulReport stable_koszul_cohomology(const FunctorSpec& spec, int d_max, int max_torsion_power) {
    int d = static_cast<int>(spec.f.degree());
    if (d_max <= 0) d_max = 6 * d + 8;

    auto signature = [](const KoszulReport& r) {
        std::vector<std::pair<int, int>> sig;
        for (const auto& g : r.groups) sig.push_back({g.raw_classes, g.localized_classes});
        return sig;
    };

    std::optional<KoszulReport> prev;
    for (int window = 2 * d + 2; window <= d_max; window += std::max(1, d / 2)) {
        KoszulReport cur;
        try {
            cur = truncated_koszul_cohomology(spec, window, max_torsion_power);
        } catch (const BoundaryWarning&) {
            continue;
        }
        if (prev && signature(*prev) == signature(cur)) {
            cur.stable = true;
            return cur;
        }
        prev = std::move(cur);
    }
    if (!prev) throw BoundaryWarning("koszul: no window up to " + std::to_string(d_max) + " was computable");
    prev->stable = false;
    return *prev;
}

std::optional<int> koszul_hilbert_reference(const FunctorSpec& spec) {
    int nv = spec.rank - 1;
    int d = static_cast<int>(spec.f.degree());
    std::vector<MPoly> seq = cleared_sequence(spec);
    MPoly u = var_product(nv);
    GroebnerBasis sat = saturation(buchberger(seq, nv), u);
    try {
        QuotientAlgebra algebra = QuotientAlgebra::build(sat);
        // image of P = F(t_1)...F(t_n), cleared by the unit u^d
        MPoly p_cleared(nv);
        for (int j = 0; j <= d; ++j) {
            if (spec.f.coeff(j).is_zero()) continue;
            p_cleared += u.pow(d - j).scaled(spec.f.coeff(j));
        }
        for (int i = 0; i < nv; ++i) p_cleared = p_cleared * spec.f.evaluate(MPoly::variable(nv, i));
        LocalizedQuotient loc = localize_artinian(algebra, p_cleared);
        return loc.dimension;
    } catch (const DimensionError&) {
        return std::nullopt;
    }
}

}  // namespace fusion
