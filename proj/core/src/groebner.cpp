#include "fusion/groebner.hpp"

#include <algorithm>
#include <list>

namespace fusion {

bool MonomialOrder::less(const ExpVec& a, const ExpVec& b) const {
    if (elim_ > 0) {
        long da = 0, db = 0;
        for (int i = static_cast<int>(a.size()) - elim_; i < static_cast<int>(a.size()); ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da < db;
    }
    return grevlex_less(a, b);
}

std::pair<ExpVec, Rational> leading_term(const MPoly& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw DomainError("leading_term: zero polynomial");
    auto best = p.terms().begin();
    for (auto it = std::next(best); it != p.terms().end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

namespace {

bool divides(const ExpVec& a, const ExpVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

ExpVec lcm_exp(const ExpVec& a, const ExpVec& b) {
    ExpVec e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
    return e;
}

ExpVec sub_exp(const ExpVec& a, const ExpVec& b) {
    ExpVec e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] - b[i];
    return e;
}

bool coprime(const ExpVec& a, const ExpVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

MPoly reduce_full(const MPoly& p, const std::vector<MPoly>& basis,
                  const std::vector<std::pair<ExpVec, Rational>>& lts, const MonomialOrder& ord) {
    MPoly h = p;
    MPoly r(p.nvars());
    while (!h.is_zero()) {
        auto [le, lc] = leading_term(h, ord);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!divides(lts[i].first, le)) continue;
            h -= basis[i].mul_monomial(sub_exp(le, lts[i].first), lc / lts[i].second);
            reduced = true;
            break;
        }
        if (!reduced) {
            r.add_term(le, lc);
            h.add_term(le, -lc);
        }
    }
    return r;
}

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
    return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero();
}

GroebnerBasis buchberger(const std::vector<MPoly>& input, int nvars, const MonomialOrder& ord) {
    std::vector<MPoly> basis;
    std::vector<std::pair<ExpVec, Rational>> lts;
    for (const auto& g : input) {
        if (g.nvars() != nvars) throw StructuralError("buchberger: variable-count mismatch");
        if (g.is_zero()) continue;
        MPoly p = g.primitive_part();
        basis.push_back(p);
        lts.push_back(leading_term(p, ord));
    }

    struct Pair {
        std::size_t i, j;
        ExpVec lcm;
    };
    std::list<Pair> pairs;
    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pairs.push_back({i, j, lcm_exp(lts[i].first, lts[j].first)});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs(j);

    while (!pairs.empty()) {
        // normal selection: smallest lcm
        auto sel = pairs.begin();
        for (auto it = std::next(sel); it != pairs.end(); ++it)
            if (ord.less(it->lcm, sel->lcm)) sel = it;
        Pair pr = *sel;
        pairs.erase(sel);

        if (coprime(lts[pr.i].first, lts[pr.j].first)) continue;
        // chain criterion: some other basis element divides the lcm and
        // both remaining pairs are no longer pending
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j || !divides(lts[k].first, pr.lcm)) continue;
            bool pending = false;
            for (const auto& q : pairs) {
                if ((q.i == std::min(pr.i, k) && q.j == std::max(pr.i, k)) ||
                    (q.i == std::min(pr.j, k) && q.j == std::max(pr.j, k))) {
                    pending = true;
                    break;
                }
            }
            if (!pending) skip = true;
        }
        if (skip) continue;

        MPoly s = basis[pr.i].mul_monomial(sub_exp(pr.lcm, lts[pr.i].first), lts[pr.j].second) -
                  basis[pr.j].mul_monomial(sub_exp(pr.lcm, lts[pr.j].first), lts[pr.i].second);
        MPoly r = reduce_full(s, basis, lts, ord);
        if (r.is_zero()) continue;
        r = r.primitive_part();
        basis.push_back(r);
        lts.push_back(leading_term(r, ord));
        add_pairs(basis.size() - 1);
    }

    // minimalize: drop generators whose LT is divisible by another's
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[i] || !keep[j]) continue;
            if (divides(lts[j].first, lts[i].first) &&
                (lts[j].first != lts[i].first || j < i))
                keep[i] = false;
        }
    std::vector<MPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(basis[i]);

    // inter-reduce to the unique reduced basis
    std::vector<MPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MPoly> others;
        std::vector<std::pair<ExpVec, Rational>> olts;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j == i) continue;
            others.push_back(minimal[j]);
            olts.push_back(leading_term(minimal[j], ord));
        }
        MPoly r = others.empty() ? minimal[i] : reduce_full(minimal[i], others, olts, ord);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MPoly& a, const MPoly& b) {
        return ord.less(leading_term(a, ord).first, leading_term(b, ord).first);
    });
    return GroebnerBasis{nvars, ord, std::move(reduced)};
}

MPoly normal_form(const MPoly& p, const GroebnerBasis& gb) {
    if (p.nvars() != gb.nvars) throw StructuralError("normal_form: variable-count mismatch");
    if (gb.gens.empty()) return p;
    std::vector<std::pair<ExpVec, Rational>> lts;
    lts.reserve(gb.gens.size());
    for (const auto& g : gb.gens) lts.push_back(leading_term(g, gb.order));
    return reduce_full(p, gb.gens, lts, gb.order);
}

bool ideal_contains(const GroebnerBasis& gb, const MPoly& p) {
    return normal_form(p, gb).is_zero();
}

MPoly extend_ring(const MPoly& p, int extra) {
    MPoly r(p.nvars() + extra);
    for (const auto& [e, c] : p.terms()) {
        ExpVec f = e;
        f.resize(e.size() + extra, 0);
        r.add_term(f, c);
    }
    return r;
}

GroebnerBasis ideal_quotient(const GroebnerBasis& ideal, const MPoly& f) {
    if (f.is_zero()) throw DomainError("ideal_quotient: zero divisor polynomial");
    int n = ideal.nvars;
    if (ideal.gens.empty()) return ideal;  // (0 : f) = 0 in a domain
    // I cap (f) via tag variable w: GB of { w g_i } + { (w - 1) f }, elim w.
    std::vector<MPoly> gens;
    MPoly w = MPoly::variable(n + 1, n);
    for (const auto& g : ideal.gens) gens.push_back(w * extend_ring(g, 1));
    MPoly fe = extend_ring(f, 1);
    gens.push_back(w * fe - fe);
    GroebnerBasis egb = buchberger(gens, n + 1, MonomialOrder::elim_last(1));
    std::vector<MPoly> quot;
    for (const auto& g : egb.gens) {
        bool pure = true;
        for (const auto& [e, c] : g.terms())
            if (e[n] != 0) { pure = false; break; }
        if (!pure) continue;
        MPoly restricted(n);
        for (const auto& [e, c] : g.terms()) restricted.add_term(ExpVec(e.begin(), e.end() - 1), c);
        quot.push_back(restricted.exact_div(f));
    }
    return buchberger(quot, n, ideal.order);
}

GroebnerBasis saturation(const GroebnerBasis& ideal, const MPoly& f) {
    GroebnerBasis cur = ideal;
    for (;;) {
        GroebnerBasis next = ideal_quotient(cur, f);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

}  // namespace fusion
