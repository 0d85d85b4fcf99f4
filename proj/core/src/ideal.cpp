#include "fusion/ideal.hpp"

namespace fusion {

FunctorSpec::FunctorSpec(int n, UPoly poly, std::string lbl)
    : rank(n), f(std::move(poly)), label(std::move(lbl)) {
    if (rank < 2) throw DomainError("FunctorSpec: rank >= 2 required");
    if (f.degree() < 1) throw DomainError("FunctorSpec: deg F > 0 required");
}

FunctorSpec FunctorSpec::classical(int n, int level) {
    if (level < 0) throw DomainError("FunctorSpec: level >= 0 required");
    return FunctorSpec(n, UPoly::neg_t_power(n + level),
                       "classical n=" + std::to_string(n) + " k=" + std::to_string(level));
}

std::vector<MPoly> generators_antisym(const FunctorSpec& spec) {
    int n = spec.rank;
    std::vector<MPoly> out;
    out.reserve(n - 1);
    for (int i = 0; i <= n - 2; ++i) {
        UPoly p = spec.f;
        for (int s = 0; s < i; ++s) p = p.shift_up();
        out.push_back(extended_a(p, Partition::empty(), n));
    }
    return out;
}

std::vector<MPoly> generators_sym(const FunctorSpec& spec) {
    int n = spec.rank;
    int d = static_cast<int>(spec.f.degree());
    std::vector<MPoly> out;
    out.reserve(n - 1);
    std::vector<MPoly> q = generators_antisym(spec);
    for (int j = 0; j <= n - 2; ++j) {
        MPoly c(n);
        for (int i = 1; i <= d; ++i) {
            if (spec.f.coeff(i).is_zero()) continue;
            c += complete(i + j - (n - 1), n).scaled(spec.f.coeff(i));
        }
        MPoly via_delta = q[j].is_zero() ? MPoly::zero(n) : divide_by_vandermonde(q[j]);
        if (c != via_delta)
            throw std::logic_error("generators_sym: h-expansion disagrees with q/Delta at j=" + std::to_string(j));
        out.push_back(std::move(c));
    }
    return out;
}

IdealPresentation ideal_presentation(const FunctorSpec& spec) {
    IdealPresentation pres;
    pres.rank = spec.rank;
    pres.antisym = generators_antisym(spec);
    pres.sym = generators_sym(spec);
    for (const auto& c : pres.sym) {
        ElemBasisPoly eb = to_elem_basis(c, spec.rank);
        pres.elem_cn1.push_back(eb.with_cn_set_to_one());
        pres.elem.push_back(std::move(eb));
    }
    return pres;
}

LocalizedElem su2_character(const FunctorSpec& spec) {
    if (spec.rank != 2) throw DomainError("su2_character: rank must be 2");
    MPoly t1 = MPoly::variable(2, 0), t2 = MPoly::variable(2, 1);
    TorusElem numer(2, spec.f.evaluate(t1) - spec.f.evaluate(t2));
    TorusElem denom(2, t1 - t2);
    return LocalizedElem::from_torus(2, spec.f, numer.exact_div(denom));
}

Potential potential(const FunctorSpec& spec) {
    Potential p;
    p.rank = spec.rank;
    p.g = spec.f.antiderivative_shifted();
    MPoly v(spec.rank);
    for (int i = 0; i < spec.rank; ++i) v += p.g.evaluate(MPoly::variable(spec.rank, i));
    p.v = v;
    p.v_elem = to_elem_basis(v, spec.rank);
    return p;
}

bool DerivativeCheck::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

DerivativeCheck potential_derivative_check(const FunctorSpec& spec) {
    int n = spec.rank;
    Potential pot = potential(spec);
    std::vector<MPoly> sym = generators_sym(spec);

    std::vector<MPoly> elem_subs;
    for (int k = 1; k <= n; ++k) elem_subs.push_back(elementary(k, n));

    DerivativeCheck report;
    for (int j = 0; j <= n - 2; ++j) {
        // derivative in the free ring Q[c_1..c_n], then back to t variables
        MPoly dv = pot.v_elem.poly().derivative(n - j - 2);  // c_{n-(j+1)} is variable index n-j-2
        MPoly rhs_t = dv.substitute(elem_subs);
        int sign = (n - j) % 2 == 0 ? 1 : -1;
        MPoly rhs = rhs_t.scaled(Rational(sign));
        MPoly residual = sym[j] - rhs;
        report.entries.push_back({j, residual.is_zero(), residual});
    }
    return report;
}

bool vm_derivative_identity(int m, int j, int n) {
    if (m < 1 || j < 1 || j > n) throw DomainError("vm_derivative_identity: need m >= 1, 1 <= j <= n");
    MPoly vm = power_sum(m, n).scaled(Rational(1, m));
    ElemBasisPoly vm_elem = to_elem_basis(vm, n);
    std::vector<MPoly> elem_subs;
    for (int k = 1; k <= n; ++k) elem_subs.push_back(elementary(k, n));
    MPoly lhs = vm_elem.poly().derivative(j - 1).substitute(elem_subs);
    MPoly rhs = complete(m - j, n).scaled(Rational(j % 2 == 1 ? 1 : -1));
    return lhs == rhs;
}

}  // namespace fusion
