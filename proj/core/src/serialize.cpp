#include "fusion/serialize.hpp"

#include <sstream>

namespace fusion {

std::string monomial_text(const ExpVec& e, int nvars) {
    std::ostringstream os;
    for (int i = 0; i < nvars; ++i) {
        if (i) os << '*';
        os << 't' << (i + 1) << '^' << (i < static_cast<int>(e.size()) ? e[i] : 0);
    }
    return os.str();
}

std::string poly_text(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << " * " << monomial_text(e, p.nvars());
    }
    return os.str();
}

MPoly poly_parse(const std::string& s, int nvars) {
    if (s == "0") return MPoly::zero(nvars);
    MPoly out(nvars);
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(" + ", pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        std::size_t star = term.find(" * ");
        if (star == std::string::npos) throw DomainError("poly_parse: missing ' * ' in term '" + term + "'");
        Rational c(term.substr(0, star));
        ExpVec e(nvars, 0);
        std::istringstream ms(term.substr(star + 3));
        for (int i = 0; i < nvars; ++i) {
            char t, caret, sep;
            int idx;
            if (!(ms >> t >> idx) || t != 't' || idx != i + 1 || !(ms >> caret) || caret != '^' || !(ms >> e[i]))
                throw DomainError("poly_parse: malformed monomial in '" + term + "'");
            if (i + 1 < nvars && (!(ms >> sep) || sep != '*'))
                throw DomainError("poly_parse: malformed monomial in '" + term + "'");
        }
        out.add_term(e, c);
        if (next == std::string::npos) break;
        pos = next + 3;
    }
    return out;
}

std::string torus_text(const TorusElem& x) {
    return "rank=" + std::to_string(x.rank()) + "; " + poly_text(x.poly());
}

std::string localized_text(const LocalizedElem& x) {
    return "rank=" + std::to_string(x.rank()) + "; fPower=" + std::to_string(x.f_power()) + "; " +
           poly_text(x.numerator().poly());
}

json matrix_json(const RatMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

json partition_json(const Partition& p) {
    return json(p.parts());
}

json groebner_json(const GroebnerBasis& gb) {
    json gens = json::array();
    for (const auto& g : gb.gens) gens.push_back(poly_text(g));
    json order;
    if (gb.order == MonomialOrder::grevlex())
        order = json{{"type", "grevlex"}};
    else
        order = json{{"type", "elim_last"}, {"count", gb.order.elim_count()}};
    return json{{"schema", kSchemaVersion},
                {"nvars", gb.nvars},
                {"order", std::move(order)},
                {"generators", std::move(gens)}};
}

json quotient_json(const QuotientAlgebra& a) {
    json basis = json::array();
    for (const auto& e : a.basis_monomials()) basis.push_back(monomial_text(e, a.nvars()));
    json muls = json::array();
    for (int v = 0; v < a.nvars(); ++v) muls.push_back(matrix_json(a.mul_matrix(v)));
    return json{{"schema", kSchemaVersion},
                {"dimension", a.dimension()},
                {"groebner", groebner_json(a.groebner())},
                {"standard_monomials", std::move(basis)},
                {"mul_matrices", std::move(muls)}};
}

json fusion_table_json(const FusionTable& t) {
    json basis = json::array();
    for (const auto& p : t.basis) basis.push_back(partition_json(p));
    json coeffs = json::array();
    for (const auto& [key, c] : t.coefficients) {
        const auto& [la, mu, nu] = key;
        coeffs.push_back(json::array({partition_json(la), partition_json(mu), partition_json(nu), c}));
    }
    return json{{"schema", kSchemaVersion},
                {"rank", t.rank},
                {"level", t.level},
                {"basis", std::move(basis)},
                {"coefficients", std::move(coeffs)}};
}

json presentation_json(const IdealPresentation& p) {
    json antisym = json::array(), sym = json::array(), elem = json::array(), cn1 = json::array();
    for (const auto& q : p.antisym) antisym.push_back(poly_text(q));
    for (const auto& c : p.sym) sym.push_back(poly_text(c));
    for (const auto& e : p.elem) elem.push_back(poly_text(e.poly()));
    for (const auto& e : p.elem_cn1) cn1.push_back(poly_text(e));
    return json{{"schema", kSchemaVersion},
                {"rank", p.rank},
                {"antisym", std::move(antisym)},
                {"sym", std::move(sym)},
                {"elem_basis", std::move(elem)},
                {"elem_basis_cn_one", std::move(cn1)}};
}

json potential_json(const Potential& p, const DerivativeCheck& check) {
    json gc = json::array();
    for (const auto& c : p.g.coeffs()) gc.push_back(c.str());
    json entries = json::array();
    for (const auto& e : check.entries)
        entries.push_back(json{{"j", e.j}, {"pass", e.pass}, {"residual", poly_text(e.residual)}});
    return json{{"schema", kSchemaVersion},
                {"rank", p.rank},
                {"g_coefficients", std::move(gc)},
                {"v", poly_text(p.v)},
                {"v_elem", poly_text(p.v_elem.poly())},
                {"derivative_identity", json{{"all_pass", check.all_pass()}, {"entries", std::move(entries)}}}};
}

json regularity_json(const RegularityReport& r) {
    json steps = json::array();
    for (const auto& s : r.steps)
        steps.push_back(json{{"index", s.index}, {"pass", s.pass}, {"note", s.note}});
    return json{{"schema", kSchemaVersion},
                {"sequence", r.sequence},
                {"steps", std::move(steps)},
                {"proper", r.proper},
                {"overall", r.overall}};
}

json koszul_json(const KoszulReport& r) {
    json groups = json::array();
    for (const auto& g : r.groups) {
        json profile = json::array();
        for (const auto& [deg, count] : g.degree_profile) profile.push_back(json::array({deg, count}));
        groups.push_back(json{{"k", g.k},
                              {"raw_classes", g.raw_classes},
                              {"localized_classes", g.localized_classes},
                              {"resolved", g.resolved},
                              {"degree_profile", std::move(profile)}});
    }
    return json{{"schema", kSchemaVersion},
                {"rank", r.rank},
                {"ell", r.ell},
                {"degree_cap", r.degree_cap},
                {"kernel_cap", r.kernel_cap},
                {"stable", r.stable},
                {"d_squared_zero", r.d_squared_zero},
                {"groups", std::move(groups)}};
}

json comparison_json(const QuotientComparison& c) {
    return json{{"schema", kSchemaVersion},
                {"match", c.match},
                {"dimension_expected", c.dimension_expected},
                {"dimension_actual", c.dimension_actual},
                {"schur_images_form_basis", c.schur_images_form_basis},
                {"mismatches", c.mismatches},
                {"oracle", fusion_table_json(c.oracle)}};
}

std::string dump_json(const json& j) {
    return j.dump(2) + "\n";
}

}  // namespace fusion
