#pragma once

#include <optional>
#include <vector>

#include "fusion/mpoly.hpp"

namespace fusion {

/// Term order used by the Groebner engine. Grevlex globally; the
/// elimination variant ranks the trailing block of variables first so
/// that a basis intersected with the leading block is an elimination
/// ideal.
class MonomialOrder {
public:
    static MonomialOrder grevlex() { return MonomialOrder(0); }
    static MonomialOrder elim_last(int count) { return MonomialOrder(count); }

    bool less(const ExpVec& a, const ExpVec& b) const;
    int elim_count() const { return elim_; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) { return a.elim_ == b.elim_; }

private:
    explicit MonomialOrder(int elim) : elim_(elim) {}
    int elim_;
};

/// Reduced monic Groebner basis; generators sorted by leading monomial.
/// Unique for a given ideal and order, so equality of ideals is equality
/// of bases.
struct GroebnerBasis {
    int nvars = 0;
    MonomialOrder order = MonomialOrder::grevlex();
    std::vector<MPoly> gens;

    bool is_unit_ideal() const;
    bool is_zero_ideal() const { return gens.empty(); }

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        return a.nvars == b.nvars && a.order == b.order && a.gens == b.gens;
    }
    friend bool operator!=(const GroebnerBasis& a, const GroebnerBasis& b) { return !(a == b); }
};

/// Leading term of p under ord; p must be nonzero.
std::pair<ExpVec, Rational> leading_term(const MPoly& p, const MonomialOrder& ord);

/// Buchberger with the coprimality and chain criteria, normal pair
/// selection, content stripping; deterministic output.
GroebnerBasis buchberger(const std::vector<MPoly>& gens, int nvars,
                         const MonomialOrder& ord = MonomialOrder::grevlex());

/// Unique remainder of p modulo gb.
MPoly normal_form(const MPoly& p, const GroebnerBasis& gb);

bool ideal_contains(const GroebnerBasis& gb, const MPoly& p);

/// (I : f), computed through the intersection I cap (f) with a tag
/// variable, then exact division by f.
GroebnerBasis ideal_quotient(const GroebnerBasis& ideal, const MPoly& f);

/// (I : f^inf) by iterating the ideal quotient until it stabilizes.
GroebnerBasis saturation(const GroebnerBasis& ideal, const MPoly& f);

/// Append `extra` fresh variables (exponent 0) to each monomial.
MPoly extend_ring(const MPoly& p, int extra);

}  // namespace fusion
