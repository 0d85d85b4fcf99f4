#pragma once

#include <random>

#include "fusion/mpoly.hpp"
#include "fusion/upoly.hpp"

namespace testutil {

using fusion::ExpVec;
using fusion::MPoly;
using fusion::Rational;
using fusion::UPoly;

inline std::mt19937& rng() {
    static std::mt19937 gen(20240817);
    return gen;
}

inline Rational random_rational(int num_bound = 9, bool allow_fraction = true) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, allow_fraction ? 5 : 1);
    return Rational(num(rng()), den(rng()));
}

inline MPoly random_mpoly(int nvars, int max_terms = 5, int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    MPoly p(nvars);
    int t = nterms(rng());
    for (int i = 0; i < t; ++i) {
        ExpVec e(nvars);
        for (int& x : e) x = exp(rng());
        p.add_term(e, random_rational());
    }
    return p;
}

inline MPoly random_nonzero_mpoly(int nvars, int max_terms = 5, int max_exp = 3) {
    for (;;) {
        MPoly p = random_mpoly(nvars, max_terms, max_exp);
        if (!p.is_zero()) return p;
    }
}

inline UPoly random_upoly(int max_deg, bool nonzero = false) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    for (;;) {
        int d = deg(rng());
        std::vector<Rational> c(d + 1);
        for (auto& x : c) x = random_rational();
        UPoly p(std::move(c));
        if (!nonzero || !p.is_zero()) return p;
    }
}

/// Random functor character polynomial: deg >= 1, nonzero leading term.
inline UPoly random_functor_poly(int max_deg) {
    std::uniform_int_distribution<int> deg(1, max_deg);
    int d = deg(rng());
    std::vector<Rational> c(d + 1);
    for (auto& x : c) x = random_rational(4);
    while (c[d].is_zero()) c[d] = random_rational(4);
    return UPoly(std::move(c));
}

}  // namespace testutil
