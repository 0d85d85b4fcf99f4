#include <doctest.h>

#include "fusion/ideal.hpp"
#include "fusion/quotient.hpp"
#include "helpers.hpp"

using namespace fusion;

namespace {

QuotientAlgebra classical_quotient(int n, int k) {
    FunctorSpec spec = FunctorSpec::classical(n, k);
    IdealPresentation pres = ideal_presentation(spec);
    return QuotientAlgebra::build(buchberger(pres.elem_cn1, n - 1));
}

}  // namespace

TEST_CASE("quotient dimensions for classical ideals") {
    for (int k = 0; k <= 4; ++k) CHECK(classical_quotient(2, k).dimension() == k + 1);
    CHECK(classical_quotient(3, 1).dimension() == 3);
    CHECK(classical_quotient(3, 2).dimension() == 6);
}

TEST_CASE("unit and infinite-dimensional cases") {
    GroebnerBasis unit = buchberger({MPoly::constant(2, Rational(1))}, 2);
    CHECK(QuotientAlgebra::build(unit).dimension() == 0);

    GroebnerBasis curve = buchberger({MPoly::variable(2, 0) * MPoly::variable(2, 1)}, 2);
    CHECK_THROWS_AS(QuotientAlgebra::build(curve), DimensionError);
}

TEST_CASE("coords and multiplication") {
    QuotientAlgebra a = classical_quotient(2, 1);  // Q[c1]/(c1^2 - 1)
    MPoly c1 = MPoly::variable(1, 0);
    auto coords_sq = a.coords(c1 * c1);
    CHECK(a.from_coords(coords_sq) == MPoly::constant(1, Rational(1)));

    auto u = a.coords(c1);
    auto prod = a.multiply(u, u);
    CHECK(a.from_coords(prod) == MPoly::constant(1, Rational(1)));
}

TEST_CASE("multiplication matrices commute and associate") {
    QuotientAlgebra a = classical_quotient(3, 2);
    int nv = a.nvars();
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            CHECK(a.mul_matrix(i) * a.mul_matrix(j) == a.mul_matrix(j) * a.mul_matrix(i));

    for (int trial = 0; trial < 200; ++trial) {
        MPoly p = testutil::random_mpoly(nv, 3, 2), q = testutil::random_mpoly(nv, 3, 2),
              r = testutil::random_mpoly(nv, 3, 2);
        auto cp = a.coords(p), cq = a.coords(q), cr = a.coords(r);
        CHECK(a.multiply(a.multiply(cp, cq), cr) == a.multiply(cp, a.multiply(cq, cr)));
        CHECK(a.multiply(cp, cq) == a.multiply(cq, cp));
    }
}

TEST_CASE("localization examples") {
    // invertible element: localization is the identity
    QuotientAlgebra a = classical_quotient(2, 1);
    MPoly c1 = MPoly::variable(1, 0);
    LocalizedQuotient loc = localize_artinian(a, c1);  // c1^2 = 1, invertible
    CHECK(loc.dimension == a.dimension());
    CHECK(loc.kernel_ideal.cols() == 0);

    // nilpotent element kills everything
    GroebnerBasis gb = buchberger({MPoly::variable(1, 0, 2)}, 1);
    QuotientAlgebra dual = QuotientAlgebra::build(gb);
    LocalizedQuotient zero = localize_artinian(dual, MPoly::variable(1, 0));
    CHECK(zero.dimension == 0);

    // classical SU(2)_1: u = image of F(t1)F(t2) = 1
    FunctorSpec spec = FunctorSpec::classical(2, 1);
    TorusElem p = LocalizedElem::f_product(2, spec.f);
    CHECK(p == TorusElem::one(2));  // (t1 t2)^3 = 1
    LocalizedQuotient triv = localize_artinian(a, MPoly::constant(1, Rational(1)));
    CHECK(triv.dimension == 2);
}

TEST_CASE("localization leaves u invertible") {
    // Q[x]/(x^2(x-1)) localized at x: the x=0 part dies, dim 3 -> 1
    MPoly x = MPoly::variable(1, 0);
    GroebnerBasis gb = buchberger({x * x * (x - MPoly::constant(1, Rational(1)))}, 1);
    QuotientAlgebra a = QuotientAlgebra::build(gb);
    CHECK(a.dimension() == 3);
    LocalizedQuotient loc = localize_artinian(a, x);
    CHECK(loc.dimension == 1);
    CHECK(!loc.mul_u.det().is_zero());
}
