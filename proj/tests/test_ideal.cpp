#include <doctest.h>

#include "fusion/ideal.hpp"
#include "helpers.hpp"

using namespace fusion;

TEST_CASE("functor spec validation") {
    CHECK_THROWS_AS(FunctorSpec(1, UPoly::monomial(1, Rational(1))), DomainError);
    CHECK_THROWS_AS(FunctorSpec(2, UPoly::constant(Rational(3))), DomainError);
    FunctorSpec c = FunctorSpec::classical(3, 2);
    CHECK(c.f == UPoly::neg_t_power(5));
}

TEST_CASE("antisymmetric generators") {
    UPoly f = testutil::random_functor_poly(5);
    FunctorSpec spec(2, f);
    auto q = generators_antisym(spec);
    REQUIRE(q.size() == 1);
    CHECK(q[0] == f.evaluate(MPoly::variable(2, 0)) - f.evaluate(MPoly::variable(2, 1)));

    FunctorSpec spec3(3, f);
    for (const auto& qi : generators_antisym(spec3)) CHECK(is_antisymmetric(qi));
}

TEST_CASE("classical symmetric generators") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 2; ++k) {
            FunctorSpec spec = FunctorSpec::classical(n, k);
            auto c = generators_sym(spec);
            REQUIRE(static_cast<int>(c.size()) == n - 1);
            int sign = (n + k) % 2 == 0 ? 1 : -1;
            for (int j = 0; j <= n - 2; ++j)
                CHECK(c[j] == complete(k + j + 1, n).scaled(Rational(sign)));
        }
}

TEST_CASE("symmetric generators ignore the constant term") {
    UPoly f = testutil::random_functor_poly(5);
    UPoly shifted = f + UPoly::constant(Rational(7));
    for (int n = 2; n <= 3; ++n) {
        auto a = generators_sym(FunctorSpec(n, f));
        auto b = generators_sym(FunctorSpec(n, shifted));
        CHECK(a == b);
    }
}

TEST_CASE("unit ideal cases") {
    // F(t) = t at n=2: c_{F,0} = 1
    FunctorSpec spec(2, UPoly::monomial(1, Rational(1)));
    auto c = generators_sym(spec);
    CHECK(c[0] == MPoly::constant(2, Rational(1)));
    // F(t) = 1 + t at n=2: also 1
    FunctorSpec spec2(2, UPoly({Rational(1), Rational(1)}));
    CHECK(generators_sym(spec2)[0] == MPoly::constant(2, Rational(1)));
}

TEST_CASE("two-route generator identity") {
    for (int i = 0; i < 30; ++i) {
        int n = 2 + i % 3;
        FunctorSpec spec(n, testutil::random_functor_poly(5));
        auto q = generators_antisym(spec);
        auto c = generators_sym(spec);
        for (int j = 0; j <= n - 2; ++j) {
            CHECK(q[j] == vandermonde(n) * c[j]);
            CHECK(is_symmetric(c[j]));
        }
    }
}

TEST_CASE("degree bound of symmetric generators") {
    for (int i = 0; i < 30; ++i) {
        int n = 2 + i % 3;
        UPoly f = testutil::random_functor_poly(6);
        int d = static_cast<int>(f.degree());
        if (d < n - 1) continue;
        FunctorSpec spec(n, f);
        auto c = generators_sym(spec);
        for (int j = 0; j <= n - 2; ++j)
            if (d >= n - 1 - j && !c[j].is_zero()) CHECK(c[j].degree() == d + j - (n - 1));
    }
}

TEST_CASE("ideal presentation consistency") {
    FunctorSpec spec = FunctorSpec::classical(3, 1);
    IdealPresentation pres = ideal_presentation(spec);
    REQUIRE(pres.elem.size() == 2);
    for (std::size_t j = 0; j < pres.elem.size(); ++j) {
        CHECK(pres.elem[j].to_t_vars() == pres.sym[j]);
        // setting c_n = 1 then re-substituting elementaries recovers c_{F,j}
        // modulo t1...tn = 1
        std::vector<MPoly> elems;
        for (int k = 1; k <= spec.rank - 1; ++k) elems.push_back(elementary(k, spec.rank));
        TorusElem lhs(spec.rank, pres.elem_cn1[j].substitute(elems));
        CHECK(lhs == TorusElem(spec.rank, pres.sym[j]));
    }
}

TEST_CASE("su2 character") {
    // classical: chi_F = (-1)^k h_{k+1}(t, t^{-1})
    for (int k = 0; k <= 3; ++k) {
        FunctorSpec spec = FunctorSpec::classical(2, k);
        LocalizedElem chi = su2_character(spec);
        MPoly expect = complete(k + 1, 2).scaled(Rational(k % 2 == 0 ? 1 : -1));
        CHECK(chi == LocalizedElem::from_torus(2, spec.f, TorusElem(2, expect)));
    }
    // F(t) = t and F(t) = 1 + t both give chi = 1
    for (auto f : {UPoly::monomial(1, Rational(1)), UPoly({Rational(1), Rational(1)})}) {
        FunctorSpec spec(2, f);
        CHECK(su2_character(spec) == LocalizedElem::from_torus(2, f, TorusElem::one(2)));
    }
    CHECK_THROWS_AS(su2_character(FunctorSpec::classical(3, 1)), DomainError);
}

TEST_CASE("su2 character equals the symmetric generator") {
    for (int i = 0; i < 20; ++i) {
        FunctorSpec spec(2, testutil::random_functor_poly(6));
        CHECK(su2_character(spec) ==
              LocalizedElem::from_torus(2, spec.f, TorusElem(2, generators_sym(spec)[0])));
    }
}

TEST_CASE("potential") {
    // classical: V = (-1)^{n+k}/(n+k) sum t_i^{n+k}
    FunctorSpec spec = FunctorSpec::classical(3, 1);
    Potential pot = potential(spec);
    CHECK(pot.v == power_sum(4, 3).scaled(Rational(1, 4)));
    CHECK(is_symmetric(pot.v));
    CHECK(pot.g.coeff(0) == Rational(0));

    // F = 1 + 2t + t^2 at n=2
    FunctorSpec spec2(2, UPoly({Rational(1), Rational(2), Rational(1)}));
    Potential p2 = potential(spec2);
    MPoly expect = power_sum(1, 2).scaled(Rational(2)) + power_sum(2, 2).scaled(Rational(1, 2));
    CHECK(p2.v == expect);

    // potential only sees F - F(0)
    FunctorSpec spec3(2, UPoly({Rational(0), Rational(2), Rational(1)}));
    CHECK(potential(spec3).v == p2.v);
}

TEST_CASE("potential derivative identity") {
    for (int i = 0; i < 25; ++i) {
        int n = 2 + i % 4;
        FunctorSpec spec(n, testutil::random_functor_poly(6));
        CHECK(potential_derivative_check(spec).all_pass());
    }
}

TEST_CASE("Vm building-block identity") {
    for (int n = 2; n <= 5; ++n)
        for (int m = 1; m <= 10; ++m)
            for (int j = 1; j <= n; ++j) CHECK(vm_derivative_identity(m, j, n));
}
