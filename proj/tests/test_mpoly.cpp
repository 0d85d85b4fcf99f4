#include <doctest.h>

#include "fusion/mpoly.hpp"
#include "helpers.hpp"

using namespace fusion;
using testutil::random_mpoly;
using testutil::random_nonzero_mpoly;

namespace {
MPoly var(int n, int i) { return MPoly::variable(n, i); }
}  // namespace

TEST_CASE("grevlex order basics") {
    // degree dominates
    CHECK(grevlex_less({1, 0}, {1, 1}));
    // ties break by last differing coordinate, smaller entry there wins
    CHECK(grevlex_less({0, 2}, {1, 1}));
    CHECK(grevlex_less({1, 1}, {2, 0}));
    // strict weak order: irreflexive
    CHECK_FALSE(grevlex_less({1, 2}, {1, 2}));
}

TEST_CASE("mpoly arithmetic examples") {
    int n = 2;
    MPoly t1 = var(n, 0), t2 = var(n, 1);
    CHECK((t1 + t2) * (t1 - t2) == t1 * t1 - t2 * t2);
    MPoly p = random_mpoly(n);
    CHECK(p + MPoly::zero(n) == p);

    MPoly s = var(3, 0) + var(3, 1) + var(3, 2);
    MPoly sq = s * s;
    CHECK(sq.term_count() == 6);
    ExpVec cross{1, 1, 0};
    CHECK(sq.coeff(cross) == Rational(2));
    ExpVec square{2, 0, 0};
    CHECK(sq.coeff(square) == Rational(1));
}

TEST_CASE("mpoly variable count mismatch") {
    CHECK_THROWS_AS(var(2, 0) + var(3, 0), StructuralError);
}

TEST_CASE("mpoly exact division examples") {
    MPoly t1 = var(2, 0), t2 = var(2, 1);
    CHECK((t1 * t1 - t2 * t2).exact_div(t1 - t2) == t1 + t2);
    CHECK_THROWS_AS((t1 + t2).exact_div(t1 - t2), NotDivisible);

    // Delta_3 / (t1 - t2) = (t1 - t3)(t2 - t3)
    MPoly a = var(3, 0), b = var(3, 1), c = var(3, 2);
    MPoly delta3 = (a - b) * (a - c) * (b - c);
    CHECK(delta3.exact_div(a - b) == (a - c) * (b - c));
}

TEST_CASE("mpoly ring axioms on random polynomials") {
    for (int i = 0; i < 200; ++i) {
        int n = 1 + i % 3;
        MPoly a = random_mpoly(n), b = random_mpoly(n), c = random_mpoly(n);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("mpoly exact_div recovers factors") {
    for (int i = 0; i < 200; ++i) {
        int n = 1 + i % 3;
        MPoly a = random_mpoly(n), b = random_nonzero_mpoly(n);
        CHECK((a * b).exact_div(b) == a);
    }
}

TEST_CASE("mpoly substitute and evaluate") {
    MPoly p = var(2, 0) * var(2, 0) + var(2, 1);  // t1^2 + t2
    std::vector<MPoly> args{var(2, 1), var(2, 0)};
    CHECK(p.substitute(args) == var(2, 1) * var(2, 1) + var(2, 0));
    CHECK(p.evaluate({Rational(2), Rational(3)}) == Rational(7));
}

TEST_CASE("mpoly derivative and permutation") {
    MPoly p = var(2, 0).pow(3) * var(2, 1);
    CHECK(p.derivative(0) == var(2, 0).pow(2) * var(2, 1).scaled(Rational(3)));
    CHECK(p.permute_variables({1, 0}) == var(2, 1).pow(3) * var(2, 0));
}

TEST_CASE("mpoly primitive part and monic") {
    MPoly p = (var(2, 0) + var(2, 1)).scaled(Rational(-4, 6));
    MPoly prim = p.primitive_part();
    CHECK(prim == var(2, 0) + var(2, 1));
    CHECK(p.monic().leading().second == Rational(1));
    CHECK(MPoly::zero(2).primitive_part() == MPoly::zero(2));
}
