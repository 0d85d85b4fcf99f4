#include <doctest.h>

#include "fusion/symmetric.hpp"
#include "fusion/torus.hpp"
#include "helpers.hpp"

using namespace fusion;
using testutil::rng;

namespace {

Partition random_partition_in_box(int rows, int max_part) {
    std::uniform_int_distribution<int> part(0, max_part);
    std::vector<int> parts(rows);
    for (int& p : parts) p = part(rng());
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

}  // namespace

TEST_CASE("classical bases") {
    CHECK(elementary(1, 2) == MPoly::variable(2, 0) + MPoly::variable(2, 1));
    MPoly t1 = MPoly::variable(2, 0), t2 = MPoly::variable(2, 1);
    CHECK(complete(2, 2) == t1 * t1 + t1 * t2 + t2 * t2);
    CHECK(complete(-1, 3) == MPoly::zero(3));
    CHECK(elementary(0, 3) == MPoly::constant(3, Rational(1)));
    CHECK(elementary(4, 3) == MPoly::zero(3));
    CHECK(power_sum(2, 2) == t1 * t1 + t2 * t2);
    // Newton: p2 = e1 p1 - 2 e2
    CHECK(power_sum(2, 3) == elementary(1, 3) * power_sum(1, 3) - elementary(2, 3).scaled(Rational(2)));
}

TEST_CASE("vandermonde") {
    CHECK(vandermonde(2) == MPoly::variable(2, 0) - MPoly::variable(2, 1));
    MPoly a = MPoly::variable(3, 0), b = MPoly::variable(3, 1), c = MPoly::variable(3, 2);
    CHECK(vandermonde(3) == (a - b) * (a - c) * (b - c));
    CHECK(is_antisymmetric(vandermonde(3)));
    // signed action fixes Delta
    TorusElem delta(3, vandermonde(3));
    CHECK(SignedAction::transposition(3, 0, 1, true)(delta) == delta);
}

TEST_CASE("schur examples") {
    for (int m = 0; m <= 4; ++m)
        CHECK(schur(Partition({m}), 3) == complete(m, 3));
    CHECK(schur(Partition({1, 1}), 2) == MPoly::variable(2, 0) * MPoly::variable(2, 1));
    CHECK(schur(Partition({2, 1}), 3, SchurMethod::Bialternant) ==
          schur(Partition({2, 1}), 3, SchurMethod::JacobiTrudi));
    // more parts than variables
    CHECK(schur(Partition({1, 1, 1}), 2) == MPoly::zero(2));
}

TEST_CASE("schur two-route agreement on a grid") {
    for (int n = 2; n <= 5; ++n) {
        for (long w = 0; w <= 8; ++w) {
            if (n >= 4 && w > 6) continue;  // keep runtime modest
            for (const auto& la : partitions_in_box(w, n, static_cast<int>(w))) {
                CHECK(schur(la, n, SchurMethod::Bialternant) == schur(la, n, SchurMethod::JacobiTrudi));
            }
        }
    }
}

TEST_CASE("extended bialternant") {
    for (int n = 2; n <= 4; ++n) {
        for (int m = 0; m < n - 1; ++m)
            CHECK(extended_a(UPoly::monomial(m, Rational(1)), Partition::empty(), n) == MPoly::zero(n));
        CHECK(extended_a(UPoly::monomial(n - 1, Rational(1)), Partition::empty(), n) == vandermonde(n));
    }
    UPoly f = testutil::random_functor_poly(5);
    MPoly expect = f.evaluate(MPoly::variable(2, 0)) - f.evaluate(MPoly::variable(2, 1));
    CHECK(extended_a(f, Partition::empty(), 2) == expect);
}

TEST_CASE("antisymmetrize examples") {
    MPoly t1 = MPoly::variable(2, 0), t2 = MPoly::variable(2, 1);
    CHECK(antisymmetrize(t1, true) == (t1 - t2).scaled(Rational(1, 2)));

    UPoly f = testutil::random_functor_poly(4);
    MPoly q0 = f.evaluate(t1) - f.evaluate(t2);
    CHECK(antisymmetrize(f.evaluate(t2) - f.evaluate(t1), false) == q0.scaled(Rational(-2)));

    CHECK(antisymmetrize(complete(3, 3), false) == MPoly::zero(3));
}

TEST_CASE("antisymmetrize properties") {
    for (int i = 0; i < 200; ++i) {
        int n = 2 + i % 2;
        MPoly p = testutil::random_mpoly(n);
        MPoly theta = antisymmetrize(p, true);
        CHECK(is_antisymmetric(theta));
        // anti-equivariance: theta(sigma * p) = sign(sigma) theta(p)
        auto perms = all_permutations(n);
        std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
        const auto& perm = perms[pick(rng())];
        MPoly lhs = antisymmetrize(p.permute_variables(perm), true);
        CHECK(lhs == theta.scaled(Rational(permutation_sign(perm))));
    }
}

TEST_CASE("divide_by_vandermonde") {
    CHECK(divide_by_vandermonde(vandermonde(3)) == MPoly::constant(3, Rational(1)));
    for (int n = 2; n <= 4; ++n)
        for (int m = 0; m <= 3; ++m) {
            MPoly a = extended_a(UPoly::monomial(n - 1 + m, Rational(1)), Partition::empty(), n);
            CHECK(divide_by_vandermonde(a) == complete(m, n));
        }
    // n=2, F = t^3
    MPoly q = MPoly::variable(2, 0, 3) - MPoly::variable(2, 1, 3);
    CHECK(divide_by_vandermonde(q) == complete(2, 2));
    CHECK_THROWS_AS(divide_by_vandermonde(complete(2, 2)), DomainError);
}

TEST_CASE("divide_by_vandermonde inverts multiplication by Delta") {
    for (int i = 0; i < 100; ++i) {
        int n = 2 + i % 2;
        MPoly p = testutil::random_mpoly(n);
        MPoly s(n);
        for (const auto& perm : all_permutations(n)) s += p.permute_variables(perm);
        CHECK(divide_by_vandermonde(s * vandermonde(n)) == s);
    }
}

TEST_CASE("to_elem_basis examples") {
    int n = 3;
    ElemBasisPoly p2 = to_elem_basis(power_sum(2, n), n);
    MPoly c1 = MPoly::variable(n, 0), c2 = MPoly::variable(n, 1);
    CHECK(p2.poly() == c1 * c1 - c2.scaled(Rational(2)));

    for (int k = 1; k <= n; ++k)
        CHECK(to_elem_basis(elementary(k, n), n).poly() == MPoly::variable(n, k - 1));

    ElemBasisPoly h22 = to_elem_basis(complete(2, 2), 2);
    CHECK(h22.poly() == MPoly::variable(2, 0, 2) - MPoly::variable(2, 1));

    CHECK_THROWS_AS(to_elem_basis(MPoly::variable(2, 0), 2), DomainError);
}

TEST_CASE("to_elem_basis round-trips") {
    for (int i = 0; i < 200; ++i) {
        int n = 2 + i % 3;
        MPoly p = testutil::random_mpoly(n, 4, 2);
        MPoly s(n);
        for (const auto& perm : all_permutations(n)) s += p.permute_variables(perm);
        ElemBasisPoly eb = to_elem_basis(s, n);
        CHECK(eb.to_t_vars() == s);
    }
}

TEST_CASE("pieri lemma") {
    for (int n = 2; n <= 5; ++n)
        for (int m = 0; m <= n + 4; ++m)
            CHECK(pieri_check(UPoly::monomial(m, Rational(1)), n));
    // also on dense polynomials
    for (int i = 0; i < 20; ++i) CHECK(pieri_check(testutil::random_upoly(6), 3));
}

TEST_CASE("partitions_in_box") {
    auto ps = partitions_in_box(3, 2, 3);
    CHECK(ps.size() == 2);  // (3), (2,1)
    CHECK(partitions_in_box(0, 2, 3).size() == 1);
    CHECK(partitions_in_box(5, 1, 3).empty());
}
