#include <doctest.h>

#include "covops/classical.hpp"

using namespace covops;
using namespace covops::classical;

TEST_CASE("r_k closed forms for small k") {
    VarUniverse u = VarUniverse::standard(1);
    int nv = u.count();
    Polynomial L = Polynomial::variable(nv, u.s());
    Polynomial M = Polynomial::variable(nv, u.t());
    Polynomial one = Polynomial::constant(nv, 1);

    // k = 0: identity restriction
    BiDiffOperator r0(u);
    r0.add_term({0, 0}, one);
    CHECK(build_r(0) == r0);

    // k = 1: 1! [ (-1)^0 C(-lam,0)C(-mu-0,1) dx ... ] expands to -mu dx + lam dy? no:
    //   i=1,j=0: (-1)^0 C(-lam-1, 0) C(-mu-0, 1) dx = (-mu) dx
    //   i=0,j=1: (-1)^1 C(-lam-0, 1) C(-mu-1, 0) dy = lam dy
    BiDiffOperator r1(u);
    r1.add_term({1, 0}, -M);
    r1.add_term({0, 1}, L);
    CHECK(build_r(1) == r1);

    // k = 2: 2! [ C(-mu,2)/1 dx^2 - C(-lam-1,1)C(-mu-1,1) dxdy + C(-lam,2) dy^2 ]
    //  = mu(mu+1) dx^2 - 2(lam+1)(mu+1) dxdy + lam(lam+1) dy^2
    BiDiffOperator r2(u);
    r2.add_term({2, 0}, M * M + M);
    r2.add_term({1, 1}, Rational(-2) * (L + one) * (M + one));
    r2.add_term({0, 2}, L * L + L);
    CHECK(build_r(2) == r2);
}

TEST_CASE("the bracket chain reproduces the closed form") {
    for (int k = 0; k <= 4; ++k) {
        CAPTURE(k);
        CHECK(check_B_equals_r(k));
    }
}

TEST_CASE("transvectant frozen example") {
    VarUniverse u = VarUniverse::standard(1);
    int nv = u.count();
    Polynomial X = Polynomial::variable(nv, u.x(1, 1));
    Polynomial one = Polynomial::constant(nv, 1);
    CHECK(transvectant(X * X, X + one, 2, 1, 1) == 2 * X);
    // k = 0 is plain multiplication
    CHECK(transvectant(X * X, X + one, 2, 1, 0) == X * X * (X + one));
    // antisymmetry of the first transvectant of equal-degree forms
    Polynomial p = X * X + one, q = X * X - X;
    CHECK(transvectant(p, q, 2, 2, 1) == -transvectant(q, p, 2, 2, 1));
}

TEST_CASE("transvectant input validation") {
    VarUniverse u = VarUniverse::standard(1);
    int nv = u.count();
    Polynomial X = Polynomial::variable(nv, u.x(1, 1));
    Polynomial Y = Polynomial::variable(nv, u.y(1, 1));
    CHECK_THROWS_AS(transvectant(X.pow(3), X, 2, 1, 1), range_error); // degree exceeds l
    CHECK_THROWS_AS(transvectant(Y, X, 2, 1, 1), range_error);        // must be x-only
}

TEST_CASE("rankin_cohen weights and forms") {
    auto rc = rankin_cohen(2, 4, 6);
    CHECK(rc.weight == 4 + 6 + 2 * 2);
    VarUniverse u = VarUniverse::standard(1);
    int nv = u.count();
    // substituting lam = 4, mu = 6 into r_2: mu(mu+1) = 42, -2*5*7 = -70, lam(lam+1) = 20
    BiDiffOperator want(u);
    want.add_term({2, 0}, Polynomial::constant(nv, 42));
    want.add_term({1, 1}, Polynomial::constant(nv, -70));
    want.add_term({0, 2}, Polynomial::constant(nv, 20));
    CHECK(rc.op == want);
}
