#include <doctest.h>

#include "covops/bernstein.hpp"
#include "covops/rng.hpp"

using namespace covops;
using namespace covops::bernstein;

TEST_CASE("coefficients p and q at m=1") {
    VarUniverse u = VarUniverse::standard(1);
    int nv = u.count();
    Polynomial X = Polynomial::variable(nv, u.x(1, 1));
    Polynomial Y = Polynomial::variable(nv, u.y(1, 1));
    Polynomial S = Polynomial::variable(nv, u.s());
    Polynomial T = Polynomial::variable(nv, u.t());
    // k = 0 carries the full-complement minors: det(x) det(y-x) resp. det(x) det(y)
    CHECK(coeff_p(u, {}, {}) == X * (Y - X));
    CHECK(coeff_q(u, {}, {}) == X * Y);
    // k = 1, I = J = {1}: p = s(y-x) - t x, q = s y - t x
    CHECK(coeff_p(u, {1}, {1}) == S * (Y - X) - T * X);
    CHECK(coeff_q(u, {1}, {1}) == S * Y - T * X);
}

TEST_CASE("E and F closed forms at m=1") {
    VarUniverse u = VarUniverse::standard(1);
    int nv = u.count();
    Polynomial X = Polynomial::variable(nv, u.x(1, 1));
    Polynomial Y = Polynomial::variable(nv, u.y(1, 1));
    Polynomial S = Polynomial::variable(nv, u.s());
    Polynomial T = Polynomial::variable(nv, u.t());

    DiffOperator E(u);
    E.add_term({0, 0}, S * (Y - X) - T * X);
    E.add_term({1, 0}, X * (Y - X));
    CHECK(build_E(1) == E);

    DiffOperator F(u);
    F.add_term({0, 0}, S * Y - T * X);
    F.add_term({1, 0}, X * Y);
    F.add_term({0, 1}, -(X * Y));
    CHECK(build_F(1) == F);

    CHECK(build_E(1).order() == 1);
    CHECK(build_F(1).order() == 1);
    CHECK(build_E(2).order() == 2);
    CHECK(build_F(2).order() == 2);
}

TEST_CASE("Bernstein-Sato identities, small exhaustive") {
    for (int m : {1, 2}) {
        for (int k = 1; k <= m; ++k)
            for (int n = 1; n <= 3; ++n) CHECK(check_bs_principal(m, k, n));
        for (int k = 0; k <= m; ++k)
            for (const auto& [I, J] : subset_pairs(m, k))
                for (int n = 1; n <= 3; ++n) {
                    CAPTURE(m);
                    CAPTURE(n);
                    CHECK(check_bs_minor(m, I, J, n));
                }
    }
    // one m=3 spot check on an off-diagonal pair
    CHECK(check_bs_minor(3, {1, 2}, {2, 3}, 2));
}

TEST_CASE("worked bs_minor instance at m=2") {
    // d/dx[1][2] (det x)^2 = 2 * (-x[2][1]) * det x, i.e. sign_sum({1},{2}) = -1
    VarUniverse u = VarUniverse::standard(2);
    MinorTable X(sym_x(u));
    Polynomial det = X.det();
    Polynomial lhs = delta_partial(u, {1}, {2}, Block::x_block).apply(det.pow(2));
    Polynomial x21 = Polynomial::variable(u.count(), u.x(2, 1));
    CHECK(lhs == Rational(-2) * x21 * det);
}

TEST_CASE("product expansions on random pairs") {
    Sampler rng(57);
    for (int m : {1, 2}) {
        VarUniverse u = VarUniverse::standard(m);
        std::vector<int> xvars(m * m);
        for (int v = 0; v < m * m; ++v) xvars[v] = v;
        for (int rep = 0; rep < 5; ++rep) {
            Polynomial f = rng.poly(u.count(), xvars, 3, 4), g = rng.poly(u.count(), xvars, 3, 4);
            CHECK(check_det_product(m, f, g));
            CHECK(check_minor_product(m, {1}, {m}, f, g));
        }
    }
}

TEST_CASE("E and F identities on sample data") {
    Sampler rng(58);
    for (int m : {1, 2}) {
        VarUniverse u = VarUniverse::standard(m);
        std::vector<int> xyvars(u.nderiv());
        for (int v = 0; v < u.nderiv(); ++v) xyvars[v] = v;
        Polynomial f = rng.poly(u.count(), xyvars, 2, 3);
        CHECK(check_E_identity(m, 2, 1, f));
        CHECK(check_F_identity(m, 1, 2, f));
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(check_bs_principal(0, 1, 1), range_error);
    CHECK_THROWS_AS(check_bs_minor(2, {3}, {1}, 1), range_error);
    CHECK_THROWS_AS(check_bs_minor(2, {1}, {1, 2}, 1), range_error);
    CHECK_THROWS_AS(check_bs_principal(2, 1, 0), range_error);
}
