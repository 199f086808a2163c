#include <doctest.h>

#include "covops/omega.hpp"

using namespace covops;
using namespace covops::omega;

namespace {

RatMatrix mat1(const Rational& v) {
    RatMatrix x(1, 1);
    x.at(1, 1) = v;
    return x;
}

} // namespace

TEST_CASE("cayley process operator at m=1") {
    // grid [X|Y] with X = (x1; x2), Y = (y1; y2): det = x1 y2 - y1 x2,
    // so the operator is d_{x1} d_{y2} - d_{y1} d_{x2}
    DiffOperator Om = cayley_omega(1);
    VarUniverse u = VarUniverse::homogeneous(1);
    DiffOperator want(u);
    Polynomial one = Polynomial::constant(u.count(), 1);
    // variable order: hx[1][1]=0, hx[2][1]=1, hy[1][1]=2, hy[2][1]=3
    want.add_term({1, 0, 0, 1}, one);
    want.add_term({0, 1, 1, 0}, -one);
    CHECK(Om == want);
    CHECK(Om.order() == 2);
    CHECK(cayley_omega(2).order() == 4);

    // applied to the grid determinant itself: 2
    MinorTable grid(sym_hom_grid(u));
    CHECK(Om.apply(grid.det()) == Polynomial::constant(u.count(), 2));
}

TEST_CASE("lift values at m=1") {
    VarUniverse u = VarUniverse::standard(1);
    int nv = u.count();
    Polynomial X = Polynomial::variable(nv, u.x(1, 1));
    Polynomial Y = Polynomial::variable(nv, u.y(1, 1));
    Polynomial f = X * Y;
    // weights (1,+),(2,+), blocks x=(3,2), y=(4,1):
    //   2^{-1} * 1^{-2} * f(3/2, 4) = (1/2)*6 = 3
    CHECK(lift_value(1, 1, Parity::plus, 2, Parity::plus, f, mat1(Rational(3)), mat1(Rational(2)),
                     mat1(Rational(4)), mat1(Rational(1))) == 3);
    // negative second block at odd parity flips the sign
    CHECK(lift_value(1, 1, Parity::minus, 0, Parity::plus, f, mat1(Rational(3)), mat1(Rational(-2)),
                     mat1(Rational(4)), mat1(Rational(1))) ==
          -lift_value(1, 1, Parity::plus, 0, Parity::plus, f, mat1(Rational(3)), mat1(Rational(-2)),
                      mat1(Rational(4)), mat1(Rational(1))));
    CHECK_THROWS_AS(lift_value(1, 1, Parity::plus, 1, Parity::plus, f, mat1(Rational(1)), mat1(Rational(0)),
                               mat1(Rational(1)), mat1(Rational(1))),
                    not_defined_error);
}

TEST_CASE("lift homogeneity") {
    VarUniverse u = VarUniverse::standard(1);
    int nv = u.count();
    Polynomial X = Polynomial::variable(nv, u.x(1, 1));
    Polynomial Y = Polynomial::variable(nv, u.y(1, 1));
    Polynomial f = X * X + Y;
    for (Parity eps : {Parity::plus, Parity::minus})
        for (Parity eta : {Parity::plus, Parity::minus}) {
            CHECK(check_lift_homogeneity(1, 2, eps, -1, eta, f, mat1(Rational(3)), mat1(Rational(2)),
                                         mat1(Rational(1)), mat1(rat(1, 2)), mat1(rat(-3, 2)), mat1(Rational(2))));
        }
}

TEST_CASE("lift_and_apply frozen values at m=1") {
    VarUniverse u = VarUniverse::standard(1);
    int nv = u.count();
    Polynomial X = Polynomial::variable(nv, u.x(1, 1));
    Polynomial Y = Polynomial::variable(nv, u.y(1, 1));
    // weights (0,0): F = (x1/x2)(y1/y2); Omega F at (x0,y0) = (1,2) is -1
    CHECK(lift_and_apply(1, 0, 0, X * Y, mat1(Rational(1)), mat1(Rational(2)), 1) == -1);
    // constants are annihilated
    CHECK(lift_and_apply(1, 0, 0, Polynomial::constant(nv, 7), mat1(Rational(1)), mat1(Rational(2)), 1) == 0);
    // depth 0 is plain evaluation of the lift: f(x0,y0)
    CHECK(lift_and_apply(1, 3, -2, X + Y, mat1(Rational(2)), mat1(Rational(5)), 0) == 7);
}

TEST_CASE("omega matches D at m=1") {
    auto cmp = compare_omega_vs_D(1, 2, -1, 5, 991);
    CHECK(cmp.verdict == OmegaComparison::Verdict::proportional);
    CHECK(cmp.ratio == 1);
    CHECK(cmp.samples.size() == 5);
}
