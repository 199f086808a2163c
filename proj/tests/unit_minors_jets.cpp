#include <doctest.h>

#include "covops/jet.hpp"
#include "covops/minors.hpp"
#include "covops/rng.hpp"
#include "covops/vars.hpp"
#include "naive.hpp"

using namespace covops;

TEST_CASE("determinants and minors against permutation expansion") {
    for (int m : {1, 2, 3}) {
        VarUniverse u = VarUniverse::standard(m);
        MatrixSym X = sym_x(u);
        std::vector<Polynomial> entries;
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) entries.push_back(X.at(i, j));
        MinorTable T(X);
        CHECK(T.det() == naive::det_perm(entries, m, u.count()));
        // the full minor is the determinant; the empty minor is 1
        CHECK(T.minor(principal_set(m, m), principal_set(m, m)) == T.det());
        CHECK(T.minor({}, {}) == Polynomial::constant(u.count(), 1));
    }
}

TEST_CASE("2x2 minor values") {
    VarUniverse u = VarUniverse::standard(2);
    MinorTable T(sym_x(u));
    Polynomial x11 = Polynomial::variable(u.count(), u.x(1, 1));
    Polynomial x12 = Polynomial::variable(u.count(), u.x(1, 2));
    Polynomial x21 = Polynomial::variable(u.count(), u.x(2, 1));
    Polynomial x22 = Polynomial::variable(u.count(), u.x(2, 2));
    CHECK(T.minor({1}, {2}) == x12);
    CHECK(T.minor({2}, {1}) == x21);
    CHECK(T.det() == x11 * x22 - x12 * x21);
    CHECK_THROWS_AS(T.minor({1}, {1, 2}), range_error);
    CHECK_THROWS_AS(T.minor({0}, {1}), range_error);
}

TEST_CASE("minor of the difference matrix") {
    VarUniverse u = VarUniverse::standard(2);
    MinorTable D(sym_diff(sym_y(u), sym_x(u)));
    Polynomial want = Polynomial::variable(u.count(), u.y(2, 1)) - Polynomial::variable(u.count(), u.x(2, 1));
    CHECK(D.minor({2}, {1}) == want);
}

TEST_CASE("random numeric determinants m=3") {
    VarUniverse u = VarUniverse::standard(3);
    MinorTable T(sym_x(u));
    Sampler rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<Rational> pt(u.count(), Rational(0));
        for (int v = 0; v < 9; ++v) pt[v] = rng.small_rational();
        // cofactor expansion of the numeric matrix along the first row
        Rational det = pt[0] * (pt[4] * pt[8] - pt[5] * pt[7]) - pt[1] * (pt[3] * pt[8] - pt[5] * pt[6]) +
                       pt[2] * (pt[3] * pt[7] - pt[4] * pt[6]);
        CHECK(T.det().eval(pt) == det);
    }
}

TEST_CASE("jet of a polynomial round-trips") {
    Sampler rng(11);
    std::vector<int> vars{0, 1};
    auto sp = JetSpace::make(vars, 4);
    for (int rep = 0; rep < 10; ++rep) {
        Polynomial p = rng.poly(2, vars, 4, 5);
        std::vector<Rational> base{rng.small_rational(), rng.small_rational()};
        Jet j = jet_of_polynomial(p, sp, base);
        CHECK(polynomial_from_jet(j, 2) == p);
        CHECK(j.value() == p.eval(base));
    }
}

TEST_CASE("jet multiplication truncates correctly") {
    Sampler rng(13);
    std::vector<int> vars{0, 1};
    auto sp = JetSpace::make(vars, 3);
    for (int rep = 0; rep < 10; ++rep) {
        Polynomial a = rng.poly(2, vars, 3, 4), b = rng.poly(2, vars, 3, 4);
        std::vector<Rational> base{rng.small_rational(), rng.small_rational()};
        Jet ja = jet_of_polynomial(a, sp, base), jb = jet_of_polynomial(b, sp, base);
        Jet prod = ja * jb;
        // the product jet must agree with the true product's coefficients up
        // to the truncation order
        Jet want = jet_of_polynomial(a * b, sp, base);
        CHECK(prod == want);
    }
}

TEST_CASE("reciprocal jet: -1/x at 1") {
    auto sp = JetSpace::make({0}, 2);
    std::vector<Rational> base{Rational(1)};
    Jet x = Jet::of_variable(sp, base, 0);
    Jet r = -x.reciprocal();
    // -1/x = -1 + (x-1) - (x-1)^2 + ...
    CHECK(r.coefficient(Exponents{0}) == -1);
    CHECK(r.coefficient(Exponents{1}) == 1);
    CHECK(r.coefficient(Exponents{2}) == -1);
    CHECK((x * x.reciprocal()) == Jet::constant(sp, base, 1));
}

TEST_CASE("jet pow with negative exponent") {
    auto sp = JetSpace::make({0}, 3);
    std::vector<Rational> base{rat(1, 2)};
    Jet x = Jet::of_variable(sp, base, 0);
    CHECK(x.pow(-2) * x.pow(2) == Jet::constant(sp, base, 1));
    CHECK(x.pow(0) == Jet::constant(sp, base, 1));
    Jet z(sp, base); // zero jet
    CHECK_THROWS_AS(z.reciprocal(), not_defined_error);
}

TEST_CASE("order guard") {
    auto sp = JetSpace::make({0}, 1);
    std::vector<Rational> base{Rational(2)};
    Jet x = Jet::of_variable(sp, base, 0);
    CHECK_THROWS_AS(x.coefficient(Exponents{2}), insufficient_order_error);
}

TEST_CASE("eval_at_jets matches substitution then expansion") {
    Sampler rng(17);
    std::vector<int> vars{0, 1};
    auto sp = JetSpace::make(vars, 3);
    std::vector<Rational> base{rat(1, 3), rat(-1, 2)};
    for (int rep = 0; rep < 5; ++rep) {
        Polynomial p = rng.poly(2, vars, 2, 4);
        Polynomial g0 = rng.poly(2, vars, 2, 3), g1 = rng.poly(2, vars, 2, 3);
        Jet j0 = jet_of_polynomial(g0, sp, base), j1 = jet_of_polynomial(g1, sp, base);
        Jet got = eval_at_jets(p, {&j0, &j1}, sp, base);
        Polynomial composed = p.substitute({&g0, &g1}, 2);
        // agree on all coefficients up to the order
        Jet want = jet_of_polynomial(composed, sp, base);
        CHECK(got == want);
    }
}
