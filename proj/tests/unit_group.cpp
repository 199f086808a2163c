#include <doctest.h>

#include "covops/group.hpp"

using namespace covops;

namespace {

RatMatrix mat1(const Rational& v) {
    RatMatrix x(1, 1);
    x.at(1, 1) = v;
    return x;
}

} // namespace

TEST_CASE("rational linear algebra") {
    RatMatrix A(2, 2);
    A.at(1, 1) = 1;
    A.at(1, 2) = 2;
    A.at(2, 1) = 3;
    A.at(2, 2) = 4;
    CHECK(A.det() == -2);
    RatMatrix Ai = A.inverse();
    CHECK(A * Ai == RatMatrix::identity(2));
    CHECK(Ai * A == RatMatrix::identity(2));
    RatMatrix S(2, 2); // singular
    S.at(1, 1) = 1;
    S.at(1, 2) = 2;
    S.at(2, 1) = 2;
    S.at(2, 2) = 4;
    CHECK(S.det() == 0);
    CHECK_THROWS_AS(S.inverse(), not_defined_error);
}

TEST_CASE("group element construction and inversion") {
    for (int m : {1, 2}) {
        GroupElement i = inversion(m);
        CHECK(i.assembled().det() == 1);
        GroupElement ii = i.inverse();
        CHECK((i * ii) == identity_element(m));
        // iota^{-1} = -iota
        CHECK(ii.assembled() == (RatMatrix(2 * m, 2 * m) - i.assembled()));
    }
}

TEST_CASE("det-1 validation") {
    RatMatrix a(1, 1), b(1, 1), c(1, 1), d(1, 1);
    a.at(1, 1) = 2;
    d.at(1, 1) = 1;
    CHECK_THROWS_AS(GroupElement::from_blocks(a, b, c, d), range_error);
    a.at(1, 1) = 2;
    d.at(1, 1) = rat(1, 2);
    CHECK_NOTHROW(GroupElement::from_blocks(a, b, c, d));
}

TEST_CASE("action frozen values at m=1") {
    GroupElement i = inversion(1);
    // iota(x) = -1/x; alpha(iota, x) = x
    CHECK(act(i, mat1(Rational(2))) == mat1(rat(-1, 2)));
    CHECK(alpha(i, mat1(Rational(2))) == 2);
    CHECK_THROWS_AS(act(i, mat1(Rational(0))), not_defined_error);
    // iota^2 = -identity: acts trivially, alpha = det(-1) = -1
    GroupElement i2 = i * i;
    CHECK(act(i2, mat1(Rational(5))) == mat1(Rational(5)));
    CHECK(alpha(i2, mat1(Rational(2))) == -1);
}

TEST_CASE("translations and block diagonals") {
    RatMatrix v(2, 2);
    v.at(1, 2) = rat(1, 2);
    GroupElement n = translation(v);
    RatMatrix x = RatMatrix::identity(2);
    RatMatrix gx = act(n, x);
    CHECK(gx.at(1, 2) == rat(1, 2));
    CHECK(gx.at(1, 1) == 1);
    CHECK(alpha(n, x) == 1);

    RatMatrix a = RatMatrix::identity(2);
    a.at(1, 1) = 2;
    RatMatrix d = RatMatrix::identity(2);
    d.at(1, 1) = rat(1, 2); // det a * det d = 1
    GroupElement l = block_diagonal(a, d);
    // l(x) = a x d^{-1}
    CHECK(act(l, x) == a * x * d.inverse());
    CHECK(alpha(l, x) == d.det());
}

TEST_CASE("cocycle, kernel, jacobian on deterministic samples") {
    Sampler rng(101);
    for (int m : {1, 2}) {
        int done = 0;
        while (done < 10) {
            GroupElement g = random_element(m, rng), gp = random_element(m, rng);
            RatMatrix x(m, m), y(m, m);
            for (auto& e : x.a) e = rng.small_rational();
            for (auto& e : y.a) e = rng.small_rational();
            if (alpha(gp, x) == 0 || alpha(g * gp, x) == 0 || alpha(g, x) == 0 || alpha(g, y) == 0) continue;
            if (alpha(g, act(gp, x)) == 0) continue;
            CHECK(check_cocycle(g, gp, x));
            CHECK(check_kernel_covariance(g, x, y));
            CHECK(check_jacobian(g, x));
            ++done;
        }
    }
}

TEST_CASE("characters") {
    CHECK(character_value(Rational(-2), 3, Parity::plus) == 8);       // |t|^3
    CHECK(character_value(Rational(-2), 3, Parity::minus) == -8);     // sgn(t)|t|^3
    CHECK(character_value(Rational(2), -1, Parity::plus) == rat(1, 2));
    CHECK(character_value(Rational(-2), -1, Parity::minus) == rat(-1, 2));
    CHECK(character_value(Rational(-2), 2, Parity::plus) == 4);
    CHECK(character_value(Rational(-3), 0, Parity::minus) == -1); // pure sign character
    CHECK_THROWS_AS(character_value(Rational(0), 1, Parity::plus), not_defined_error);
    // multiplicativity: (ab)^{lam,eps} = a^{lam,eps} b^{lam,eps}
    for (Parity eps : {Parity::plus, Parity::minus})
        for (long lam : {-2L, 1L, 3L})
            CHECK(character_value(rat(-3, 2) * rat(4, 5), lam, eps) ==
                  character_value(rat(-3, 2), lam, eps) * character_value(rat(4, 5), lam, eps));
}

TEST_CASE("character jet of t^{-1} at -2") {
    auto sp = JetSpace::make({0}, 1);
    Jet t = Jet::of_variable(sp, {Rational(-2)}, 0);
    // (+): |t|^{-1} near t0 = -2 is -(t^{-1}); value 1/2
    Jet jp = character_power_jet(t, -1, Parity::plus);
    CHECK(jp.value() == rat(1, 2));
    // (-): sgn(t)|t|^{-1} = t^{-1}; value -1/2
    Jet jm = character_power_jet(t, -1, Parity::minus);
    CHECK(jm.value() == rat(-1, 2));
    CHECK(jp == -jm);
}

TEST_CASE("pi action frozen values at m=1") {
    VarUniverse u = VarUniverse::standard(1);
    int nv = u.count();
    Polynomial X = Polynomial::variable(nv, u.x(1, 1));
    GroupElement i = inversion(1);

    // pi_{0,+}(iota) x at base 1: (iota^{-1})(y) = -1/y, alpha-power is 1
    //   jet of -1/y at y0 = 1: -1 + (y-1) - (y-1)^2
    Jet j = pi_action_jet(1, {0, Parity::plus}, i, X, RatMatrix::identity(1), 2);
    CHECK(j.coefficient(Exponents{0}) == -1);
    CHECK(j.coefficient(Exponents{1}) == 1);
    CHECK(j.coefficient(Exponents{2}) == -1);

    // pi_{1,-}(iota) 1 at x0 = 2: alpha(iota^{-1}, x)^{-1,-} with
    // alpha(iota^{-1}, x) = -x, so sgn(-2)|-2|^{-1} = -1/2
    Polynomial one = Polynomial::constant(nv, 1);
    Jet k = pi_action_jet(1, {1, Parity::minus}, i, one, mat1(Rational(2)), 0);
    CHECK(k.value() == rat(-1, 2));
}

TEST_CASE("pi is a group action (pointwise functoriality)") {
    // pi_w(gh) f (x0) must factor through the two single steps:
    //   alpha((gh)^{-1}, x0)^{-w} f((gh)^{-1} x0)
    //     = alpha(g^{-1},x0)^{-w} alpha(h^{-1}, g^{-1}x0)^{-w} f(h^{-1} g^{-1} x0)
    VarUniverse u = VarUniverse::standard(1);
    int nv = u.count();
    Polynomial f = Polynomial::variable(nv, u.x(1, 1)).pow(2);
    RatMatrix v(1, 1);
    v.at(1, 1) = 1;
    GroupElement g = inversion(1), h = translation(v);
    RatMatrix x0 = mat1(Rational(2));
    for (Parity eps : {Parity::plus, Parity::minus})
        for (long lam : {-1L, 0L, 2L}) {
            Weight w{lam, eps};
            Jet lhs = pi_action_jet(1, w, g * h, f, x0, 0);
            GroupElement gi = g.inverse(), hi = h.inverse();
            RatMatrix gx = act(gi, x0);
            RatMatrix hgx = act(hi, gx);
            std::map<int, Rational> pt{{u.x(1, 1), hgx.at(1, 1)}};
            Rational rhs = character_value(alpha(gi, x0), -lam, eps) *
                           character_value(alpha(hi, gx), -lam, eps) * f.eval_partial(pt);
            CHECK(lhs.value() == rhs);
        }
}

TEST_CASE("covariance checks pass on a sample") {
    VarUniverse u = VarUniverse::standard(1);
    int nv = u.count();
    Polynomial X = Polynomial::variable(nv, u.x(1, 1));
    Polynomial Y = Polynomial::variable(nv, u.y(1, 1));
    Polynomial f = X * X + 2 * Y;
    GroupElement i = inversion(1);
    RatMatrix x0 = mat1(Rational(2)), y0 = mat1(Rational(3));
    CHECK(check_D_covariance(1, 2, Parity::plus, -1, Parity::minus, i, f, x0, y0));
    CHECK(check_B_covariance(1, 1, 2, Parity::minus, 0, Parity::plus, i, f, x0));
    CHECK(check_M_intertwine(1, -2, Parity::minus, 3, Parity::plus, i, f, x0, y0));
}

TEST_CASE("covariance session equals the one-shot helpers") {
    VarUniverse u = VarUniverse::standard(1);
    int nv = u.count();
    Polynomial X = Polynomial::variable(nv, u.x(1, 1));
    Polynomial Y = Polynomial::variable(nv, u.y(1, 1));
    Polynomial f = X * Y + X;
    GroupElement i = inversion(1);
    RatMatrix x0 = mat1(Rational(2)), y0 = mat1(rat(-1, 2));
    CovarianceSession s(1, i, f, x0, y0, 2);
    Jet a = s.transformed_jet({2, Parity::plus}, {-1, Parity::minus});
    Jet b = pi_pair_action_jet(1, {2, Parity::plus}, {-1, Parity::minus}, i, f, x0, y0, 2);
    CHECK(a == b);
    // raw/sign split reassembles the same jet
    Jet c = s.raw_jet(2, -1);
    if (s.character_signs({2, Parity::plus}, {-1, Parity::minus}) < 0) c = -c;
    CHECK(c == a);
}
