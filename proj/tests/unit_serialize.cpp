#include <doctest.h>

#include "covops/bernstein.hpp"
#include "covops/covariant.hpp"
#include "covops/omega.hpp"
#include "covops/rng.hpp"
#include "covops/serialize.hpp"

using namespace covops;

TEST_CASE("polynomial text format") {
    VarUniverse u = VarUniverse::standard(1);
    int nv = u.count();
    Polynomial x = Polynomial::variable(nv, u.x(1, 1));
    Polynomial y = Polynomial::variable(nv, u.y(1, 1));

    CHECK(poly_to_string(Polynomial(nv), u) == "0");
    CHECK(poly_to_string(Polynomial::constant(nv, rat(-7, 3)), u) == "-7/3");
    Polynomial p = x * x * 3 - x * y * rat(1, 2) + Polynomial::constant(nv, 4);
    CHECK(poly_to_string(p, u) == "3 * x[1][1]^2 + -1/2 * x[1][1] * y[1][1] + 4");
    CHECK(poly_parse(poly_to_string(p, u), u) == p);
    CHECK(poly_parse("0", u).is_zero());

    // mismatched universe (different variable count)
    CHECK_THROWS_AS(poly_to_string(p, VarUniverse::standard(2)), dimension_error);
}

TEST_CASE("polynomial round-trip on random data") {
    for (int m : {1, 2}) {
        VarUniverse u = VarUniverse::standard(m);
        std::vector<int> vars(u.count());
        for (int v = 0; v < u.count(); ++v) vars[v] = v;
        Sampler rng(4242 + m);
        for (int i = 0; i < 25; ++i) {
            Polynomial p = rng.poly(u.count(), vars, 3, 5);
            std::string s = poly_to_string(p, u);
            Polynomial q = poly_parse(s, u);
            CHECK(q == p);
            CHECK(poly_to_string(q, u) == s); // byte-identical reserialization
        }
    }
}

TEST_CASE("polynomial parse errors") {
    VarUniverse u = VarUniverse::standard(1);
    CHECK_THROWS_AS(poly_parse("", u), parse_error);
    CHECK_THROWS_AS(poly_parse("2 * bogus", u), parse_error);
    CHECK_THROWS_AS(poly_parse("x[1][1]", u), parse_error);       // missing coefficient
    CHECK_THROWS_AS(poly_parse("2 * x[1][1]^0", u), parse_error); // nonpositive exponent
    CHECK_THROWS_AS(poly_parse("2 * x[1][1]^z", u), parse_error);
}

namespace {

void roundtrip_diff(const DiffOperator& op, const OperatorMeta& meta) {
    std::string s = operator_to_string(op, meta);
    ParsedOperator pr = operator_parse(s);
    REQUIRE(!pr.bidifferential);
    CHECK(*pr.op == op);
    CHECK(pr.meta.kind == meta.kind);
    CHECK(pr.meta.k == meta.k);
    CHECK(pr.meta.symbolic == meta.symbolic);
    CHECK(operator_to_string(*pr.op, pr.meta) == s);
}

void roundtrip_bidiff(const BiDiffOperator& op, const OperatorMeta& meta) {
    std::string s = operator_to_string(op, meta);
    ParsedOperator pr = operator_parse(s);
    REQUIRE(pr.bidifferential);
    CHECK(*pr.biop == op);
    CHECK(operator_to_string(*pr.biop, pr.meta) == s);
}

} // namespace

TEST_CASE("operator round-trips are byte identical") {
    OperatorMeta md;
    md.kind = "D";
    roundtrip_diff(build_D(1), md);
    roundtrip_diff(build_D(2), md);

    OperatorMeta mh;
    mh.kind = "H";
    mh.symbolic = false;
    mh.s_val = rat(1, 2);
    mh.t_val = Rational(-3);
    roundtrip_diff(specialize_params(build_H(2), *mh.s_val, *mh.t_val), mh);

    OperatorMeta mb;
    mb.kind = "B";
    mb.k = 2;
    mb.symbolic = false;
    mb.lambda_mu = true;
    mb.s_val = Rational(2);
    mb.t_val = Rational(3);
    mb.scalar_dropped = "(i/(2*pi))^m";
    roundtrip_bidiff(build_B_at(1, 2, Rational(2), Rational(3)), mb);

    OperatorMeta mo;
    mo.kind = "omega";
    mo.symbolic = false;
    roundtrip_diff(omega::cayley_omega(1), mo);
    roundtrip_diff(omega::cayley_omega(2), mo);
}

TEST_CASE("operator header contents") {
    OperatorMeta mb;
    mb.kind = "B";
    mb.k = 1;
    mb.symbolic = false;
    mb.lambda_mu = true;
    mb.s_val = Rational(2);
    mb.t_val = rat(-1, 2);
    std::string s = operator_to_string(build_B_at(1, 1, Rational(2), rat(-1, 2)), mb);
    CHECK(s.find("covops-operator v1\n") == 0);
    CHECK(s.find("universe standard m 1\n") != std::string::npos);
    CHECK(s.find("kind B\n") != std::string::npos);
    CHECK(s.find("k 1\n") != std::string::npos);
    CHECK(s.find("form bidifferential\n") != std::string::npos);
    CHECK(s.find("params lambda 2 mu -1/2\n") != std::string::npos);
    CHECK(s.find("terms 2\n") != std::string::npos);

    ParsedOperator pr = operator_parse(s);
    CHECK(pr.meta.lambda_mu);
    CHECK(*pr.meta.s_val == 2);
    CHECK(*pr.meta.t_val == rat(-1, 2));
    CHECK(pr.universe().m == 1);
}

TEST_CASE("operator parse errors") {
    OperatorMeta md;
    md.kind = "D";
    std::string good = operator_to_string(build_D(1), md);

    CHECK_THROWS_AS(operator_parse("covops v0\n"), parse_error);
    CHECK_THROWS_AS(operator_parse("covops-operator v1\nuniverse weird m 1\n"), parse_error);
    // truncate: drop the last term line
    std::string cut = good.substr(0, good.rfind("\n", good.size() - 2) + 1);
    CHECK_THROWS_AS(operator_parse(cut), parse_error);
    // corrupt a multi-index entry count
    std::string bad = good;
    bad.replace(bad.find(" || "), 4, " || 0 ");
    CHECK_THROWS_AS(operator_parse(bad), parse_error);
}
