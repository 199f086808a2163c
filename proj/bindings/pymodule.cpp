// python bindings. Everything crosses the boundary as text (rationals "p/q",
// polynomials and operators in their exact serialized forms, reports as JSON)
// so no precision is lost and round-trips stay byte-identical.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "covops/classical.hpp"
#include "covops/omega.hpp"
#include "covops/serialize.hpp"
#include "covops/suites.hpp"

namespace py = pybind11;
using namespace covops;

namespace {

using StrMatrix = std::vector<std::vector<std::string>>;

Parity parity_of(const std::string& s) {
    if (s == "+" || s == "plus") return Parity::plus;
    if (s == "-" || s == "minus") return Parity::minus;
    throw range_error("parity must be '+' or '-'");
}

RatMatrix matrix_of(const StrMatrix& rows) {
    if (rows.empty() || rows[0].empty()) throw dimension_error("empty matrix");
    RatMatrix x(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < x.rows; ++i) {
        if (static_cast<int>(rows[i].size()) != x.cols) throw dimension_error("ragged matrix");
        for (int j = 0; j < x.cols; ++j) x.at(i + 1, j + 1) = rat_parse(rows[i][j]);
    }
    return x;
}

StrMatrix matrix_str(const RatMatrix& x) {
    StrMatrix rows(x.rows, std::vector<std::string>(x.cols));
    for (int i = 1; i <= x.rows; ++i)
        for (int j = 1; j <= x.cols; ++j) rows[i - 1][j - 1] = rat_str(x.at(i, j));
    return rows;
}

GroupElement element_of(const StrMatrix& rows) {
    RatMatrix g = matrix_of(rows);
    if (g.rows != g.cols || g.rows % 2) throw dimension_error("group element must be a 2m x 2m matrix");
    int m = g.rows / 2;
    RatMatrix a(m, m), b(m, m), c(m, m), d(m, m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            a.at(i, j) = g.at(i, j);
            b.at(i, j) = g.at(i, m + j);
            c.at(i, j) = g.at(m + i, j);
            d.at(i, j) = g.at(m + i, m + j);
        }
    return GroupElement::from_blocks(a, b, c, d);
}

VarUniverse universe_of(int m, const std::string& kind) {
    if (kind == "standard") return VarUniverse::standard(m);
    if (kind == "homogeneous") return VarUniverse::homogeneous(m);
    throw range_error("universe must be 'standard' or 'homogeneous'");
}

// mirrors `covops build`
std::string build_operator(const std::string& kind, int m, std::optional<int> k, std::optional<long> lam,
                           std::optional<long> mu) {
    if (lam.has_value() != mu.has_value()) throw range_error("specialize both lambda and mu or neither");
    OperatorMeta meta;
    meta.kind = kind;
    meta.symbolic = !lam;
    if (lam) {
        meta.lambda_mu = true;
        meta.s_val = Rational(*lam);
        meta.t_val = Rational(*mu);
    }
    if (kind == "H") {
        DiffOperator H = build_H(m);
        if (lam) H = specialize_params(H, Rational(m - *lam), Rational(m - *mu));
        return operator_to_string(H, meta);
    }
    if (kind == "D") {
        return lam ? operator_to_string(build_D_at(m, Rational(*lam), Rational(*mu)), meta)
                   : operator_to_string(build_D(m), meta);
    }
    if (kind == "B") {
        if (!k) throw range_error("kind B needs k");
        meta.k = *k;
        meta.scalar_dropped = "(i/(2*pi))^" + std::to_string(m);
        return lam ? operator_to_string(build_B_at(m, *k, Rational(*lam), Rational(*mu)), meta)
                   : operator_to_string(build_B(m, *k), meta);
    }
    if (kind == "omega") {
        meta.symbolic = false;
        return operator_to_string(omega::cayley_omega(m), meta);
    }
    if (kind == "r") {
        if (!k) throw range_error("kind r needs k");
        meta.k = *k;
        if (lam) return operator_to_string(specialize_params(classical::build_r(*k), Rational(*lam), Rational(*mu)), meta);
        return operator_to_string(classical::build_r(*k), meta);
    }
    throw range_error("unknown kind '" + kind + "'");
}

} // namespace

PYBIND11_MODULE(_covops, mod) {
    mod.doc() = "exact covariant bi-differential operators on matrix space";

    py::register_exception<parse_error>(mod, "ParseError", PyExc_ValueError);
    py::register_exception<pole_error>(mod, "PoleError", PyExc_ZeroDivisionError);

    mod.def("suite_names", [] { return suite_names(); }, "names accepted by verify()");

    mod.def(
        "verify",
        [](const std::string& suite, std::vector<int> ms, std::vector<int> ks, std::vector<long> lambdas,
           std::vector<long> mus, int samples, std::uint64_t seed, bool inject_fault) {
            SuiteConfig cfg;
            cfg.ms = std::move(ms);
            cfg.ks = std::move(ks);
            cfg.lambdas = std::move(lambdas);
            cfg.mus = std::move(mus);
            cfg.samples = samples;
            cfg.seed = seed;
            cfg.inject_fault = inject_fault;
            return run_suite(suite, cfg).dump(2);
        },
        py::arg("suite") = "all", py::arg("ms") = std::vector<int>{1, 2}, py::arg("ks") = std::vector<int>{1, 2},
        py::arg("lambdas") = std::vector<long>{-2, -1, 0, 1, 2, 3}, py::arg("mus") = std::vector<long>{-2, -1, 0, 1, 2, 3},
        py::arg("samples") = 20, py::arg("seed") = 20260815ULL, py::arg("inject_fault") = false,
        "run a verification suite; returns the JSON report");

    mod.def(
        "report_passed", [](const std::string& report) { return !report_has_failure(Report::parse(report)); },
        py::arg("report"), "true when a verify() report contains no failing check");

    mod.def("build_operator", &build_operator, py::arg("kind"), py::arg("m"), py::arg("k") = std::nullopt,
            py::arg("lam") = std::nullopt, py::arg("mu") = std::nullopt,
            "serialized H, D, B, omega or r; lam/mu specialize the weights");

    mod.def(
        "poly_canonical",
        [](const std::string& text, int m, const std::string& universe) {
            VarUniverse u = universe_of(m, universe);
            return poly_to_string(poly_parse(text, u), u);
        },
        py::arg("text"), py::arg("m"), py::arg("universe") = "standard",
        "parse a polynomial and return its canonical serialization");

    mod.def(
        "apply_operator",
        [](const std::string& op_text, const std::string& f_text) {
            ParsedOperator p = operator_parse(op_text);
            const VarUniverse& u = p.universe();
            Polynomial f = poly_parse(f_text, u);
            Polynomial out = p.bidifferential ? p.biop->apply(f) : p.op->apply(f);
            return poly_to_string(out, u);
        },
        py::arg("operator"), py::arg("f"), "apply a serialized operator to a polynomial");

    mod.def(
        "act", [](const StrMatrix& g, const StrMatrix& x) { return matrix_str(act(element_of(g), matrix_of(x))); },
        py::arg("g"), py::arg("x"), "g(x) = (a x + b)(c x + d)^{-1}, entries as exact rational strings");

    mod.def(
        "alpha", [](const StrMatrix& g, const StrMatrix& x) { return rat_str(alpha(element_of(g), matrix_of(x))); },
        py::arg("g"), py::arg("x"), "automorphy factor det(c x + d)");

    mod.def(
        "normalization_d",
        [](int m, const std::string& lam, const std::string& mu, const std::string& eps, const std::string& eta) {
            NormalizationScalar d = normalization_d(m, rat_parse(lam), rat_parse(mu), parity_of(eps), parity_of(eta));
            py::dict out;
            out["value_num"] = rat_str(d.value_num);
            out["value_den"] = rat_str(d.value_den);
            out["power_of_two"] = d.power_of_two;
            out["power_of_pi"] = d.power_of_pi;
            out["power_of_i"] = d.power_of_i;
            return out;
        },
        py::arg("m"), py::arg("lam"), py::arg("mu"), py::arg("eps"), py::arg("eta"),
        "closed-form scalar d(lambda, mu, eps, eta); raises PoleError on a pole");

    mod.def(
        "transvectant",
        [](const std::string& p, const std::string& q, int l, int md, int k) {
            VarUniverse u = VarUniverse::standard(1);
            Polynomial out = classical::transvectant(poly_parse(p, u), poly_parse(q, u), l, md, k);
            return poly_to_string(out, u);
        },
        py::arg("p"), py::arg("q"), py::arg("l"), py::arg("md"), py::arg("k"),
        "classical k-th transvectant of p(x), q(x) of degrees <= l, md");

    mod.def(
        "rankin_cohen",
        [](int k, long l, long md) {
            auto rc = classical::rankin_cohen(k, l, md);
            OperatorMeta meta{"r", k, false, true, Rational(l), Rational(md)};
            return py::make_tuple(operator_to_string(rc.op, meta), rc.weight);
        },
        py::arg("k"), py::arg("l"), py::arg("md"), "(serialized bracket, resulting weight) at weights (l, md)");
}
