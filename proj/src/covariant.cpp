#include "covops/covariant.hpp"

#include "covops/bernstein.hpp"

namespace covops {

DiffOperator build_H(int m) {
    VarUniverse u = VarUniverse::standard(m);
    MinorTable XmY(sym_diff(sym_x(u), sym_y(u)));
    DiffOperator H(u);
    for (int k = 0; k <= m; ++k)
        for (const auto& [I, J] : subset_pairs(m, k)) {
            DiffOperator deriv = operator_from_symbol(u, bernstein::coeff_q(u, I, J));
            DiffOperator term =
                compose(deriv, DiffOperator::multiplication(u, XmY.minor(complement(I, m), complement(J, m))));
            if (k % 2) H -= term;
            else H += term;
        }
    return H;
}

DiffOperator build_D(int m) {
    VarUniverse u = VarUniverse::standard(m);
    Polynomial mconst = Polynomial::constant(u.count(), m);
    return map_params(build_H(m), mconst - param_s(u), mconst - param_t(u));
}

DiffOperator build_D_at(int m, const Rational& lambda, const Rational& mu) {
    return specialize_params(build_D(m), lambda, mu);
}

BiDiffOperator build_B(int m, int k) {
    if (k < 0) throw range_error("bracket depth must be >= 0");
    VarUniverse u = VarUniverse::standard(m);
    DiffOperator chain = DiffOperator::identity(u);
    DiffOperator D = build_D(m);
    for (int j = 0; j < k; ++j) chain = compose(shift_params(D, j, j), chain);
    return BiDiffOperator::restrict_diagonal(chain);
}

BiDiffOperator build_B_at(int m, int k, const Rational& lambda, const Rational& mu) {
    return specialize_params(build_B(m, k), lambda, mu);
}

bool check_constant_coefficients(const BiDiffOperator& B) { return B.constant_coefficients(); }

std::vector<Rational> gamma_v_arguments(int m, const Rational& s) {
    std::vector<Rational> args;
    args.reserve(m);
    for (int j = 1; j <= m; ++j) args.push_back((s + j) / 2);
    return args;
}

GammaFactor gamma_scalar(int m, const Rational& s, Parity eps) {
    GammaFactor g;
    if (eps == Parity::plus) {
        g.gamma_args = gamma_v_arguments(m, s);
    } else {
        g.linear = s;
        g.gamma_args = gamma_v_arguments(m, s - 1);
    }
    return g;
}

RhoFactor rho_scalar(int m, const Rational& s, Parity eps) {
    RhoFactor r;
    r.pi_exponent = -rat(m * m, 2) - Rational(m) * s;
    r.sign = eps == Parity::plus ? 1 : -1;
    r.i_power = eps == Parity::plus ? 0 : m;
    return r;
}

namespace {

// multiply (var - c) onto den, checking for a pole at the evaluated weight
void push_factor(Polynomial& den, Rational& value, int var, const Rational& at, const Rational& c,
                 const char* name) {
    Polynomial f = Polynomial::variable(2, var) - Polynomial::constant(2, c);
    Rational fv = at - c;
    if (fv == 0) {
        std::string nm = std::string(name) + " - " + rat_str(c);
        throw pole_error(nm, "normalization scalar has a pole: factor " + nm + " vanishes");
    }
    den = den * f;
    value *= fv;
}

} // namespace

NormalizationScalar normalization_d(int m, const Rational& lambda, const Rational& mu, Parity eps, Parity eta) {
    NormalizationScalar out;
    out.num = Polynomial::constant(2, 1);
    out.den = Polynomial::constant(2, 1);
    out.value_num = 1;
    out.value_den = 1;
    out.power_of_pi = 4 * m * m;
    out.power_of_i = 0;
    out.power_of_two = 0;

    // even parity contributes the descending product (w - m)(w - m - 1)...
    // with m-1 factors (empty at m=1); odd parity the single factor (w - m)
    // and a 2^{-m}.
    auto side = [&](const Rational& w, Parity p, int var, const char* name) {
        if (p == Parity::plus) {
            for (int j = 0; j <= m - 2; ++j) push_factor(out.den, out.value_den, var, w, Rational(m + j), name);
        } else {
            push_factor(out.den, out.value_den, var, w, Rational(m), name);
            out.power_of_two -= m;
        }
    };
    side(lambda, eps, 0, "lambda");
    side(mu, eta, 1, "mu");
    return out;
}

} // namespace covops
