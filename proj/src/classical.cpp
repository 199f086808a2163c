#include "covops/classical.hpp"

namespace covops::classical {

DiffOperator build_omega() {
    VarUniverse u = VarUniverse::standard(1);
    int nv = u.count();
    DiffOperator w(u);
    w.add_term({1, 0}, -Polynomial::variable(nv, u.t()));
    w.add_term({0, 1}, Polynomial::variable(nv, u.s()));
    w.add_term({1, 1}, Polynomial::variable(nv, u.x(1, 1)) - Polynomial::variable(nv, u.y(1, 1)));
    return w;
}

BiDiffOperator build_r(int k) {
    if (k < 0) throw range_error("bracket depth must be >= 0");
    VarUniverse u = VarUniverse::standard(1);
    int nv = u.count();
    Polynomial lam = Polynomial::variable(nv, u.s()), mu = Polynomial::variable(nv, u.t());
    Rational kfact = rat_factorial(k);
    BiDiffOperator r(u);
    for (int i = 0; i <= k; ++i) {
        int j = k - i;
        Polynomial c = gen_binom(-lam - Polynomial::constant(nv, i), j) *
                       gen_binom(-mu - Polynomial::constant(nv, j), i) * kfact;
        if (j % 2) c = -c;
        r.add_term({i, j}, c);
    }
    return r;
}

bool check_B_equals_r(int k) { return build_B(1, k) == build_r(k); }

Polynomial transvectant(const Polynomial& p, const Polynomial& q, int l, int md, int k) {
    VarUniverse u = VarUniverse::standard(1);
    int nv = u.count();
    if (p.nvars() != nv || q.nvars() != nv) throw dimension_error("transvectant operands over wrong variable set");
    for (int v = 1; v < nv; ++v)
        if (p.depends_on(v) || q.depends_on(v))
            throw range_error("transvectant operands must be polynomials in x only");
    if (p.total_degree() > l || q.total_degree() > md)
        throw range_error("transvectant operand degree exceeds its weight");
    if (k < 0 || k > std::min(l, md)) throw range_error("transvectant depth out of range");
    // lift q to the y slot, form p(x) q(y), apply the bracket at weights (-l, -md)
    std::vector<Polynomial> img;
    std::vector<const Polynomial*> images(nv, nullptr);
    for (int v = 0; v < nv; ++v) img.push_back(Polynomial::variable(nv, v));
    img[u.x(1, 1)] = Polynomial::variable(nv, u.y(1, 1));
    for (int v = 0; v < nv; ++v) images[v] = &img[v];
    Polynomial phi = p * q.substitute(images, nv);
    return specialize_params(build_r(k), Rational(-l), Rational(-md)).apply(phi);
}

RankinCohen rankin_cohen(int k, long l, long md) {
    if (l < 0 || md < 0) throw range_error("rankin_cohen expects nonnegative weights");
    return {specialize_params(build_r(k), Rational(l), Rational(md)), l + md + 2 * k};
}

} // namespace covops::classical
