#include "covops/bernstein.hpp"

namespace covops::bernstein {

namespace {

// shared kernel of p_{I,J} and q_{I,J}; `second` supplies the matrix whose
// minor Delta_{P^c,Q^c} multiplies in (y-x for E, y for F)
Polynomial coeff_impl(const VarUniverse& u, const IndexSubset& I, const IndexSubset& J, MinorTable& X,
                      MinorTable& second) {
    if (I.size() != J.size()) throw range_error("coefficient index sets must have equal size");
    check_subset(I, u.m);
    check_subset(J, u.m);
    int k = static_cast<int>(I.size());
    IndexSubset Ic = complement(I, u.m), Jc = complement(J, u.m);
    Polynomial ps = param_s(u), pt = param_t(u);
    Polynomial acc(u.count());
    for (int l = 0; l <= k; ++l) {
        Polynomial weight = pochhammer(ps, k - l) * pochhammer(pt, l);
        if (l % 2) weight = -weight;
        for (const auto& P : subsets_of(I, l))
            for (const auto& Q : subsets_of(J, l)) {
                Polynomial term = X.minor(set_union(Ic, P), set_union(Jc, Q)) *
                                  second.minor(complement(P, u.m), complement(Q, u.m));
                if (sign_positions(P, I, Q, J) < 0) term = -term;
                acc += weight * term;
            }
    }
    return acc;
}

} // namespace

Polynomial coeff_p(const VarUniverse& u, const IndexSubset& I, const IndexSubset& J) {
    MinorTable X(sym_x(u)), YmX(sym_diff(sym_y(u), sym_x(u)));
    return coeff_impl(u, I, J, X, YmX);
}

Polynomial coeff_q(const VarUniverse& u, const IndexSubset& I, const IndexSubset& J) {
    MinorTable X(sym_x(u)), Y(sym_y(u));
    return coeff_impl(u, I, J, X, Y);
}

DiffOperator build_E(int m) {
    VarUniverse u = VarUniverse::standard(m);
    MinorTable X(sym_x(u)), YmX(sym_diff(sym_y(u), sym_x(u)));
    DiffOperator E(u);
    for (int k = 0; k <= m; ++k)
        for (const auto& [I, J] : subset_pairs(m, k))
            E += delta_partial(u, complement(I, m), complement(J, m), Block::x_block)
                     .scaled_by(coeff_impl(u, I, J, X, YmX));
    return E;
}

DiffOperator build_F(int m) {
    VarUniverse u = VarUniverse::standard(m);
    MinorTable X(sym_x(u)), Y(sym_y(u));
    DiffOperator F(u);
    for (int k = 0; k <= m; ++k)
        for (const auto& [I, J] : subset_pairs(m, k))
            F += delta_partial(u, complement(I, m), complement(J, m), Block::x_minus_y)
                     .scaled_by(coeff_impl(u, I, J, X, Y));
    return F;
}

bool check_bs_principal(int m, int k, int n) {
    return check_bs_minor(m, principal_set(m, k), principal_set(m, k), n);
}

bool check_bs_minor(int m, const IndexSubset& I, const IndexSubset& J, int n) {
    if (n < 1) throw range_error("power n must be >= 1");
    VarUniverse u = VarUniverse::standard(m);
    MinorTable X(sym_x(u));
    Polynomial det = X.det();
    Polynomial lhs = delta_partial(u, I, J, Block::x_block).apply(det.pow(n));
    Polynomial rhs = pochhammer(Rational(n), static_cast<int>(I.size())) *
                     (X.minor(complement(I, m), complement(J, m)) * det.pow(n - 1));
    if (sign_sum(I, J) < 0) rhs = -rhs;
    return lhs == rhs;
}

bool check_det_product(int m, const Polynomial& f, const Polynomial& g) {
    VarUniverse u = VarUniverse::standard(m);
    IndexSubset full = principal_set(m, m);
    Polynomial lhs = delta_partial(u, full, full, Block::x_block).apply(f * g);
    Polynomial rhs(u.count());
    for (int k = 0; k <= m; ++k)
        for (const auto& [I, J] : subset_pairs(m, k)) {
            Polynomial term = delta_partial(u, I, J, Block::x_block).apply(f) *
                              delta_partial(u, complement(I, m), complement(J, m), Block::x_block).apply(g);
            if (sign_sum(I, J) < 0) term = -term;
            rhs += term;
        }
    return lhs == rhs;
}

bool check_minor_product(int m, const IndexSubset& I, const IndexSubset& J, const Polynomial& f,
                         const Polynomial& g) {
    if (I.size() != J.size()) throw range_error("minor index sets must have equal size");
    VarUniverse u = VarUniverse::standard(m);
    Polynomial lhs = delta_partial(u, I, J, Block::x_block).apply(f * g);
    Polynomial rhs(u.count());
    for (int l = 0; l <= static_cast<int>(I.size()); ++l)
        for (const auto& P : subsets_of(I, l))
            for (const auto& Q : subsets_of(J, l)) {
                Polynomial term = delta_partial(u, P, Q, Block::x_block).apply(f) *
                                  delta_partial(u, set_minus(I, P), set_minus(J, Q), Block::x_block).apply(g);
                if (sign_positions(P, I, Q, J) < 0) term = -term;
                rhs += term;
            }
    return lhs == rhs;
}

bool check_E_identity(int m, int n, int p, const Polynomial& f) {
    if (n < 1 || p < 1) throw range_error("parameters n, p must be >= 1 for the polynomial identity");
    VarUniverse u = VarUniverse::standard(m);
    IndexSubset full = principal_set(m, m);
    MinorTable X(sym_x(u)), YmX(sym_diff(sym_y(u), sym_x(u)));
    Polynomial dx = X.det(), dymx = YmX.det();
    Polynomial lhs = delta_partial(u, full, full, Block::x_block).apply(dx.pow(n) * dymx.pow(p) * f);
    DiffOperator E = specialize_params(build_E(m), Rational(n), Rational(p));
    Polynomial rhs = dx.pow(n - 1) * dymx.pow(p - 1) * E.apply(f);
    return lhs == rhs;
}

bool check_F_identity(int m, int n, int p, const Polynomial& f) {
    if (n < 1 || p < 1) throw range_error("parameters n, p must be >= 1 for the polynomial identity");
    VarUniverse u = VarUniverse::standard(m);
    IndexSubset full = principal_set(m, m);
    MinorTable X(sym_x(u)), Y(sym_y(u));
    Polynomial dx = X.det(), dy = Y.det();
    Polynomial lhs = delta_partial(u, full, full, Block::x_minus_y).apply(dx.pow(n) * dy.pow(p) * f);
    DiffOperator F = specialize_params(build_F(m), Rational(n), Rational(p));
    Polynomial rhs = dx.pow(n - 1) * dy.pow(p - 1) * F.apply(f);
    return lhs == rhs;
}

} // namespace covops::bernstein
