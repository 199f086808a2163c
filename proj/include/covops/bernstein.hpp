#pragma once
#include "covops/weyl.hpp"

// Bernstein-Sato identities for minors of constant-coefficient determinantal
// operators, and the first-order operators E_{s,t}, F_{s,t} they produce:
//
//   det(dx) [ det(x)^s det(y-x)^t f ] = det(x)^{s-1} det(y-x)^{t-1} E_{s,t} f
//   det(dx-dy) [ det(x)^s det(y)^t f ] = det(x)^{s-1} det(y)^{t-1} F_{s,t} f
//
// Both operators differentiate x (resp. x and y) to order at most m and carry
// the coefficient polynomials p_{I,J} / q_{I,J} built from complementary
// minors with Pochhammer weights in s and t.

namespace covops::bernstein {

// p_{I,J}(x, y; s, t) =
//   sum_l (-1)^l (s)_{k-l} (t)_l sum_{P<=I, Q<=J, |P|=|Q|=l}
//     sign_positions(P:I, Q:J) Delta_{I^c u P, J^c u Q}(x) Delta_{P^c, Q^c}(y - x)
Polynomial coeff_p(const VarUniverse& u, const IndexSubset& I, const IndexSubset& J);
// q_{I,J}: same shape with Delta_{P^c, Q^c}(y) in place of Delta_{P^c, Q^c}(y - x)
Polynomial coeff_q(const VarUniverse& u, const IndexSubset& I, const IndexSubset& J);

// E_{s,t} = sum_{I,J} p_{I,J} Delta_{I^c,J^c}(dx), parameters left symbolic
DiffOperator build_E(int m);
// F_{s,t} = sum_{I,J} q_{I,J} Delta_{I^c,J^c}(dx-dy)
DiffOperator build_F(int m);

// Delta_k(d) det(x)^n == (n)_k Delta_k^c(x) det(x)^{n-1}   (principal k-minor)
bool check_bs_principal(int m, int k, int n);
// Delta_{I,J}(d) det(x)^n == sign_sum(I,J) (n)_k Delta_{I^c,J^c}(x) det(x)^{n-1}
bool check_bs_minor(int m, const IndexSubset& I, const IndexSubset& J, int n);

// det(d)(fg) == sum_{I,J} sign_sum(I,J) [Delta_{I,J}(d) f][Delta_{I^c,J^c}(d) g]
bool check_det_product(int m, const Polynomial& f, const Polynomial& g);
// Delta_{I,J}(d)(fg) == sum_{P,Q} sign_positions(P:I,Q:J) [Delta_{P,Q}(d) f][Delta_{I\P,J\Q}(d) g]
bool check_minor_product(int m, const IndexSubset& I, const IndexSubset& J, const Polynomial& f,
                         const Polynomial& g);

// the displayed identities at integer parameters n, p >= 1 on a polynomial f(x,y)
bool check_E_identity(int m, int n, int p, const Polynomial& f);
bool check_F_identity(int m, int n, int p, const Polynomial& f);

} // namespace covops::bernstein
