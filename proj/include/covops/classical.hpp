#pragma once
#include "covops/covariant.hpp"

// The m = 1 specializations: the bracket chain collapses to the classical
// Rankin-Cohen brackets and (at negative integer weights) to transvectants.
// Everything lives on the standard universe with m = 1, whose s,t parameter
// slots carry the weights lambda, mu.

namespace covops::classical {

// omega_{lam,mu} = -mu dx + lam dy + (x - y) dx dy  (equals build_D(1))
DiffOperator build_omega();

// the closed-form bracket of depth k:
//   r_{lam,mu;k} = k! sum_{i+j=k} (-1)^j C(-lam-i, j) C(-mu-j, i) dx^i dy^j
// restricted to the diagonal (generalized binomials, symbolic in lam, mu)
BiDiffOperator build_r(int k);

// B_{lam,mu;k} (from the general construction at m = 1) equals r_{lam,mu;k}
bool check_B_equals_r(int k);

// classical transvectant (p, q)_k for p, q of degrees <= l, md: the bracket at
// weights lambda = -l, mu = -md applied to p(x) q(y), a polynomial in x
Polynomial transvectant(const Polynomial& p, const Polynomial& q, int l, int md, int k);

struct RankinCohen {
    BiDiffOperator op;
    long weight; // l + md + 2k
};
// the bracket at positive integer weights (l, md), with weight bookkeeping
RankinCohen rankin_cohen(int k, long l, long md);

} // namespace covops::classical
