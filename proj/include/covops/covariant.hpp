#pragma once
#include <optional>

#include "covops/weyl.hpp"

// The covariant operators themselves. All builders return the *normalized*
// operators: the overall scalar (i/(2*pi))^m per factor is dropped, so every
// coefficient is an exact rational polynomial.
//
//   H_{s,t}      = sum_k (-1)^k sum_{|I|=|J|=k} q_{I,J}(dx,dy; s,t) o M_{Delta_{I^c,J^c}(x-y)}
//   D_{lam,mu}   = H_{m-lam, m-mu}       (the s,t slots then carry lam, mu)
//   B_{lam,mu;k} = restrict_diagonal( D_{lam+k-1,mu+k-1} o ... o D_{lam,mu} )
//
// Derivatives act after the multiplication by the complementary minor, so the
// composition is renormalized by the Leibniz rule. In D and B the parameter
// slots s,t of the standard universe denote the weights lambda, mu.

namespace covops {

DiffOperator build_H(int m); // symbolic in s,t
DiffOperator build_D(int m); // symbolic; s,t mean lambda,mu
DiffOperator build_D_at(int m, const Rational& lambda, const Rational& mu);

BiDiffOperator build_B(int m, int k); // symbolic; s,t mean lambda,mu
BiDiffOperator build_B_at(int m, int k, const Rational& lambda, const Rational& mu);

// every coefficient free of matrix entries (s,t allowed)
bool check_constant_coefficients(const BiDiffOperator& B);

// ---- closed-form normalization scalars -------------------------------------
// Only the scalar factors are produced in closed form; everything transcendental
// stays symbolic (Gamma arguments, powers of pi / i).

enum class Parity { plus, minus };
inline Parity flip(Parity p) { return p == Parity::plus ? Parity::minus : Parity::plus; }
inline Parity parity_product(Parity a, Parity b) { return a == b ? Parity::plus : Parity::minus; }

// Gamma_V(s) = prod_{j=1..m} Gamma((s+j)/2): returned as the argument list
std::vector<Rational> gamma_v_arguments(int m, const Rational& s);

// gamma(s,+) = 1/Gamma_V(s);  gamma(s,-) = 1/(s * Gamma_V(s-1)).
// Encodes 1 / (linear * prod Gamma(arg)); linear absent for the even case.
struct GammaFactor {
    std::optional<Rational> linear;
    std::vector<Rational> gamma_args;
};
GammaFactor gamma_scalar(int m, const Rational& s, Parity eps);

// rho(s,+) = pi^{-m^2/2 - m s};  rho(s,-) = -i^m pi^{-m^2/2 - m s}
struct RhoFactor {
    int sign;              // +1 / -1
    int i_power;           // exponent of i
    Rational pi_exponent;  // may be half-integral
};
RhoFactor rho_scalar(int m, const Rational& s, Parity eps);

// The constant d(lambda,mu,eps,eta) relating B to its analytic normalization:
//   d = 2^{pow2} * pi^{pow_pi} * (num/den)(lambda, mu)
// with den the product of the parity-dependent linear factors. numerator /
// denominator are polynomials in a 2-variable parameter universe (0 = lambda,
// 1 = mu); value_num/value_den are their evaluations at the given weights.
// Evaluating on a pole raises pole_error naming the vanishing factor.
struct NormalizationScalar {
    Polynomial num, den;
    Rational value_num, value_den;
    int power_of_two = 0;
    int power_of_pi = 0;
    int power_of_i = 0;
};
NormalizationScalar normalization_d(int m, const Rational& lambda, const Rational& mu, Parity eps, Parity eta);

} // namespace covops
