#pragma once
#include <cstdint>

#include "covops/group.hpp"

// The determinant of the 2m x 2m grid of partial derivatives on the
// homogeneous-coordinate space [X | Y] (X,Y of shape 2m x m), applied to
// determinantally homogeneous lifts
//   F((x1,x2),(y1,y2)) = det(x2)^{-lam,eps} det(y2)^{-mu,eta} f(x1 x2^{-1}, y1 y2^{-1})
// and compared, at base points with identity second blocks, against the
// covariant operator D_{lam,mu}. At the base the second-block determinants are
// 1, so for integer weights both parity conventions agree there and
// lift_and_apply needs no eps/eta.

namespace covops::omega {

DiffOperator cayley_omega(int m); // constant coefficients over the homogeneous universe

// pointwise value of the lift at arbitrary invertible second blocks
Rational lift_value(int m, long lam, Parity eps, long mu, Parity eta, const Polynomial& f, const RatMatrix& x1,
                    const RatMatrix& x2, const RatMatrix& y1, const RatMatrix& y2);

// F(x gamma_x, y gamma_y) == det(gamma_x)^{-lam,eps} det(gamma_y)^{-mu,eta} F(x, y)
bool check_lift_homogeneity(int m, long lam, Parity eps, long mu, Parity eta, const Polynomial& f,
                            const RatMatrix& x1, const RatMatrix& x2, const RatMatrix& y1, const RatMatrix& y2,
                            const RatMatrix& gamma_x, const RatMatrix& gamma_y);

// (Omega^k F)(x0 | 1, y0 | 1) for the lift of f at weights (lam, mu)
Rational lift_and_apply(int m, long lam, long mu, const Polynomial& f, const RatMatrix& x0, const RatMatrix& y0,
                        int k);

struct OmegaComparison {
    struct Sample {
        Polynomial f;
        RatMatrix x0, y0;
        Rational omega_value, d_value;
    };
    enum class Verdict { proportional, not_proportional, inconclusive };
    std::vector<Sample> samples;
    int resampled = 0; // uninformative (0,0) draws that were replaced
    Verdict verdict = Verdict::inconclusive;
    Rational ratio;    // meaningful only when proportional
};

// seeded sampling of (f, x0, y0); omega side = lift_and_apply with k = 1,
// D side = (D_{lam,mu} f)(x0, y0)
OmegaComparison compare_omega_vs_D(int m, long lam, long mu, int nsamples, std::uint64_t seed);

} // namespace covops::omega
