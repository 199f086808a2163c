#pragma once
#include <vector>

#include "covops/covariant.hpp"
#include "covops/jet.hpp"
#include "covops/rng.hpp"

// The projective action of block matrices g = (a b; c d) (2m x 2m, det = 1)
// on matrix space: g(x) = (a x + b)(c x + d)^{-1}, with automorphy factor
// alpha(g, x) = det(c x + d) and the sign-aware characters
//   t^{lam,+} = |t|^lam,   t^{lam,-} = sgn(t) |t|^lam     (integer lam).
// The principal-series action used everywhere is
//   (pi_{lam,eps}(g) f)(x) = alpha(g^{-1}, x)^{-lam, eps} f(g^{-1}(x)),
// realized exactly on jets at rational base points.

namespace covops {

struct RatMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> a;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(r * c, Rational(0)) {}
    static RatMatrix identity(int n) {
        RatMatrix I(n, n);
        for (int i = 1; i <= n; ++i) I.at(i, i) = 1;
        return I;
    }

    Rational& at(int i, int j) { return a[(i - 1) * cols + (j - 1)]; } // 1-based
    const Rational& at(int i, int j) const { return a[(i - 1) * cols + (j - 1)]; }

    friend RatMatrix operator*(const RatMatrix& A, const RatMatrix& B);
    friend RatMatrix operator+(const RatMatrix& A, const RatMatrix& B);
    friend RatMatrix operator-(const RatMatrix& A, const RatMatrix& B);
    friend bool operator==(const RatMatrix& A, const RatMatrix& B) = default;

    Rational det() const;        // square only
    RatMatrix inverse() const;   // not_defined_error when singular
};

struct GroupElement {
    int m = 0;
    RatMatrix a, b, c, d; // m x m blocks

    // validates blocks are m x m and det(assembled) = 1
    static GroupElement from_blocks(RatMatrix a, RatMatrix b, RatMatrix c, RatMatrix d);
    RatMatrix assembled() const; // the 2m x 2m matrix
    GroupElement inverse() const;
    friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
    friend bool operator==(const GroupElement& g, const GroupElement& h) = default;
};

GroupElement identity_element(int m);
GroupElement inversion(int m);                                  // (0, -1; 1, 0): x -> -x^{-1}, alpha = det x
GroupElement translation(const RatMatrix& v);                   // x -> x + v
GroupElement block_diagonal(const RatMatrix& a, const RatMatrix& d); // x -> a x d^{-1}; needs det(a)det(d)=1

// seeded generator families for the suites
GroupElement random_translation(int m, Sampler& rng);
GroupElement random_block_diagonal(int m, Sampler& rng);
GroupElement random_element(int m, Sampler& rng); // short word in the generators

RatMatrix act(const GroupElement& g, const RatMatrix& x);  // not_defined_error off the domain
Rational alpha(const GroupElement& g, const RatMatrix& x);

bool check_cocycle(const GroupElement& g, const GroupElement& gp, const RatMatrix& x);
bool check_jacobian(const GroupElement& g, const RatMatrix& x); // det J_{g} = alpha(g,x)^{-2m}
bool check_kernel_covariance(const GroupElement& g, const RatMatrix& x, const RatMatrix& y);

// t^{lam,eps} for rational t != 0 / for a jet with nonzero constant term
Rational character_value(const Rational& t, long lam, Parity eps);
Jet character_power_jet(const Jet& t, long lam, Parity eps);

struct Weight {
    long lam;
    Parity eps;
};

// jet at x0 of pi_{lam,eps}(g) f for f = f(x) (x-variables only)
Jet pi_action_jet(int m, const Weight& w, const GroupElement& g, const Polynomial& f, const RatMatrix& x0,
                  int order);
// same for f(x,y) with the two slots acted on simultaneously
Jet pi_pair_action_jet(int m, const Weight& wx, const Weight& wy, const GroupElement& g, const Polynomial& f,
                       const RatMatrix& x0, const RatMatrix& y0, int order);

// covariance of the two-slot operators:
//   D o (pi_{lam,eps} x pi_{mu,eta})(g) = (pi_{lam+1,-eps} x pi_{mu+1,-eta})(g) o D
bool check_D_covariance(int m, long lam, Parity eps, long mu, Parity eta, const GroupElement& g,
                        const Polynomial& f, const RatMatrix& x0, const RatMatrix& y0);
//   B_k o (pi_{lam,eps} x pi_{mu,eta})(g) = pi_{lam+mu+2k, eps*eta}(g) o B_k   (diagonal points)
bool check_B_covariance(int m, int k, long lam, Parity eps, long mu, Parity eta, const GroupElement& g,
                        const Polynomial& f, const RatMatrix& x0);
// multiplication by det(x-y) shifts (lam,eps)x(mu,eta) to (lam-1,-eps)x(mu-1,-eta)
bool check_M_intertwine(int m, long lam, Parity eps, long mu, Parity eta, const GroupElement& g,
                        const Polynomial& f, const RatMatrix& x0, const RatMatrix& y0);

// Batched evaluation for suite grids: the expensive parts (Moebius jets of
// g^{-1}, the composed f-jet, integer powers of the alpha jets) depend only on
// (g, f, x0, y0), not on the weights, so one session serves a whole
// (lam, mu, eps, eta) grid.
class CovarianceSession {
  public:
    // diagonal=true puts the base at (x0, x0) for bracket checks
    CovarianceSession(int m, const GroupElement& g, const Polynomial& f, const RatMatrix& x0,
                      const RatMatrix& y0, int order);

    // jet at (x0,y0) of (pi_{wx} x pi_{wy})(g) f
    Jet transformed_jet(const Weight& wx, const Weight& wy) const;
    // the sign-free part t_x^{-lx} t_y^{-ly} (f o g^{-1}); the four parity
    // combinations of a (lx, ly) cell differ from it only by character_signs
    const Jet& raw_jet(long lx, long ly) const;
    int character_signs(const Weight& wx, const Weight& wy) const;
    // alpha(g^{-1}, x0/y0) and the transformed points, for right-hand sides
    const Rational& alpha_x() const { return ax_; }
    const Rational& alpha_y() const { return ay_; }
    const RatMatrix& gx() const { return gx_; }
    const RatMatrix& gy() const { return gy_; }
    const GroupElement& ginv() const { return h_; }

  private:
    const Jet& xpow(long e) const;
    const Jet& ypow(long e) const;

    int m_;
    GroupElement h_;
    Rational ax_, ay_;
    RatMatrix gx_, gy_;
    std::optional<Jet> fj_, axj_, ayj_; // set in the constructor, never empty after
    mutable std::map<long, Jet> xpow_, ypow_;
    mutable std::map<std::pair<long, long>, Jet> raw_;
};

} // namespace covops
