#pragma once
#include <map>
#include <vector>

#include "covops/jet.hpp"
#include "covops/minors.hpp"
#include "covops/vars.hpp"

// Differential operators with polynomial coefficients, kept in normal form:
// every operator is a sum  sum_alpha  A_alpha(vars) * d^alpha  with all
// coefficients to the left of all derivatives. Derivative multi-indices run
// over the universe's differentiable variables (matrix entries); the scalar
// parameters s, t may appear in coefficients but are never differentiated.
// Terms are ordered ascending graded-lex in the multi-index.

namespace covops {

inline Rational multi_factorial(const Exponents& a) {
    Rational r(1);
    for (int x : a) r *= rat_factorial(x);
    return r;
}

inline Rational multi_binom(const Exponents& a, const Exponents& g) {
    Rational r(1);
    for (size_t i = 0; i < a.size(); ++i) r *= binom(a[i], g[i]);
    return r;
}

// d^multi f, multi over the first multi.size() variables of f's universe
inline Polynomial multi_partial(Polynomial f, const Exponents& multi) {
    for (size_t v = 0; v < multi.size(); ++v)
        for (int k = 0; k < multi[v]; ++k) f = f.partial(static_cast<int>(v));
    return f;
}

class DiffOperator {
  public:
    using TermMap = std::map<Exponents, Polynomial, GrlexLess>;

    explicit DiffOperator(VarUniverse u) : u_(u) {}

    static DiffOperator identity(const VarUniverse& u) {
        DiffOperator d(u);
        d.add_term(Exponents(u.nderiv(), 0), Polynomial::constant(u.count(), 1));
        return d;
    }
    // the multiplication operator f -> p*f
    static DiffOperator multiplication(const VarUniverse& u, const Polynomial& p) {
        DiffOperator d(u);
        d.add_term(Exponents(u.nderiv(), 0), p);
        return d;
    }

    const VarUniverse& universe() const { return u_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int order() const {
        int o = -1;
        for (const auto& [a, p] : terms_) o = std::max(o, total_deg(a));
        return o;
    }

    void add_term(const Exponents& multi, const Polynomial& coeff) {
        if (static_cast<int>(multi.size()) != u_.nderiv()) throw dimension_error("derivative multi-index length mismatch");
        for (int x : multi)
            if (x < 0) throw range_error("negative derivative order");
        if (coeff.nvars() != u_.count()) throw dimension_error("coefficient over wrong variable set");
        if (coeff.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(multi, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    DiffOperator& operator+=(const DiffOperator& o) {
        check_same(o);
        for (const auto& [a, p] : o.terms_) add_term(a, p);
        return *this;
    }
    DiffOperator& operator-=(const DiffOperator& o) {
        check_same(o);
        for (const auto& [a, p] : o.terms_) add_term(a, -p);
        return *this;
    }
    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
    friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
    friend DiffOperator operator*(DiffOperator a, const Rational& c) {
        if (c == 0) return DiffOperator(a.u_);
        for (auto& [k, p] : a.terms_) p *= c;
        return a;
    }
    friend DiffOperator operator*(const Rational& c, DiffOperator a) { return std::move(a) * c; }

    // left-multiply every coefficient by p (i.e. the operator M_p ∘ this)
    DiffOperator scaled_by(const Polynomial& p) const {
        DiffOperator r(u_);
        for (const auto& [a, q] : terms_) r.add_term(a, p * q);
        return r;
    }

    // apply coefficient-wise substitution (e.g. parameter specialization);
    // images must preserve the universe's variable count
    DiffOperator map_coefficients(const std::vector<const Polynomial*>& images) const {
        DiffOperator r(u_);
        for (const auto& [a, p] : terms_) r.add_term(a, p.substitute(images, u_.count()));
        return r;
    }

    Polynomial apply(const Polynomial& f) const {
        if (f.nvars() != u_.count()) throw dimension_error("operand over wrong variable set");
        Polynomial r(u_.count());
        for (const auto& [a, p] : terms_) r += p * multi_partial(f, a);
        return r;
    }

    // Evaluate (this f)(base) for f given as a jet: sum A_alpha(base) * alpha! * c_alpha.
    // The jet must cover every differentiated variable, its order must reach the
    // operator order, and coefficients may only involve active variables
    // (specialize s,t first).
    Rational apply_at_jet(const Jet& j) const {
        const JetSpace& sp = *j.space();
        std::map<int, Rational> point;
        for (size_t s = 0; s < sp.active().size(); ++s) point[sp.active()[s]] = j.base()[s];
        Rational sum(0);
        Exponents e(sp.active().size());
        for (const auto& [a, p] : terms_) {
            if (total_deg(a) > sp.order())
                throw insufficient_order_error("jet order " + std::to_string(sp.order()) +
                                               " too small for operator order " + std::to_string(total_deg(a)));
            std::fill(e.begin(), e.end(), 0);
            for (size_t v = 0; v < a.size(); ++v) {
                if (!a[v]) continue;
                int slot = sp.slot_of(static_cast<int>(v));
                if (slot < 0) throw range_error("jet does not cover differentiated variable " + u_.name((int)v));
                e[slot] = a[v];
            }
            int r = sp.rank_of(e);
            sum += p.eval_partial(point) * multi_factorial(a) * j.coefficient(r);
        }
        return sum;
    }

    friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
        return a.u_ == b.u_ && a.terms_ == b.terms_;
    }

  private:
    void check_same(const DiffOperator& o) const {
        if (!(u_ == o.u_)) throw dimension_error("operators over different universes");
    }

    VarUniverse u_;
    TermMap terms_;
};

// Leibniz composition (A ∘ B) f = A(B f), renormalized so coefficients stay left:
//   A_alpha d^alpha ∘ B_beta d^beta
//     = sum_{gamma <= alpha} C(alpha,gamma) A_alpha (d^{alpha-gamma} B_beta) d^{gamma+beta}
inline DiffOperator compose(const DiffOperator& A, const DiffOperator& B) {
    if (!(A.universe() == B.universe())) throw dimension_error("composing operators over different universes");
    DiffOperator R(A.universe());
    int n = A.universe().nderiv();
    for (const auto& [alpha, Ap] : A.terms()) {
        // odometer over gamma <= alpha
        Exponents gamma(n, 0);
        while (true) {
            Exponents rest(n);
            for (int i = 0; i < n; ++i) rest[i] = alpha[i] - gamma[i];
            Rational cb = multi_binom(alpha, gamma);
            for (const auto& [beta, Bp] : B.terms()) {
                Polynomial d = multi_partial(Bp, rest);
                if (d.is_zero()) continue;
                Exponents key(n);
                for (int i = 0; i < n; ++i) key[i] = gamma[i] + beta[i];
                R.add_term(key, cb * (Ap * d));
            }
            int i = n - 1;
            while (i >= 0 && gamma[i] == alpha[i]) gamma[i--] = 0;
            if (i < 0) break;
            ++gamma[i];
        }
    }
    return R;
}

// Interpret a polynomial in the derivative symbols as a constant-coefficient
// operator: matrix-entry exponents become the derivative multi-index, any s,t
// exponents stay in the coefficient.
inline DiffOperator operator_from_symbol(const VarUniverse& u, const Polynomial& p) {
    if (p.nvars() != u.count()) throw dimension_error("symbol over wrong variable set");
    DiffOperator d(u);
    int nd = u.nderiv();
    for (const auto& [e, c] : p.terms()) {
        Exponents multi(e.begin(), e.begin() + nd);
        Polynomial coeff = Polynomial::constant(u.count(), c);
        for (int v = nd; v < u.count(); ++v)
            if (e[v]) coeff = coeff * Polynomial::variable(u.count(), v).pow(e[v]);
        d.add_term(multi, coeff);
    }
    return d;
}

enum class Block { x_block, y_block, x_minus_y };

// Delta_{I,J}(d) for the chosen block: the minor polynomial in the block's
// symbols turned into a constant-coefficient operator. For x_minus_y the
// symbol is (d/dx - d/dy) entry-wise, so monomials mix the two blocks.
inline DiffOperator delta_partial(const VarUniverse& u, const IndexSubset& I, const IndexSubset& J, Block block) {
    if (u.kind != VarUniverse::Kind::standard_m) throw range_error("delta_partial needs the standard universe");
    MatrixSym M;
    switch (block) {
        case Block::x_block: M = sym_x(u); break;
        case Block::y_block: M = sym_y(u); break;
        case Block::x_minus_y: M = sym_diff(sym_x(u), sym_y(u)); break;
    }
    MinorTable T(std::move(M));
    return operator_from_symbol(u, T.minor(I, J));
}

// Bi-differential operator on the diagonal: phi(x,y) -> sum_a A_a(x) (d^a phi)(x,x).
// Obtained from a DiffOperator by substituting y := x in every coefficient.
// Multi-indices keep the joint (dx | dy) layout of the standard universe.
class BiDiffOperator {
  public:
    using TermMap = std::map<Exponents, Polynomial, GrlexLess>;

    explicit BiDiffOperator(VarUniverse u) : u_(u) {}

    static BiDiffOperator restrict_diagonal(const DiffOperator& D) {
        const VarUniverse& u = D.universe();
        if (u.kind != VarUniverse::Kind::standard_m) throw range_error("diagonal restriction needs the standard universe");
        std::vector<Polynomial> img;
        std::vector<const Polynomial*> images(u.count(), nullptr);
        img.reserve(u.count());
        int mm = u.m * u.m;
        for (int v = 0; v < u.count(); ++v) {
            int src = (v >= mm && v < 2 * mm) ? v - mm : v; // y[i][j] -> x[i][j]
            img.push_back(Polynomial::variable(u.count(), src));
        }
        for (int v = 0; v < u.count(); ++v) images[v] = &img[v];
        BiDiffOperator B(u);
        for (const auto& [a, p] : D.terms()) B.add_term(a, p.substitute(images, u.count()));
        return B;
    }

    const VarUniverse& universe() const { return u_; }
    const TermMap& terms() const { return terms_; }
    int order() const {
        int o = -1;
        for (const auto& [a, p] : terms_) o = std::max(o, total_deg(a));
        return o;
    }

    void add_term(const Exponents& multi, const Polynomial& coeff) {
        if (static_cast<int>(multi.size()) != u_.nderiv()) throw dimension_error("derivative multi-index length mismatch");
        if (coeff.nvars() != u_.count()) throw dimension_error("coefficient over wrong variable set");
        int mm = u_.m * u_.m;
        for (int v = mm; v < 2 * mm; ++v)
            if (coeff.depends_on(v)) throw range_error("bi-differential coefficient must not involve y-variables");
        if (coeff.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(multi, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // true when no coefficient involves any matrix entry (s,t may remain)
    bool constant_coefficients() const {
        for (const auto& [a, p] : terms_)
            for (int v = 0; v < u_.nderiv(); ++v)
                if (p.depends_on(v)) return false;
        return true;
    }

    // phi(x,y) -> result(x): differentiate, restrict y:=x, weight by coefficients
    Polynomial apply(const Polynomial& phi) const {
        if (phi.nvars() != u_.count()) throw dimension_error("operand over wrong variable set");
        std::vector<Polynomial> img;
        std::vector<const Polynomial*> images(u_.count(), nullptr);
        int mm = u_.m * u_.m;
        for (int v = 0; v < u_.count(); ++v) {
            int src = (v >= mm && v < 2 * mm) ? v - mm : v;
            img.push_back(Polynomial::variable(u_.count(), src));
        }
        for (int v = 0; v < u_.count(); ++v) images[v] = &img[v];
        Polynomial r(u_.count());
        for (const auto& [a, p] : terms_) r += p * multi_partial(phi, a).substitute(images, u_.count());
        return r;
    }

    // evaluate at a jet of phi taken at a diagonal base point (x0, x0)
    Rational apply_at_jet(const Jet& j) const {
        const JetSpace& sp = *j.space();
        int mm = u_.m * u_.m;
        for (int v = 0; v < mm; ++v) {
            int sx = sp.slot_of(v), sy = sp.slot_of(v + mm);
            if (sx < 0 || sy < 0) throw range_error("jet does not cover the matrix variables");
            if (j.base()[sx] != j.base()[sy])
                throw not_defined_error("bi-differential operator needs a diagonal base point (x0, x0)");
        }
        std::map<int, Rational> point;
        for (size_t s = 0; s < sp.active().size(); ++s) point[sp.active()[s]] = j.base()[s];
        Rational sum(0);
        Exponents e(sp.active().size());
        for (const auto& [a, p] : terms_) {
            if (total_deg(a) > sp.order()) throw insufficient_order_error("jet order too small for operator order");
            std::fill(e.begin(), e.end(), 0);
            for (size_t v = 0; v < a.size(); ++v)
                if (a[v]) e[sp.slot_of(static_cast<int>(v))] = a[v];
            sum += p.eval_partial(point) * multi_factorial(a) * j.coefficient(sp.rank_of(e));
        }
        return sum;
    }

    friend bool operator==(const BiDiffOperator& a, const BiDiffOperator& b) {
        return a.u_ == b.u_ && a.terms_ == b.terms_;
    }

  private:
    VarUniverse u_;
    TermMap terms_;
};

// Coefficient-wise substitution of the scalar parameters s,t (matrix entries
// are left alone). Used to specialize weights, shift them along a bracket
// chain, and to turn H_{s,t} into D_{lambda,mu} via s -> m-s, t -> m-t.
namespace detail {
template <class Op>
Op param_subst(const Op& op, const Polynomial& s_img, const Polynomial& t_img) {
    const VarUniverse& u = op.universe();
    if (u.kind != VarUniverse::Kind::standard_m) throw range_error("parameter substitution needs the standard universe");
    std::vector<Polynomial> img;
    img.reserve(u.count());
    for (int v = 0; v < u.count(); ++v) img.push_back(Polynomial::variable(u.count(), v));
    img[u.s()] = s_img;
    img[u.t()] = t_img;
    std::vector<const Polynomial*> images(u.count());
    for (int v = 0; v < u.count(); ++v) images[v] = &img[v];
    Op r(u);
    for (const auto& [a, p] : op.terms()) r.add_term(a, p.substitute(images, u.count()));
    return r;
}
} // namespace detail

inline Polynomial param_s(const VarUniverse& u) { return Polynomial::variable(u.count(), u.s()); }
inline Polynomial param_t(const VarUniverse& u) { return Polynomial::variable(u.count(), u.t()); }

template <class Op>
Op specialize_params(const Op& op, const Rational& sv, const Rational& tv) {
    const VarUniverse& u = op.universe();
    return detail::param_subst(op, Polynomial::constant(u.count(), sv), Polynomial::constant(u.count(), tv));
}
template <class Op>
Op shift_params(const Op& op, const Rational& ds, const Rational& dt) {
    const VarUniverse& u = op.universe();
    return detail::param_subst(op, param_s(u) + Polynomial::constant(u.count(), ds),
                               param_t(u) + Polynomial::constant(u.count(), dt));
}
template <class Op>
Op map_params(const Op& op, const Polynomial& s_img, const Polynomial& t_img) {
    return detail::param_subst(op, s_img, t_img);
}

} // namespace covops
