#pragma once
#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "covops/polynomial.hpp"

// Truncated Taylor expansions ("jets") at an exact rational base point.
// A JetSpace fixes the active variables (a sorted subset of a universe's
// variable indices) and the truncation order N; coefficients are stored dense,
// indexed by the rank of the exponent vector in ascending graded-lex order.
// Variables not active are not part of the state: polynomials fed into a jet
// may only touch active variables.
//
// The represented object is  f = sum_gamma c_gamma * prod (v - base_v)^gamma,
// |gamma| <= N.  Requests that exceed the order raise insufficient_order_error
// rather than silently truncating.

namespace covops {

class JetSpace {
  public:
    static std::shared_ptr<const JetSpace> make(std::vector<int> active, int order) {
        if (order < 0) throw range_error("negative jet order");
        for (size_t i = 1; i < active.size(); ++i)
            if (active[i] <= active[i - 1]) throw range_error("active variables must be strictly increasing");
        return std::shared_ptr<const JetSpace>(new JetSpace(std::move(active), order));
    }

    const std::vector<int>& active() const { return active_; }
    int order() const { return order_; }
    int size() const { return static_cast<int>(exps_.size()); }
    const Exponents& exponents(int rank) const { return exps_[rank]; }
    int degree_of(int rank) const { return total_deg(exps_[rank]); }
    // ranks with total degree <= d form the prefix [0, count_up_to(d))
    int count_up_to(int d) const { return deg_end_[std::min(d, order_)]; }

    int rank_of(const Exponents& e) const {
        auto it = rank_.find(e);
        return it == rank_.end() ? -1 : it->second;
    }
    // position of universe variable v among the active ones, -1 if inactive
    int slot_of(int v) const {
        auto it = std::lower_bound(active_.begin(), active_.end(), v);
        return (it != active_.end() && *it == v) ? static_cast<int>(it - active_.begin()) : -1;
    }
    bool same_shape(const JetSpace& o) const { return active_ == o.active_ && order_ == o.order_; }

  private:
    JetSpace(std::vector<int> active, int order) : active_(std::move(active)), order_(order) {
        int k = static_cast<int>(active_.size());
        Exponents e(k, 0);
        // enumerate by total degree; within a degree in lex order
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == k) {
                if (left == 0) exps_.push_back(e);
                return;
            }
            if (pos == k - 1) {
                e[pos] = left;
                exps_.push_back(e);
                e[pos] = 0;
                return;
            }
            for (int v = 0; v <= left; ++v) {
                e[pos] = v;
                rec(pos + 1, left - v);
            }
            e[pos] = 0;
        };
        deg_end_.resize(order_ + 1);
        for (int d = 0; d <= order_; ++d) {
            if (k == 0) {
                if (d == 0) exps_.push_back(Exponents{});
            } else {
                size_t before = exps_.size();
                rec(0, d);
                std::sort(exps_.begin() + before, exps_.end());
            }
            deg_end_[d] = static_cast<int>(exps_.size());
        }
        for (int r = 0; r < static_cast<int>(exps_.size()); ++r) rank_[exps_[r]] = r;
    }

    std::vector<int> active_;
    int order_;
    std::vector<Exponents> exps_;
    std::map<Exponents, int> rank_;
    std::vector<int> deg_end_;
};

using JetSpacePtr = std::shared_ptr<const JetSpace>;

class Jet {
  public:
    Jet(JetSpacePtr sp, std::vector<Rational> base)
        : sp_(std::move(sp)), base_(std::move(base)), c_(sp_->size(), Rational(0)) {
        if (static_cast<int>(base_.size()) != static_cast<int>(sp_->active().size()))
            throw dimension_error("jet base point length mismatch");
    }

    static Jet constant(const JetSpacePtr& sp, const std::vector<Rational>& base, const Rational& v) {
        Jet j(sp, base);
        j.c_[0] = v;
        return j;
    }
    // the jet of the active variable v itself: base_v + (v - base_v)
    static Jet of_variable(const JetSpacePtr& sp, const std::vector<Rational>& base, int v) {
        Jet j(sp, base);
        int slot = sp->slot_of(v);
        if (slot < 0) throw range_error("variable not active in this jet space");
        j.c_[0] = base[slot];
        if (sp->order() >= 1) {
            Exponents e(sp->active().size(), 0);
            e[slot] = 1;
            j.c_[sp->rank_of(e)] = 1;
        }
        return j;
    }

    const JetSpacePtr& space() const { return sp_; }
    const std::vector<Rational>& base() const { return base_; }
    int order() const { return sp_->order(); }
    const Rational& value() const { return c_[0]; }
    const Rational& coefficient(int rank) const { return c_[rank]; }
    Rational coefficient(const Exponents& e) const {
        int r = sp_->rank_of(e);
        if (r < 0) {
            if (total_deg(e) > sp_->order())
                throw insufficient_order_error("jet order too small for requested coefficient");
            throw range_error("exponent vector does not match jet space");
        }
        return c_[r];
    }
    Rational& coeff_ref(int rank) { return c_[rank]; }

    Jet& operator+=(const Jet& o) {
        check_compatible(o);
        for (int r = 0; r < sp_->size(); ++r) c_[r] += o.c_[r];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        check_compatible(o);
        for (int r = 0; r < sp_->size(); ++r) c_[r] -= o.c_[r];
        return *this;
    }
    Jet& operator*=(const Rational& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }
    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, const Rational& s) { return a *= s; }
    friend Jet operator*(const Rational& s, Jet a) { return a *= s; }
    friend Jet operator-(const Jet& a) {
        Jet r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Jet operator*(const Jet& a, const Jet& b) {
        a.check_compatible(b);
        const JetSpace& sp = *a.sp_;
        Jet r(a.sp_, a.base_);
        int n = sp.size();
        Exponents e(sp.active().size());
        for (int i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            int di = sp.degree_of(i);
            int jmax = sp.count_up_to(sp.order() - di);
            for (int j = 0; j < jmax; ++j) {
                if (b.c_[j] == 0) continue;
                const Exponents& ei = sp.exponents(i);
                const Exponents& ej = sp.exponents(j);
                for (size_t v = 0; v < e.size(); ++v) e[v] = ei[v] + ej[v];
                r.c_[sp.rank_of(e)] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    friend bool operator==(const Jet& a, const Jet& b) {
        return a.sp_->same_shape(*b.sp_) && a.base_ == b.base_ && a.c_ == b.c_;
    }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    // multiplicative inverse; requires nonzero constant term
    Jet reciprocal() const {
        if (c_[0] == 0) throw not_defined_error("reciprocal of a jet with zero constant term");
        Rational inv = Rational(1) / c_[0];
        // 1/f = inv * sum_k u^k  with  u = 1 - inv*f  (u has zero constant term)
        Jet u = constant(sp_, base_, 1) - *this * inv;
        Jet acc = constant(sp_, base_, 1);
        Jet upow = constant(sp_, base_, 1);
        for (int k = 1; k <= sp_->order(); ++k) {
            upow = upow * u;
            acc += upow;
        }
        return acc * inv;
    }

    Jet pow(long e) const {
        if (e < 0) return reciprocal().pow(-e);
        Jet acc = constant(sp_, base_, 1);
        Jet b = *this;
        unsigned long n = static_cast<unsigned long>(e);
        while (n) {
            if (n & 1) acc = acc * b;
            if (n >>= 1) b = b * b;
        }
        return acc;
    }

  private:
    void check_compatible(const Jet& o) const {
        if (!sp_->same_shape(*o.sp_)) throw dimension_error("jets over different spaces");
        if (base_ != o.base_) throw dimension_error("jets at different base points");
    }

    JetSpacePtr sp_;
    std::vector<Rational> base_;
    std::vector<Rational> c_;
};

// Evaluate a polynomial with jets as variable values. images[v] (indexed by
// universe variable) must be non-null for every variable occurring in p, and
// all images must live on the same space and base. Per-variable jet powers are
// cached across terms.
inline Jet eval_at_jets(const Polynomial& p, const std::vector<const Jet*>& images, const JetSpacePtr& sp,
                        const std::vector<Rational>& base) {
    if (static_cast<int>(images.size()) != p.nvars()) throw dimension_error("eval_at_jets: images length mismatch");
    Jet r(sp, base);
    std::vector<std::vector<Jet>> pw(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Jet t = Jet::constant(sp, base, c);
        for (int v = 0; v < p.nvars(); ++v) {
            if (!e[v]) continue;
            if (!images[v])
                throw missing_variable_error(v, "eval_at_jets: no image for occurring variable #" + std::to_string(v));
            auto& cache = pw[v];
            if (cache.empty()) cache.push_back(Jet::constant(sp, base, 1));
            while (static_cast<int>(cache.size()) <= e[v]) cache.push_back(cache.back() * *images[v]);
            t = t * cache[e[v]];
        }
        r += t;
    }
    return r;
}

// Taylor-expand a polynomial at base: every variable occurring in p must be
// active in the space. (For order >= deg p this is lossless.)
inline Jet jet_of_polynomial(const Polynomial& p, const JetSpacePtr& sp, const std::vector<Rational>& base) {
    std::vector<const Jet*> images(p.nvars(), nullptr);
    std::vector<Jet> owned;
    owned.reserve(sp->active().size());
    for (int v : sp->active())
        if (v < p.nvars()) owned.push_back(Jet::of_variable(sp, base, v));
    size_t k = 0;
    for (int v : sp->active())
        if (v < p.nvars()) images[v] = &owned[k++];
    return eval_at_jets(p, images, sp, base);
}

// Reconstruct the polynomial sum c_gamma * prod (v - base_v)^gamma (exact when
// the jet came from a polynomial of degree <= order). Test/diagnostic helper.
inline Polynomial polynomial_from_jet(const Jet& j, int nvars) {
    const JetSpace& sp = *j.space();
    Polynomial out(nvars);
    std::vector<Polynomial> shifted; // v - base_v per active slot
    for (size_t s = 0; s < sp.active().size(); ++s)
        shifted.push_back(Polynomial::variable(nvars, sp.active()[s]) -
                          Polynomial::constant(nvars, j.base()[s]));
    for (int r = 0; r < sp.size(); ++r) {
        if (j.coefficient(r) == 0) continue;
        Polynomial t = Polynomial::constant(nvars, j.coefficient(r));
        const Exponents& e = sp.exponents(r);
        for (size_t s = 0; s < e.size(); ++s)
            if (e[s]) t = t * shifted[s].pow(e[s]);
        out += t;
    }
    return out;
}

} // namespace covops
