#pragma once
#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "covops/rational.hpp"

// Multivariate polynomials with exact rational coefficients over a fixed,
// ordered list of variables (identified by index 0..nvars-1; naming lives in
// vars.hpp). Terms are kept in a map ordered by *descending* graded
// lexicographic order, so iteration yields the canonical display order and
// begin() is the leading term. Invariant: no zero coefficient is ever stored.

namespace covops {

using Exponents = std::vector<int>;

inline int total_deg(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

// graded lex: compare total degree first, then lexicographically.
inline int grlex_cmp(const Exponents& a, const Exponents& b) {
    int da = total_deg(a), db = total_deg(b);
    if (da != db) return da < db ? -1 : 1;
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const { return grlex_cmp(a, b) > 0; }
};
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const { return grlex_cmp(a, b) < 0; }
};

class Polynomial {
  public:
    using TermMap = std::map<Exponents, Rational, GrlexGreater>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {
        if (nvars < 0) throw range_error("negative variable count");
    }

    static Polynomial constant(int nvars, const Rational& c) {
        Polynomial p(nvars);
        if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
        return p;
    }
    static Polynomial variable(int nvars, int v) {
        Polynomial p(nvars);
        p.check_var(v);
        Exponents e(nvars, 0);
        e[v] = 1;
        p.terms_[std::move(e)] = 1;
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // degree of the zero polynomial is -1 by convention
    int total_degree() const { return terms_.empty() ? -1 : total_deg(terms_.begin()->first); }
    int degree_in(int v) const {
        check_var(v);
        int d = terms_.empty() ? -1 : 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
        return d;
    }
    bool depends_on(int v) const {
        check_var(v);
        for (const auto& [e, c] : terms_)
            if (e[v] > 0) return true;
        return false;
    }

    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_term() const { return coeff(Exponents(nvars_, 0)); }

    void add_term(const Exponents& e, const Rational& c) {
        if (static_cast<int>(e.size()) != nvars_) throw dimension_error("exponent vector length mismatch");
        for (int x : e)
            if (x < 0) throw range_error("negative exponent");
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Polynomial& operator*=(const Rational& c) {
        if (c == 0) terms_.clear();
        else
            for (auto& [e, v] : terms_) v *= c;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r(a);
        for (auto& [e, v] : r.terms_) v = -v;
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Rational& c) {
        Polynomial r(a);
        return r *= c;
    }
    friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same(b);
        Polynomial r(a.nvars_);
        Exponents e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(int n) const {
        if (n < 0) throw range_error("negative polynomial power");
        Polynomial acc = constant(nvars_, 1);
        Polynomial base = *this;
        while (n) {
            if (n & 1) acc = acc * base;
            if (n >>= 1) base = base * base;
        }
        return acc;
    }

    Polynomial partial(int v) const {
        check_var(v);
        Polynomial r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[v] == 0) continue;
            Exponents d = e;
            d[v] -= 1;
            r.add_term(d, c * e[v]);
        }
        return r;
    }

    // Evaluate at a full point (one value per variable).
    Rational eval(const std::vector<Rational>& point) const {
        if (static_cast<int>(point.size()) != nvars_) throw dimension_error("evaluation point length mismatch");
        Rational sum(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (int v = 0; v < nvars_; ++v)
                if (e[v]) t *= rat_pow(point[v], e[v]);
            sum += t;
        }
        return sum;
    }

    // Evaluate at a partial assignment; every variable that actually occurs
    // must be covered, otherwise a missing_variable_error names it.
    Rational eval_partial(const std::map<int, Rational>& point) const {
        Rational sum(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (int v = 0; v < nvars_; ++v) {
                if (!e[v]) continue;
                auto it = point.find(v);
                if (it == point.end())
                    throw missing_variable_error(v, "evaluation point missing variable #" + std::to_string(v));
                t *= rat_pow(it->second, e[v]);
            }
            sum += t;
        }
        return sum;
    }

    // Simultaneous substitution: variable v is replaced by *images[v], all
    // images being polynomials in out_nvars variables. images[v] may be null
    // only when v does not occur. Powers of images are cached per variable.
    Polynomial substitute(const std::vector<const Polynomial*>& images, int out_nvars) const {
        if (static_cast<int>(images.size()) != nvars_) throw dimension_error("substitute: images length mismatch");
        std::vector<std::vector<Polynomial>> pw(nvars_); // pw[v][k] = images[v]^k
        Polynomial r(out_nvars);
        for (const auto& [e, c] : terms_) {
            Polynomial t = constant(out_nvars, c);
            for (int v = 0; v < nvars_; ++v) {
                if (!e[v]) continue;
                if (!images[v])
                    throw missing_variable_error(v, "substitute: no image for occurring variable #" + std::to_string(v));
                if (images[v]->nvars() != out_nvars) throw dimension_error("substitute: image variable count mismatch");
                auto& cache = pw[v];
                if (cache.empty()) cache.push_back(constant(out_nvars, 1));
                while (static_cast<int>(cache.size()) <= e[v]) cache.push_back(cache.back() * *images[v]);
                t = t * cache[e[v]];
            }
            r += t;
        }
        return r;
    }

  private:
    void check_var(int v) const {
        if (v < 0 || v >= nvars_) throw range_error("variable index out of range");
    }
    void check_same(const Polynomial& o) const {
        if (nvars_ != o.nvars_) throw dimension_error("mixing polynomials over different variable sets");
    }

    int nvars_;
    TermMap terms_;
};

} // namespace covops
