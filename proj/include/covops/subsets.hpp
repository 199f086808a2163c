#pragma once
#include <algorithm>
#include <utility>
#include <vector>

#include "covops/polynomial.hpp"

// Index subsets of {1..m} (strictly increasing, 1-based) and the two sign
// conventions used by the minor identities:
//   sign_sum(I, J)       = (-1)^(sum of elements of I + sum of elements of J)
//   sign_positions(P:I, Q:J) = (-1)^(sum of the 1-based positions of the
//                              elements of P within I, plus same for Q in J)
// Also the Pochhammer / falling-binomial polynomials used as coefficients.

namespace covops {

using IndexSubset = std::vector<int>;

inline void check_subset(const IndexSubset& I, int m) {
    for (size_t i = 0; i < I.size(); ++i) {
        if (I[i] < 1 || I[i] > m) throw range_error("subset element out of range");
        if (i && I[i] <= I[i - 1]) throw range_error("subset not strictly increasing");
    }
}

inline int subset_sum(const IndexSubset& I) {
    int s = 0;
    for (int v : I) s += v;
    return s;
}

inline IndexSubset complement(const IndexSubset& I, int m) {
    check_subset(I, m);
    IndexSubset c;
    size_t p = 0;
    for (int v = 1; v <= m; ++v) {
        if (p < I.size() && I[p] == v) ++p;
        else c.push_back(v);
    }
    return c;
}

inline bool contains(const IndexSubset& I, const IndexSubset& P) {
    return std::includes(I.begin(), I.end(), P.begin(), P.end());
}

inline IndexSubset set_union(const IndexSubset& A, const IndexSubset& B) {
    IndexSubset r;
    std::set_union(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(r));
    return r;
}

inline IndexSubset set_minus(const IndexSubset& A, const IndexSubset& B) {
    IndexSubset r;
    std::set_difference(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(r));
    return r;
}

inline int sign_sum(const IndexSubset& I, const IndexSubset& J) {
    return (subset_sum(I) + subset_sum(J)) % 2 == 0 ? 1 : -1;
}

// positions (1-based ranks) of the elements of P inside I; P must be a subset of I
inline int position_sum(const IndexSubset& P, const IndexSubset& I) {
    if (!contains(I, P)) throw range_error("position_sum: P is not a subset of I");
    int s = 0;
    for (int v : P) s += static_cast<int>(std::lower_bound(I.begin(), I.end(), v) - I.begin()) + 1;
    return s;
}

inline int sign_positions(const IndexSubset& P, const IndexSubset& I, const IndexSubset& Q, const IndexSubset& J) {
    return (position_sum(P, I) + position_sum(Q, J)) % 2 == 0 ? 1 : -1;
}

// all l-element subsets of a sorted ground set, in lexicographic order
inline std::vector<IndexSubset> subsets_of(const IndexSubset& ground, int l) {
    int n = static_cast<int>(ground.size());
    if (l < 0 || l > n) throw range_error("subset cardinality out of range");
    std::vector<IndexSubset> out;
    IndexSubset idx(l);
    for (int i = 0; i < l; ++i) idx[i] = i;
    while (true) {
        IndexSubset cur(l);
        for (int i = 0; i < l; ++i) cur[i] = ground[idx[i]];
        out.push_back(std::move(cur));
        int i = l - 1;
        while (i >= 0 && idx[i] == n - l + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < l; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

inline std::vector<IndexSubset> subsets(int m, int k) {
    IndexSubset full(m);
    for (int i = 0; i < m; ++i) full[i] = i + 1;
    return subsets_of(full, k);
}

// all ordered pairs (I, J) of k-subsets of {1..m}, lexicographic in (I, J)
inline std::vector<std::pair<IndexSubset, IndexSubset>> subset_pairs(int m, int k) {
    auto ss = subsets(m, k);
    std::vector<std::pair<IndexSubset, IndexSubset>> out;
    out.reserve(ss.size() * ss.size());
    for (const auto& I : ss)
        for (const auto& J : ss) out.emplace_back(I, J);
    return out;
}

// rising factorial (base)(base+1)...(base+n-1); empty product for n = 0
inline Polynomial pochhammer(const Polynomial& base, int n) {
    if (n < 0) throw range_error("pochhammer with negative length");
    Polynomial r = Polynomial::constant(base.nvars(), 1);
    for (int i = 0; i < n; ++i) r = r * (base + Polynomial::constant(base.nvars(), i));
    return r;
}

inline Rational pochhammer(const Rational& base, int n) {
    if (n < 0) throw range_error("pochhammer with negative length");
    Rational r(1);
    for (int i = 0; i < n; ++i) r *= base + i;
    return r;
}

// generalized binomial coefficient C(a, j) = a(a-1)...(a-j+1)/j!
inline Polynomial gen_binom(const Polynomial& a, int j) {
    if (j < 0) throw range_error("binomial with negative lower index");
    Polynomial r = Polynomial::constant(a.nvars(), 1);
    for (int i = 0; i < j; ++i) r = r * (a - Polynomial::constant(a.nvars(), i));
    return r * (Rational(1) / rat_factorial(j));
}

inline Rational gen_binom(const Rational& a, int j) {
    if (j < 0) throw range_error("binomial with negative lower index");
    Rational r(1);
    for (int i = 0; i < j; ++i) r *= a - i;
    return r / rat_factorial(j);
}

inline Rational binom(int n, int k) { // ordinary C(n,k), n >= 0
    if (k < 0 || k > n) return 0;
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= rat(n - i, i + 1);
    return r;
}

} // namespace covops
