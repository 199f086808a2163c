#pragma once
// Deliberately dumb reference implementations the unit tests use to
// cross-check the library: a map-based polynomial with plain lex keys and a
// permutation-expansion determinant. No code is shared with the library's own
// arithmetic paths.
#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "covops/polynomial.hpp"

namespace naive {

using covops::Exponents;
using covops::Rational;
using Poly = std::map<Exponents, Rational>; // plain std::vector lex order

inline Poly from(const covops::Polynomial& p) {
    Poly r;
    for (const auto& [e, c] : p.terms()) r[e] = c;
    return r;
}

inline covops::Polynomial to(const Poly& p, int nvars) {
    covops::Polynomial r(nvars);
    for (const auto& [e, c] : p) r.add_term(e, c);
    return r;
}

inline Poly add(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [e, c] : b) {
        r[e] += c;
        if (r[e] == 0) r.erase(e);
    }
    return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r[e] += ca * cb;
            if (r[e] == 0) r.erase(e);
        }
    return r;
}

inline Poly diff(const Poly& a, int v) {
    Poly r;
    for (const auto& [e, c] : a) {
        if (e[v] == 0) continue;
        Exponents d = e;
        --d[v];
        r[d] += c * e[v];
        if (r[d] == 0) r.erase(d);
    }
    return r;
}

inline Rational eval(const Poly& a, const std::vector<Rational>& pt) {
    Rational sum(0);
    for (const auto& [e, c] : a) {
        Rational t = c;
        for (size_t v = 0; v < e.size(); ++v)
            for (int q = 0; q < e[v]; ++q) t *= pt[v];
        sum += t;
    }
    return sum;
}

inline int perm_sign(const std::vector<int>& p) {
    int s = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

// det of an n x n matrix of polynomial entries (row-major), by full
// permutation expansion
inline covops::Polynomial det_perm(const std::vector<covops::Polynomial>& entries, int n, int nvars) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    covops::Polynomial out(nvars);
    do {
        covops::Polynomial t = covops::Polynomial::constant(nvars, perm_sign(perm));
        for (int i = 0; i < n; ++i) t = t * entries[i * n + perm[i]];
        out += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace naive
