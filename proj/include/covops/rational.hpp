#pragma once
#include <gmpxx.h>
#include <string>
#include <string_view>

#include "covops/error.hpp"

// Exact rational scalars. GMP's mpq_class already keeps values canonical
// (positive denominator, gcd(num,den)=1) through arithmetic; the helpers here
// add strict parsing and integer powers.

namespace covops {

using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
    if (d == 0) throw range_error("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q" with optional leading '-'. Anything else is a parse error.
inline Rational rat_parse(std::string_view s) {
    if (s.empty()) throw parse_error("empty rational literal");
    std::string t(s);
    for (size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && (i == 0 || t[i - 1] == '/'));
        if (!ok) throw parse_error("bad rational literal: '" + t + "'");
    }
    try {
        Rational q(t);
        if (q.get_den() == 0) throw parse_error("zero denominator in '" + t + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational literal: '" + t + "'");
    }
}

inline std::string rat_str(const Rational& q) {
    return q.get_str(); // "p" or "p/q", canonical
}

inline int rat_sign(const Rational& q) { return sgn(q); }

// q^e for integer e (negative allowed when q != 0).
inline Rational rat_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (q == 0) {
        if (e < 0) throw not_defined_error("0 raised to a negative power");
        return Rational(0);
    }
    Rational base = e < 0 ? Rational(1) / q : q;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

// n! as a Rational (n small; used for multi-index factorials).
inline Rational rat_factorial(int n) {
    if (n < 0) throw range_error("factorial of negative integer");
    Rational r(1);
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace covops
