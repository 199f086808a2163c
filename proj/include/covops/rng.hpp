#pragma once
#include <cstdint>
#include <random>
#include <vector>

#include "covops/polynomial.hpp"

// Seeded sampling for the verification suites. All draws go through modulo
// reduction of raw mt19937_64 output: uniform_int_distribution is
// implementation-defined, which would break byte-identical reports across
// toolchains. The slight modulo bias is irrelevant here.

namespace covops {

class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    int int_in(int lo, int hi) { // inclusive bounds
        if (hi < lo) throw range_error("empty sampling range");
        return lo + static_cast<int>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // small exact rational, numerator in [-3,3], denominator in {1,2,3}.
    // evaluation order pinned (function-argument order is unspecified)
    Rational small_rational() {
        int num = int_in(-3, 3);
        int den = int_in(1, 3);
        return rat(num, den);
    }
    Rational small_nonzero() {
        while (true) {
            Rational q = small_rational();
            if (q != 0) return q;
        }
    }

    // random polynomial over the given variables with total degree <= maxdeg;
    // guaranteed nonzero
    Polynomial poly(int nvars, const std::vector<int>& vars, int maxdeg, int nterms) {
        Polynomial p(nvars);
        for (int t = 0; t < nterms; ++t) {
            Exponents e(nvars, 0);
            int d = int_in(0, maxdeg);
            for (int i = 0; i < d; ++i) e[vars[static_cast<size_t>(int_in(0, static_cast<int>(vars.size()) - 1))]] += 1;
            p.add_term(e, small_nonzero());
        }
        if (p.is_zero()) p += Polynomial::constant(nvars, 1);
        return p;
    }

    std::vector<Rational> point(int n) {
        std::vector<Rational> v(n);
        for (auto& x : v) x = small_rational();
        return v;
    }

  private:
    std::mt19937_64 eng_;
};

} // namespace covops
